use skeinkit::axioms::{omega3a_closed, omega3a_closures, r3_loop_table};
use skeinkit::diagram::MoveKind;

fn main() {
    for closure in 0..5 {
        let left = omega3a_closed(closure, false);
        let right = omega3a_closed(closure, true);
        println!("== closure {closure}");
        println!("left:  {:?}", left.crossings().iter().map(|c| (c.slots, c.sign)).collect::<Vec<_>>());
        println!("right: {:?}", right.crossings().iter().map(|c| (c.slots, c.sign)).collect::<Vec<_>>());
        let sites = left.enumerate_moves(&[MoveKind::R3]);
        println!("left R3 sites: {sites:?}");
        for m in &sites {
            match left.apply_move(m) {
                Ok(out) => println!("  {m:?} -> iso_to_right={:?} crossings={:?}", out.isomorphic(&right), out.crossings().iter().map(|c| (c.slots, c.sign)).collect::<Vec<_>>()),
                Err(e) => println!("  {m:?} -> error {e}"),
            }
        }
        let rsites = right.enumerate_moves(&[MoveKind::R3]);
        println!("right R3 sites: {rsites:?}");
    }
    let _ = (omega3a_closures(), r3_loop_table());
}
