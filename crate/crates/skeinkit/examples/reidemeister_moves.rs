//! Rewrite diagrams by Reidemeister moves and watch every invariant stay
//! put: the executable content of the invariance theorems.
//!
//! ```bash
//! cargo run -p skeinkit --example reidemeister_moves
//! ```

use skeinkit::axioms::{move_invariance_check, random_walk, InvariantKind, WalkPolicy};
use skeinkit::diagram::{Diagram, MoveKind, MoveSpec, Sign, Site};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let trefoil = Diagram::from_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")?;

    // a single explicit kink
    let kinked = trefoil.apply_move(&MoveSpec::R1Add {
        site: Site::Edge(2),
        sign: Sign::Positive,
        under_first: true,
    })?;
    println!(
        "kinked trefoil: {} crossings, writhe {}",
        kinked.classical_count(),
        kinked.writhe()
    );

    // a seeded random walk through move space
    let kinds = [
        MoveKind::R1Add,
        MoveKind::R1Remove,
        MoveKind::R2Add,
        MoveKind::R2Remove,
        MoveKind::R3,
    ];
    let walk = random_walk(&trefoil, &kinds, 15, 2024, WalkPolicy::default());
    println!("walk of {} moves:", walk.len());
    for (spec, image) in &walk {
        println!("  {:>2} crossings after {spec:?}", image.classical_count());
    }
    for kind in [
        InvariantKind::Jones,
        InvariantKind::Enhanced,
        InvariantKind::Nor,
        InvariantKind::Tricolor,
    ] {
        let report = move_invariance_check(&trefoil, &walk, kind)?;
        println!("{kind:?}: all equal = {}", report.all_equal());
    }
    Ok(())
}
