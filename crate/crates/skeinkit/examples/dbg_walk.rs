use skeinkit::axioms::{InvariantKind, WalkPolicy};
use skeinkit::diagram::{Diagram, MoveKind};

fn main() {
    let kinds = [
        MoveKind::R1Add,
        MoveKind::R1Remove,
        MoveKind::R2Add,
        MoveKind::R2Remove,
        MoveKind::R3,
    ];
    let mut checked = 0u64;
    for entry in skeinkit::cli::builtin_table() {
        let d = entry.diagram().unwrap();
        if !d.crossings().iter().all(|c| c.is_classical()) || d.classical_count() > 10 {
            continue;
        }
        let seed = 0xC0FFEE + checked;
        checked += 1;
        let baseline = InvariantKind::Enhanced.canonical_value(&d).unwrap();
        let walk = skeinkit::axioms::random_walk(&d, &kinds, 20, seed, WalkPolicy::default());
        let mut prev = d.clone();
        for (step, (spec, image)) in walk.iter().enumerate() {
            let planar = image.is_planar();
            let value = InvariantKind::Enhanced.canonical_value(image).unwrap();
            if !planar || value != baseline {
                println!("{} step {step}: {spec:?}", entry.name);
                println!("  planar={planar}");
                println!("  prev: {:?} unknots={}", prev.crossings().iter().map(|c| (c.slots, c.sign)).collect::<Vec<_>>(), prev.unknot_components());
                println!("  next: {:?} unknots={}", image.crossings().iter().map(|c| (c.slots, c.sign)).collect::<Vec<_>>(), image.unknot_components());
                let pv = InvariantKind::Enhanced.canonical_value(&prev).unwrap();
                println!("  prev invariant equal to baseline: {}", pv == baseline);
                return;
            }
            prev = image.clone();
        }
        println!("{}: walk of {} ok", entry.name, walk.len());
    }
}
