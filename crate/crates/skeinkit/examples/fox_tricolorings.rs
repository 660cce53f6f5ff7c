//! Fox tricolorings: solve the mod-3 system, count solutions, and
//! classify crossings by color pattern.
//!
//! ```bash
//! cargo run -p skeinkit --example fox_tricolorings
//! ```

use skeinkit::cli::builtin_table;
use skeinkit::coloring::{classify_tricolor, enumerate_tricolorings, tri_count, TricolorKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for entry in builtin_table() {
        let d = entry.diagram()?;
        println!("{:<10} tri = {}", entry.name, tri_count(&d)?);
    }

    let seven_four = builtin_table()
        .into_iter()
        .find(|e| e.name == "7_4")
        .expect("bundled table has 7_4")
        .diagram()?;
    let set = enumerate_tricolorings(&seven_four)?;
    let colorings = set.colorings.expect("within the enumeration cap");
    println!("\n7_4 colorings ({} total):", set.count);
    for (i, coloring) in colorings.iter().enumerate() {
        let mut mono = 0;
        let mut poly = 0;
        for ci in 0..seven_four.crossings().len() {
            match classify_tricolor(&seven_four, coloring, ci)?.kind {
                TricolorKind::Mono => mono += 1,
                TricolorKind::Poly => poly += 1,
            }
        }
        println!(
            "  {i}: {} single-color, {poly} mixed  {}",
            mono,
            if coloring.is_trivial() { "(trivial)" } else { "" }
        );
    }
    Ok(())
}
