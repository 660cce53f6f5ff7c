//! The two-variable tricolor bracket: its y-exponent bounds the number of
//! mixed-color crossings from below, its x-span the single-color ones.
//!
//! ```bash
//! cargo run -p skeinkit --example tricolor_bracket
//! ```

use skeinkit::bracket::{multiset_text, tricolor_invariant, tricolor_v};
use skeinkit::coloring::enumerate_tricolorings;
use skeinkit::diagram::Diagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let table = skeinkit::cli::builtin_table();
    for name in ["3_1", "4_1", "7_4"] {
        let d = table
            .iter()
            .find(|e| e.name == name)
            .expect("bundled entry")
            .diagram()?;
        println!("{name}: {:?}", multiset_text(&tricolor_invariant(&d)?));
    }

    // per-coloring values on the trefoil
    let trefoil = Diagram::from_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")?;
    let colorings = enumerate_tricolorings(&trefoil)?.colorings.unwrap();
    for (i, coloring) in colorings.iter().enumerate() {
        println!(
            "trefoil coloring {i}{}: V = {}",
            if coloring.is_trivial() { " (trivial)" } else { "" },
            tricolor_v(&trefoil, coloring)?
        );
    }
    Ok(())
}
