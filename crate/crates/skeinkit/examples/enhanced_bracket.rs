//! The bicolor-enhanced bracket: a two-valued knot invariant over the
//! five-variable Laurent ring, with the two values exchanged by the
//! east-west bar involution.
//!
//! ```bash
//! cargo run -p skeinkit --example enhanced_bracket
//! ```

use skeinkit::bracket::{bar_involution, enhanced_f, enhanced_invariant};
use skeinkit::coloring::enumerate_bicolorings;
use skeinkit::diagram::Diagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let trefoil = Diagram::from_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")?;
    let colorings = enumerate_bicolorings(&trefoil)?;
    println!("trefoil has {} bicolorings", colorings.len());
    for (i, coloring) in colorings.iter().enumerate() {
        println!("  coloring {i}: {}", coloring.to_json());
        println!("    F = {}", enhanced_f(&trefoil, coloring)?);
    }

    // the two values are a single bar-orbit
    let values = enhanced_invariant(&trefoil)?;
    let barred = bar_involution(&values[0].value);
    println!(
        "bar involution maps value 0 onto value 1: {}",
        barred == values[1].value
    );

    // the unknot evaluates to the loop value d for both colorings
    let unknot = Diagram::unknots(1);
    for v in enhanced_invariant(&unknot)? {
        println!("unknot coloring {}: F = {}", v.coloring, v.value);
    }
    Ok(())
}
