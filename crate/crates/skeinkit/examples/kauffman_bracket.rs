//! Compute the Kauffman bracket and the writhe-normalized polynomial of a
//! few diagrams, and watch the bracket react to mirroring.
//!
//! ```bash
//! cargo run -p skeinkit --example kauffman_bracket
//! ```

use skeinkit::bracket::{jones_polynomial_in_a, kauffman_bracket};
use skeinkit::diagram::Diagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let trefoil = Diagram::from_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")?;
    println!("left trefoil, writhe {}", trefoil.writhe());
    println!("  <D>  = {}", kauffman_bracket(&trefoil)?);
    println!("  f(D) = {}", jones_polynomial_in_a(&trefoil)?);

    let mirror = trefoil.mirror();
    println!("right trefoil, writhe {}", mirror.writhe());
    println!("  <D>  = {}", kauffman_bracket(&mirror)?);
    println!("  f(D) = {}", jones_polynomial_in_a(&mirror)?);

    // a disjoint circle multiplies the bracket by -A^2 - A^-2
    let mut with_circle = Diagram::parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] unknots=1")?;
    with_circle = with_circle.oriented()?;
    println!("trefoil plus a split circle");
    println!("  <D>  = {}", kauffman_bracket(&with_circle)?);
    Ok(())
}
