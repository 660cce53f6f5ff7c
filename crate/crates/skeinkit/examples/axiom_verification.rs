//! Verify the Reidemeister constraint systems symbolically and reproduce
//! the loop-count table of the three-crossing slide.
//!
//! ```bash
//! cargo run -p skeinkit --example axiom_verification
//! ```

use skeinkit::algebra::CoefficientScheme;
use skeinkit::axioms::{
    kink_factors, r3_loop_table, verify_out_equation, verify_r2_equations, verify_r3_equations,
};

fn main() {
    for (name, scheme) in [
        ("symbolic", CoefficientScheme::symbolic()),
        ("nor", CoefficientScheme::nor()),
    ] {
        let r2 = verify_r2_equations(&scheme);
        let r3 = verify_r3_equations(&scheme);
        println!(
            "{name}: R2 {}/{} satisfied, R3 {}/{} satisfied",
            r2.satisfied_count(),
            r2.entries.len(),
            r3.satisfied_count(),
            r3.entries.len()
        );
        let (pos, neg, unit) = kink_factors(&scheme);
        println!("  kink factors: positive {pos}, negative {neg}, product is one: {unit}");
        for i in 0..5 {
            let e = verify_out_equation(i, &scheme);
            println!("  closure {i}: {}", if e.ok { "equal" } else { "UNEQUAL" });
        }
    }

    println!("\nloop counts (left side / right side) per closure and smoothing triple:");
    let table = r3_loop_table();
    for (i, row) in table.rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|(l, r)| format!("{l}/{r}")).collect();
        println!("  closure {i}: {}", cells.join("  "));
    }
}
