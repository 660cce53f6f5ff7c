//! The finite-ring specialization over `Z2[t]/(1+t+t^3)`: cheap exact
//! values that separate knots the Jones polynomial cannot.
//!
//! ```bash
//! cargo run -p skeinkit --example nor_specialization
//! ```

use num_complex::Complex64;
use skeinkit::bracket::{jones_eval, multiset_text, nor_phi};
use skeinkit::cli::builtin_table;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for entry in builtin_table() {
        let d = entry.diagram()?;
        let values = nor_phi(&d)?;
        if values.is_empty() {
            println!("{:<10} no bicoloring (virtual parity obstruction)", entry.name);
            continue;
        }
        println!("{:<10} {:?}", entry.name, multiset_text(&values));
    }

    // the motivating pair: identical Jones values, different multisets
    let table = builtin_table();
    let five = table.iter().find(|e| e.name == "5_1");
    let ten = table.iter().find(|e| e.name == "10_132");
    if let (Some(five), Some(ten)) = (five, ten) {
        let (d5, d10) = (five.diagram()?, ten.diagram()?);
        let t = Complex64::new(0.8, 0.4);
        println!(
            "jones gap at a sample point: {:.2e}",
            (jones_eval(&d5, t)? - jones_eval(&d10, t)?).norm()
        );
        println!("phi(5_1)    = {:?}", multiset_text(&nor_phi(&d5)?));
        println!("phi(10_132) = {:?}", multiset_text(&nor_phi(&d10)?));
    }
    Ok(())
}
