//! Temporary search utility: locate a braid word whose closure is the
//! alternating seven-crossing knot with determinant 15, pinned by its
//! published Jones polynomial.

use num_complex::Complex64;
use skeinkit::bracket::{jones_polynomial_in_a, state_sum, LoopExponent};
use skeinkit::coloring::tri_count;
use skeinkit::diagram::{braid_closure, Diagram, Sign};

fn jones_numeric(d: &Diagram, t: Complex64) -> Complex64 {
    let a = (-t.ln() / 4.0).exp();
    let a_inv = 1.0 / a;
    let weights: Vec<(Complex64, Complex64)> = d
        .crossings()
        .iter()
        .filter(|c| c.is_classical())
        .map(|c| match c.sign.unwrap() {
            Sign::Positive => (a, a_inv),
            Sign::Negative => (a_inv, a),
        })
        .collect();
    let delta = -a * a - a_inv * a_inv;
    let bracket = state_sum(d, &weights, &delta, LoopExponent::LoopsMinusOne).unwrap();
    (-a * a * a).powi(-d.writhe() as i32) * bracket
}

/// V(7_4) = t - 2t^2 + 3t^3 - 2t^4 + 3t^5 - 2t^6 + t^7 - t^8
fn v_7_4(t: Complex64) -> Complex64 {
    t - 2.0 * t.powi(2) + 3.0 * t.powi(3) - 2.0 * t.powi(4) + 3.0 * t.powi(5)
        - 2.0 * t.powi(6)
        + t.powi(7)
        - t.powi(8)
}

fn main() {
    let t1 = Complex64::new(0.7, 0.3);
    let t2 = Complex64::new(-0.4, 0.9);
    let refs = [
        (v_7_4(t1), v_7_4(t2), "7_4"),
        (v_7_4(1.0 / t1), v_7_4(1.0 / t2), "mirror 7_4"),
    ];
    let mut found = 0;
    let mut scan = |strands: usize, word: &[i32]| {
        if found >= 4 {
            return;
        }
        let Ok(d) = braid_closure(strands, word) else { return };
        if d.component_count().unwrap() != 1 || d.unknot_components() > 0 {
            return;
        }
        let v1 = jones_numeric(&d, t1);
        for (r1, r2, name) in &refs {
            if (v1 - r1).norm() < 1e-8 && (jones_numeric(&d, t2) - r2).norm() < 1e-8 {
                let tri = tri_count(&d).unwrap();
                println!(
                    "HIT {name}: strands={strands} word={word:?} crossings={} tri={tri} planar={} f={}",
                    d.classical_count(),
                    d.is_planar(),
                    jones_polynomial_in_a(&d).unwrap(),
                );
                found += 1;
            }
        }
    };

    // braid words of length 7..=9 on 3 and 4 strands
    for strands in [3usize, 4] {
        let gens: Vec<i32> = (1..strands as i32)
            .flat_map(|g| [g, -g])
            .collect();
        for len in 7..=9 {
            let mut word = vec![0i32; len];
            enumerate(&gens, &mut word, 0, &mut scan, strands);
            if found >= 4 {
                break;
            }
        }
        if found >= 4 {
            break;
        }
    }
    println!("done, hits: {found}");
}

fn enumerate(
    gens: &[i32],
    word: &mut Vec<i32>,
    pos: usize,
    scan: &mut impl FnMut(usize, &[i32]),
    strands: usize,
) {
    if pos == word.len() {
        scan(strands, word);
        return;
    }
    for &g in gens {
        // skip words with an immediate cancellation
        if pos > 0 && word[pos - 1] == -g {
            continue;
        }
        word[pos] = g;
        enumerate(gens, word, pos + 1, scan, strands);
    }
}
