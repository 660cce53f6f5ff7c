//! Temporary search v2: full scan of short 4-braid words for a knot with
//! the Jones polynomial of 5_1 that the finite-ring bracket separates
//! from 5_1.

use num_complex::Complex64;
use skeinkit::bracket::{
    jones_polynomial_in_a, multiset_text, nor_phi, state_sum, LoopExponent,
};
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

fn is_knot_perm(strands: usize, word: &[i32]) -> bool {
    let mut perm: Vec<usize> = (0..strands).collect();
    for &l in word {
        let i = l.unsigned_abs() as usize - 1;
        perm.swap(i, i + 1);
    }
    // single cycle through all strands
    let mut seen = 1;
    let mut at = perm[0];
    while at != 0 {
        at = perm[at];
        seen += 1;
    }
    seen == strands
}

fn main() {
    let five_one = Diagram::from_pd("X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]")
        .unwrap();
    let t1 = Complex64::new(0.7, 0.3);
    let t2 = Complex64::new(-0.4, 0.9);
    let t3 = Complex64::new(1.2, -0.5);
    let refs = [
        (
            [jones_numeric(&five_one, t1), jones_numeric(&five_one, t2), jones_numeric(&five_one, t3)],
            multiset_text(&nor_phi(&five_one).unwrap()),
            "5_1",
        ),
        (
            [
                jones_numeric(&five_one.mirror(), t1),
                jones_numeric(&five_one.mirror(), t2),
                jones_numeric(&five_one.mirror(), t3),
            ],
            multiset_text(&nor_phi(&five_one.mirror()).unwrap()),
            "mirror 5_1",
        ),
    ];

    // hand candidates first
    let hand: [&[i32]; 6] = [
        &[-1, -1, -1, -2, 1, -2, 3, -2, 3, -2],
        &[-1, -1, -1, -2, -1, -2, 3, -2, 3, -2],
        &[1, 1, 1, 2, -1, 2, -3, 2, -3, 2],
        &[-1, -1, -1, -1, -2, 1, -2, 3, -2, 3],
        &[-1, -1, -2, -1, -2, 3, -2, -2, 3, -2],
        &[1, 1, 2, 1, 2, -3, 2, 2, -3, 2],
    ];
    for w in hand {
        check(4, w, &refs, &five_one, t1, t2, t3);
    }

    // full scan: 4-braid words, first letter +1, no adjacent inverses
    for len in [10usize, 11] {
        println!("scanning length {len}...");
        let mut word = vec![0i32; len];
        word[0] = 1;
        scan_rec(&mut word, 1, &refs, &five_one, t1, t2, t3);
        println!("length {len} done");
    }
}

fn scan_rec(
    word: &mut Vec<i32>,
    pos: usize,
    refs: &[( [Complex64; 3], Vec<String>, &str); 2],
    five_one: &Diagram,
    t1: Complex64,
    t2: Complex64,
    t3: Complex64,
) {
    if pos == word.len() {
        if is_knot_perm(4, word) {
            check(4, word, refs, five_one, t1, t2, t3);
        }
        return;
    }
    for g in [1i32, -1, 2, -2, 3, -3] {
        if word[pos - 1] == -g {
            continue;
        }
        word[pos] = g;
        scan_rec(word, pos + 1, refs, five_one, t1, t2, t3);
    }
}

fn check(
    strands: usize,
    word: &[i32],
    refs: &[( [Complex64; 3], Vec<String>, &str); 2],
    five_one: &Diagram,
    t1: Complex64,
    t2: Complex64,
    t3: Complex64,
) {
    let Ok(d) = braid_closure(strands, word) else { return };
    if d.unknot_components() > 0 {
        return;
    }
    let v1 = jones_numeric(&d, t1);
    for (ref_vals, ref_nor, name) in refs {
        if (v1 - ref_vals[0]).norm() < 1e-8
            && (jones_numeric(&d, t2) - ref_vals[1]).norm() < 1e-8
            && (jones_numeric(&d, t3) - ref_vals[2]).norm() < 1e-8
        {
            let nor = multiset_text(&nor_phi(&d).unwrap());
            if nor != *ref_nor {
                let target = if *name == "5_1" {
                    jones_polynomial_in_a(five_one).unwrap()
                } else {
                    jones_polynomial_in_a(&five_one.mirror()).unwrap()
                };
                let exact = jones_polynomial_in_a(&d).unwrap() == target;
                println!(
                    "SEPARATED HIT vs {name}: word={word:?} crossings={} nor={nor:?} exact_jones={exact} planar={}",
                    d.classical_count(),
                    d.is_planar(),
                );
            }
        }
    }
}
