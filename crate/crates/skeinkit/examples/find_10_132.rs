//! Temporary search utility: locate a braid word whose closure shares the
//! Jones polynomial of 5_1 without being 5_1.

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
    let w = d.writhe();
    (-a * a * a).powi(-w as i32) * bracket
}

fn main() {
    let five_one = Diagram::from_pd("X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]")
        .unwrap();
    let t1 = Complex64::new(0.7, 0.3);
    let t2 = Complex64::new(-0.4, 0.9);
    let refs = [
        (jones_numeric(&five_one, t1), jones_numeric(&five_one, t2), "5_1"),
        (
            jones_numeric(&five_one.mirror(), t1),
            jones_numeric(&five_one.mirror(), t2),
            "mirror 5_1",
        ),
    ];
    let nor_ref = multiset_text(&nor_phi(&five_one).unwrap());
    let nor_ref_m = multiset_text(&nor_phi(&five_one.mirror()).unwrap());
    println!("nor(5_1) = {nor_ref:?}");
    println!("nor(mirror 5_1) = {nor_ref_m:?}");
    println!("jones(5_1) = {}", jones_polynomial_in_a(&five_one).unwrap());

    let hits = std::cell::Cell::new(0usize);
    let scan = |strands: usize, word: &[i32]| {
        let Ok(d) = braid_closure(strands, word) else { return };
        if d.component_count().unwrap() != 1 || d.unknot_components() > 0 {
            return;
        }
        let v1 = jones_numeric(&d, t1);
        for (r1, r2, name) in &refs {
            if (v1 - r1).norm() < 1e-8 {
                let v2 = jones_numeric(&d, t2);
                if (v2 - r2).norm() < 1e-8 {
                    // exact confirmation + separation check
                    let f = jones_polynomial_in_a(&d).unwrap();
                    let target = if *name == "5_1" {
                        jones_polynomial_in_a(&five_one).unwrap()
                    } else {
                        jones_polynomial_in_a(&five_one.mirror()).unwrap()
                    };
                    if f != target {
                        return;
                    }
                    let nor = multiset_text(&nor_phi(&d).unwrap());
                    let reference = if *name == "5_1" { &nor_ref } else { &nor_ref_m };
                    let separated = nor != *reference;
                    println!(
                        "HIT vs {name}: strands={strands} word={word:?} crossings={} nor={nor:?} separated={separated}",
                        d.classical_count()
                    );
                    hits.set(hits.get() + 1);
                }
            }
        }
    };

    // all 3-braid syllable words with 10..=12 crossings
    for total in 10..=12 {
        let mut comp = Vec::new();
        compositions(total, &mut comp, &mut |parts| {
            // syllables alternate between generators 1 and 2
            let k = parts.len();
            for signs in 0..(1u32 << k) {
                let mut word = Vec::new();
                for (i, &p) in parts.iter().enumerate() {
                    let gen = if i % 2 == 0 { 1 } else { 2 };
                    let s: i32 = if signs >> i & 1 == 0 { 1 } else { -1 };
                    for _ in 0..p {
                        word.push(gen * s);
                    }
                }
                scan(3, &word);
            }
        });
    }
    println!("3-braid scan done, hits so far: {}", hits.get());

    // 4-braid twisted-torus style families
    for total in 10..=12 {
        let mut comp = Vec::new();
        compositions(total, &mut comp, &mut |parts| {
            if parts.len() > 6 {
                return;
            }
            let k = parts.len();
            // generator pattern cycles 1,2,3,2,...
            let patterns: [&[i32]; 4] = [&[1, 2, 3], &[1, 2, 3, 2], &[1, 3, 2], &[2, 1, 3, 1]];
            for pat in patterns {
                for signs in 0..(1u32 << k) {
                    let mut word = Vec::new();
                    for (i, &p) in parts.iter().enumerate() {
                        let gen = pat[i % pat.len()];
                        let s: i32 = if signs >> i & 1 == 0 { 1 } else { -1 };
                        for _ in 0..p {
                            word.push(gen * s);
                        }
                    }
                    scan(4, &word);
                }
            }
        });
    }
    println!("total hits: {}", hits.get());
}

fn compositions(n: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if n == 0 {
        f(acc);
        return;
    }
    for first in 1..=n {
        acc.push(first);
        compositions(n - first, acc, f);
        acc.pop();
    }
}
