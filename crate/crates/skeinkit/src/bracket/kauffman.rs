//! Classical Kauffman bracket and Jones polynomial evaluation.

use num_complex::Complex64;

use crate::algebra::{LaurentPoly, Ring, VarSet};
use crate::diagram::{Diagram, Sign};

use super::engine::{kauffman_a_choice, state_sum_monomial, LoopExponent, Smoothing};
use super::BracketError;

/// The Kauffman bracket `<D>` in the one-variable Laurent ring `Z[A,A^-1]`:
/// weight A for the unoriented A-smoothing (joining slots `{0,1}` and
/// `{2,3}`), `A^-1` for the B-smoothing, loop value `-A^2 - A^-2` with
/// exponent `|S| - 1`. Virtual crossings pass through unsmoothed.
pub fn kauffman_bracket(d: &Diagram) -> Result<LaurentPoly, BracketError> {
    let diagram = ensure_oriented(d)?;
    let vars = VarSet::kauffman();
    let a = LaurentPoly::monomial(&vars, 1, &[1]);
    let a_inv = LaurentPoly::monomial(&vars, 1, &[-1]);
    let weights: Vec<(LaurentPoly, LaurentPoly)> = diagram
        .crossings()
        .iter()
        .filter(|c| c.is_classical())
        .map(|c| {
            let sign = c.sign.expect("oriented diagram");
            // translate the A/B choice into the frame-relative H/V pair
            match kauffman_a_choice(sign) {
                Smoothing::H => (a.clone(), a_inv.clone()),
                Smoothing::V => (a_inv.clone(), a.clone()),
            }
        })
        .collect();
    let loop_value = LaurentPoly::monomial(&vars, -1, &[2])
        .add(&LaurentPoly::monomial(&vars, -1, &[-2]));
    state_sum_monomial(&diagram, &weights, &loop_value, LoopExponent::LoopsMinusOne)
}

/// The writhe-normalized bracket `f(D) = (-A^3)^{-w(D)} <D>`, still in the
/// variable A. Substituting `A = t^{-1/4}` gives the Jones polynomial.
pub fn jones_polynomial_in_a(d: &Diagram) -> Result<LaurentPoly, BracketError> {
    let diagram = ensure_oriented(d)?;
    let bracket = kauffman_bracket(&diagram)?;
    let vars = bracket.vars().clone();
    let w = diagram.writhe();
    let factor = LaurentPoly::monomial(&vars, -1, &[3])
        .monomial_pow(-w as i32)
        .expect("monomial power of a unit");
    Ok(factor.mul(&bracket))
}

/// Numeric Jones value `V(t)`: evaluate `f(D)` at `A = t^{-1/4}` with the
/// principal branch.
pub fn jones_eval(d: &Diagram, t: Complex64) -> Result<Complex64, BracketError> {
    if t.norm_sqr() == 0.0 {
        return Err(BracketError::JonesAtZero);
    }
    let f = jones_polynomial_in_a(d)?;
    let a = (-t.ln() / 4.0).exp();
    Ok(f.eval_complex(&[a]).expect("nonzero evaluation point"))
}

fn ensure_oriented(d: &Diagram) -> Result<Diagram, BracketError> {
    if d.is_oriented() || d.crossings().is_empty() {
        Ok(d.clone())
    } else {
        Ok(d.oriented()?)
    }
}

/// Per-crossing Kauffman weight sign check used by tests: at positive
/// crossings H is the A-smoothing, at negative ones V is.
pub(crate) fn a_is_h(sign: Sign) -> bool {
    matches!(kauffman_a_choice(sign), Smoothing::H)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::tests::{FIGURE_EIGHT, HOPF, TREFOIL};

    fn poly(vars: &VarSet, terms: &[(i64, i32)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero(vars);
        for &(c, e) in terms {
            p = p.add(&LaurentPoly::monomial(vars, c, &[e]));
        }
        p
    }

    #[test]
    fn unknot_bracket_is_one() {
        let d = Diagram::unknots(1);
        assert_eq!(kauffman_bracket(&d).unwrap().to_string(), "1");
    }

    #[test]
    fn two_split_unknots() {
        let d = Diagram::unknots(2);
        let vars = VarSet::kauffman();
        assert_eq!(
            kauffman_bracket(&d).unwrap(),
            poly(&vars, &[(-1, 2), (-1, -2)])
        );
    }

    #[test]
    fn right_trefoil_bracket() {
        // mirror of the table trefoil, writhe +3
        let d = Diagram::from_pd(TREFOIL).unwrap().mirror();
        assert_eq!(d.writhe(), 3);
        let vars = VarSet::kauffman();
        let expected = poly(&vars, &[(-1, 5), (-1, -3), (1, -7)]);
        assert_eq!(kauffman_bracket(&d).unwrap(), expected);
    }

    #[test]
    fn mirror_swaps_a_and_a_inverse() {
        for pd in [TREFOIL, FIGURE_EIGHT, HOPF] {
            let d = Diagram::from_pd(pd).unwrap();
            let b = kauffman_bracket(&d).unwrap();
            let bm = kauffman_bracket(&d.mirror()).unwrap();
            let swapped: LaurentPoly = {
                let mut p = LaurentPoly::zero(b.vars());
                for (e, c) in b.terms() {
                    p.add_term(e.iter().map(|x| -x).collect(), c.clone());
                }
                p
            };
            assert_eq!(bm, swapped);
        }
    }

    #[test]
    fn jones_unknot_is_one() {
        let d = Diagram::unknots(1);
        for t in [
            Complex64::new(2.0, 0.0),
            Complex64::new(0.3, 1.7),
            Complex64::new(-1.0, 0.0),
        ] {
            let v = jones_eval(&d, t).unwrap();
            assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
        assert_eq!(
            jones_eval(&d, Complex64::new(0.0, 0.0)),
            Err(BracketError::JonesAtZero)
        );
    }

    #[test]
    fn jones_right_trefoil_samples() {
        // V(right trefoil) = t + t^3 - t^4
        let d = Diagram::from_pd(TREFOIL).unwrap().mirror();
        for t in [
            Complex64::new(1.5, 0.0),
            Complex64::new(0.2, 0.9),
            Complex64::new(-0.7, 0.4),
        ] {
            let v = jones_eval(&d, t).unwrap();
            let expected = t + t.powi(3) - t.powi(4);
            assert!((v - expected).norm() < 1e-9, "at t={t}: {v} vs {expected}");
        }
    }

    #[test]
    fn disjoint_circle_multiplies_by_loop_value() {
        let mut d = Diagram::from_pd(FIGURE_EIGHT).unwrap();
        let b = kauffman_bracket(&d).unwrap();
        d.set_unknot_components(1);
        let b2 = kauffman_bracket(&d).unwrap();
        let vars = VarSet::kauffman();
        let delta = poly(&vars, &[(-1, 2), (-1, -2)]);
        assert_eq!(b2, b.mul(&delta));
    }

    #[test]
    fn smoothing_convention_consistency() {
        assert!(a_is_h(Sign::Positive));
        assert!(!a_is_h(Sign::Negative));
    }
}
