//! The two-variable bracket driven by Fox tricolorings.
//!
//! Single-color crossings are smoothed Kauffman-style in the variable x.
//! Mixed-color crossings admit no color-compatible smoothing; they
//! contribute the fixed weight `y^sign` and stay transparent for loop
//! counting. This is the reading under which the bracket is actually
//! invariant under the moves (smoothing mixed crossings both ways would
//! let the y-span grow under a second Reidemeister move) and it realizes
//! the advertised bounds: the y-exponent bounds the number of
//! mixed-color crossings from below, the x-span the single-color ones.

use crate::algebra::{LaurentPoly, Ring, VarSet};
use crate::coloring::{classify_tricolor, enumerate_tricolorings, TricolorKind, Tricoloring};
use crate::diagram::Diagram;

use super::engine::{state_sum_monomial_selective, LoopExponent, SmoothEntry};
use super::{BracketError, InvariantValue};

/// `V(D, λ)` for one tricoloring: loop value `-x^2 - x^-2` with exponent
/// `|S| - 1`, normalized by `(-x^3)^{-w(D)}`.
pub fn tricolor_v(d: &Diagram, coloring: &Tricoloring) -> Result<LaurentPoly, BracketError> {
    let vars = VarSet::tricolor();
    let x = LaurentPoly::monomial(&vars, 1, &[1, 0]);
    let x_inv = LaurentPoly::monomial(&vars, 1, &[-1, 0]);
    let mut entries = Vec::with_capacity(d.classical_count());
    let mut poly_writhe: i32 = 0;
    for (ci, c) in d.crossings().iter().enumerate() {
        if !c.is_classical() {
            continue;
        }
        let ty = classify_tricolor(d, coloring, ci)?;
        let positive = ty.sign == crate::diagram::Sign::Positive;
        match ty.kind {
            TricolorKind::Mono => entries.push(if positive {
                SmoothEntry::Weighted(x.clone(), x_inv.clone())
            } else {
                SmoothEntry::Weighted(x_inv.clone(), x.clone())
            }),
            TricolorKind::Poly => {
                poly_writhe += if positive { 1 } else { -1 };
                entries.push(SmoothEntry::Transparent);
            }
        }
    }
    let delta = LaurentPoly::monomial(&vars, -1, &[2, 0])
        .add(&LaurentPoly::monomial(&vars, -1, &[-2, 0]));
    let bracket = state_sum_monomial_selective(d, &entries, &delta, LoopExponent::LoopsMinusOne)?;
    let y_factor = LaurentPoly::monomial(&vars, 1, &[0, 1])
        .monomial_pow(poly_writhe)
        .expect("monomial power of a unit");
    let factor = LaurentPoly::monomial(&vars, -1, &[3, 0])
        .monomial_pow(-d.writhe() as i32)
        .expect("monomial power of a unit");
    Ok(factor.mul(&y_factor).mul(&bracket))
}

/// The multiset `{ V(D, λ) }` over all tricolorings.
pub fn tricolor_invariant(d: &Diagram) -> Result<Vec<InvariantValue<LaurentPoly>>, BracketError> {
    let set = enumerate_tricolorings(d)?;
    let colorings = set.colorings.ok_or_else(|| {
        BracketError::TooManyCrossings(d.classical_count())
    })?;
    colorings
        .iter()
        .enumerate()
        .map(|(i, coloring)| {
            Ok(InvariantValue { coloring: i, value: tricolor_v(d, coloring)? })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::{jones_polynomial_in_a, multiset_text};
    use crate::diagram::tests::TREFOIL;
    use crate::diagram::{MoveSpec, Sign, Site};

    #[test]
    fn trivial_coloring_reduces_to_the_kauffman_normalization() {
        let d = Diagram::from_pd(TREFOIL).unwrap();
        let all = enumerate_tricolorings(&d).unwrap().colorings.unwrap();
        let trivial = all.iter().find(|t| t.is_trivial()).unwrap();
        let v = tricolor_v(&d, trivial).unwrap();
        // no y appears, and substituting x for A in f(D) gives the value
        for (expo, _) in v.terms() {
            assert_eq!(expo[1], 0, "unexpected y power in {v}");
        }
        let f = jones_polynomial_in_a(&d).unwrap();
        let expected: String = f.to_string().replace('A', "x");
        assert_eq!(v.to_string(), expected);
    }

    #[test]
    fn kinked_unknot_normalizes_to_one() {
        for sign in [Sign::Positive, Sign::Negative] {
            let kinked = Diagram::unknots(1)
                .apply_move(&MoveSpec::R1Add { site: Site::Circle, sign, under_first: true })
                .unwrap();
            for v in tricolor_invariant(&kinked).unwrap() {
                assert_eq!(v.value.to_string(), "1");
            }
        }
    }

    #[test]
    fn trefoil_multiset_stable_under_r2() {
        let d = Diagram::from_pd(TREFOIL).unwrap();
        let spec = d
            .enumerate_moves(&[crate::diagram::MoveKind::R2Add])
            .into_iter()
            .next()
            .unwrap();
        let pushed = d.apply_move(&spec).unwrap();
        assert_eq!(
            multiset_text(&tricolor_invariant(&d).unwrap()),
            multiset_text(&tricolor_invariant(&pushed).unwrap())
        );
    }
}
