//! The bicolor-enhanced bracket over the five-variable Laurent ring.

use crate::algebra::{CoefficientScheme, LaurentPoly, Ring};
use crate::coloring::{classify_bicolor, enumerate_bicolorings, Bicoloring};
use crate::diagram::Diagram;

use super::engine::{state_sum_monomial, LoopExponent};
use super::{BracketError, InvariantValue};

/// `F(D, λ)`: the bracket of a bicolored diagram with the symbolic
/// coefficient scheme, loop exponent `|S|` (a lone circle contributes d),
/// normalized by the writhe factor `(-b/(na^2))^W(D)`.
pub fn enhanced_f(d: &Diagram, coloring: &Bicoloring) -> Result<LaurentPoly, BracketError> {
    let CoefficientScheme::Symbolic(scheme) = CoefficientScheme::symbolic() else {
        unreachable!()
    };
    let mut weights = Vec::with_capacity(d.classical_count());
    for (ci, c) in d.crossings().iter().enumerate() {
        if !c.is_classical() {
            continue;
        }
        let ty = classify_bicolor(d, coloring, ci)?;
        weights.push(scheme.weights(ty.dir, ty.sign == crate::diagram::Sign::Positive).clone());
    }
    let bracket = state_sum_monomial(d, &weights, &scheme.d, LoopExponent::Loops)?;
    let vars = bracket.vars().clone();
    // (-b n^-1 a^-2)^W
    let factor = LaurentPoly::monomial(&vars, -1, &[-2, 1, -1, 0, 0])
        .monomial_pow(d.writhe() as i32)
        .expect("monomial power of a unit");
    Ok(factor.mul(&bracket))
}

/// The multiset `{ F(D, λ) : λ }` over all bicolorings. Empty when the
/// diagram admits no bicoloring (possible only for virtual diagrams).
pub fn enhanced_invariant(d: &Diagram) -> Result<Vec<InvariantValue<LaurentPoly>>, BracketError> {
    let colorings = enumerate_bicolorings(d)?;
    colorings
        .iter()
        .enumerate()
        .map(|(i, coloring)| {
            Ok(InvariantValue { coloring: i, value: enhanced_f(d, coloring)? })
        })
        .collect()
}

/// The variable exchange `e <-> w` relating the values of the two
/// colorings of a knot diagram.
pub fn bar_involution(p: &LaurentPoly) -> LaurentPoly {
    p.substitute(&[("e", "w"), ("w", "e")])
        .expect("e and w live in the enhanced variable set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VarSet;
    use crate::bracket::multiset_text;
    use crate::diagram::tests::{HOPF, TREFOIL};
    use crate::diagram::{MoveSpec, Sign, Site};

    fn loop_value() -> LaurentPoly {
        let vars = VarSet::enhanced();
        LaurentPoly::monomial(&vars, -1, &[1, -1, 0, 0, 0])
            .add(&LaurentPoly::monomial(&vars, -1, &[-1, 1, 0, 0, 0]))
    }

    #[test]
    fn unknot_multiset_is_d_twice() {
        let d = Diagram::unknots(1);
        let values = enhanced_invariant(&d).unwrap();
        assert_eq!(values.len(), 2);
        let dv = loop_value();
        for v in &values {
            assert_eq!(v.value, dv);
        }
    }

    #[test]
    fn kinked_unknot_is_d_for_all_four_kinks_and_both_colorings() {
        let dv = loop_value();
        for sign in [Sign::Positive, Sign::Negative] {
            for under_first in [true, false] {
                let kinked = Diagram::unknots(1)
                    .apply_move(&MoveSpec::R1Add { site: Site::Circle, sign, under_first })
                    .unwrap();
                let values = enhanced_invariant(&kinked).unwrap();
                assert_eq!(values.len(), 2);
                for v in &values {
                    assert_eq!(v.value, dv, "kink {sign:?}/{under_first} gave {}", v.value);
                }
            }
        }
    }

    #[test]
    fn knot_values_are_exchanged_by_the_bar() {
        for pd in [TREFOIL, HOPF] {
            let d = Diagram::from_pd(pd).unwrap();
            let values = enhanced_invariant(&d).unwrap();
            let texts = multiset_text(&values);
            let barred: Vec<InvariantValue<LaurentPoly>> = values
                .iter()
                .map(|v| InvariantValue { coloring: v.coloring, value: bar_involution(&v.value) })
                .collect();
            assert_eq!(texts, multiset_text(&barred));
        }
    }

    #[test]
    fn trefoil_agrees_with_its_kinked_diagram() {
        let d = Diagram::from_pd(TREFOIL).unwrap();
        let kinked = d
            .apply_move(&MoveSpec::R1Add {
                site: Site::Edge(4),
                sign: Sign::Negative,
                under_first: false,
            })
            .unwrap();
        assert_eq!(
            multiset_text(&enhanced_invariant(&d).unwrap()),
            multiset_text(&enhanced_invariant(&kinked).unwrap())
        );
    }
}
