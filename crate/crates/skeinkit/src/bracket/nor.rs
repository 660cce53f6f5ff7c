//! The finite-ring specialization of the enhanced bracket over
//! `Z2[t]/(1+t+t^3)`.

use crate::algebra::{CoefficientScheme, F8Element, Ring};
use crate::coloring::{classify_bicolor, enumerate_bicolorings};
use crate::diagram::Diagram;

use super::engine::{state_sum, LoopExponent};
use super::{BracketError, InvariantValue};

/// For each bicoloring: the bracket with the finite-ring scheme and loop
/// exponent `|S|`, times the writhe factor `t^W(D)` (the image of
/// `(-b/(na^2))^W` under `a = 1, b = t, n = 1` in characteristic two).
pub fn nor_phi(d: &Diagram) -> Result<Vec<InvariantValue<F8Element>>, BracketError> {
    let CoefficientScheme::Nor(scheme) = CoefficientScheme::nor() else {
        unreachable!()
    };
    let colorings = enumerate_bicolorings(d)?;
    let t = F8Element::T;
    let factor = t.pow(d.writhe());
    let mut out = Vec::with_capacity(colorings.len());
    for (i, coloring) in colorings.iter().enumerate() {
        let mut weights = Vec::with_capacity(d.classical_count());
        for (ci, c) in d.crossings().iter().enumerate() {
            if !c.is_classical() {
                continue;
            }
            let ty = classify_bicolor(d, coloring, ci)?;
            weights
                .push(*scheme.weights(ty.dir, ty.sign == crate::diagram::Sign::Positive));
        }
        let bracket = state_sum(d, &weights, &scheme.d, LoopExponent::Loops)?;
        out.push(InvariantValue { coloring: i, value: Ring::mul(&bracket, &factor) });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::multiset_text;
    use crate::diagram::tests::TREFOIL;
    use crate::diagram::{MoveSpec, Sign, Site};

    #[test]
    fn unknot_gives_loop_value_per_coloring() {
        let d = Diagram::unknots(1);
        let values = nor_phi(&d).unwrap();
        assert_eq!(multiset_text(&values), vec!["1+t+t^2", "1+t+t^2"]);
    }

    #[test]
    fn kinked_unknot_matches_unknot() {
        for sign in [Sign::Positive, Sign::Negative] {
            let kinked = Diagram::unknots(1)
                .apply_move(&MoveSpec::R1Add { site: Site::Circle, sign, under_first: true })
                .unwrap();
            assert_eq!(
                multiset_text(&nor_phi(&kinked).unwrap()),
                vec!["1+t+t^2", "1+t+t^2"]
            );
        }
    }

    #[test]
    fn trefoil_stable_under_a_kink() {
        let d = Diagram::from_pd(TREFOIL).unwrap();
        let kinked = d
            .apply_move(&MoveSpec::R1Add {
                site: Site::Edge(1),
                sign: Sign::Positive,
                under_first: true,
            })
            .unwrap();
        assert_eq!(
            multiset_text(&nor_phi(&d).unwrap()),
            multiset_text(&nor_phi(&kinked).unwrap())
        );
    }
}
