//! Braid closures as oriented diagrams.

use super::{classical_from_passes, Diagram, DiagramError, EdgeId, Sign};

/// Close the braid given by `word` on `strands` strands. Letter `i > 0`
/// is the positive generator crossing strand position `i` over position
/// `i+1`; negative letters invert it. Unused strand positions close into
/// crossing-free circles.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<Diagram, DiagramError> {
    assert!(strands >= 1);
    let mut next_edge: EdgeId = strands + 1;
    // current edge occupying each strand position; 1..=strands initially
    let mut current: Vec<EdgeId> = (1..=strands).collect();
    let mut crossings = Vec::with_capacity(word.len());
    for &letter in word {
        let i = letter.unsigned_abs() as usize;
        assert!(
            (1..strands).contains(&i),
            "generator {letter} out of range for {strands} strands"
        );
        let (a, b) = (current[i - 1], current[i]);
        let (a_new, b_new) = (next_edge, next_edge + 1);
        next_edge += 2;
        let crossing = if letter > 0 {
            // position i passes over position i+1
            classical_from_passes((b, b_new), (a, a_new), Sign::Positive)
        } else {
            classical_from_passes((a, a_new), (b, b_new), Sign::Negative)
        };
        crossings.push(crossing);
        // the strands swap positions
        current[i - 1] = b_new;
        current[i] = a_new;
    }
    // close up: the final edge of each position is the initial one
    let mut unknots = 0;
    for (j, &last) in current.iter().enumerate() {
        let first = (j + 1) as EdgeId;
        if last == first {
            unknots += 1;
            continue;
        }
        for c in &mut crossings {
            for s in &mut c.slots {
                if *s == last {
                    *s = first;
                }
            }
        }
    }
    Diagram::new(crossings, unknots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::{jones_polynomial_in_a, kauffman_bracket};

    #[test]
    fn unused_strand_closes_into_a_circle() {
        let d = braid_closure(3, &[1, 1]).unwrap();
        assert_eq!(d.unknot_components(), 1);
        assert_eq!(d.component_count().unwrap(), 3);
    }

    #[test]
    fn positive_trefoil_from_sigma_cubed() {
        let d = braid_closure(2, &[1, 1, 1]).unwrap();
        assert_eq!(d.writhe(), 3);
        assert_eq!(d.component_count().unwrap(), 1);
        // same bracket as the mirrored table trefoil
        let table = Diagram::from_pd(crate::diagram::tests::TREFOIL)
            .unwrap()
            .mirror();
        assert_eq!(kauffman_bracket(&d).unwrap(), kauffman_bracket(&table).unwrap());
    }

    #[test]
    fn figure_eight_braid_matches_table() {
        let d = braid_closure(3, &[1, -2, 1, -2]).unwrap();
        let table = Diagram::from_pd(crate::diagram::tests::FIGURE_EIGHT).unwrap();
        assert_eq!(
            jones_polynomial_in_a(&d).unwrap(),
            jones_polynomial_in_a(&table).unwrap()
        );
    }
}
