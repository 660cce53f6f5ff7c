//! Whole-diagram move invariance checking: the executable form of the
//! invariance theorems.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bracket::{
    enhanced_invariant, jones_polynomial_in_a, kauffman_bracket, multiset_text, nor_phi,
    tricolor_invariant, BracketError,
};
use crate::diagram::{Diagram, MoveKind, MoveSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantKind {
    Kauffman,
    Jones,
    Enhanced,
    Nor,
    Tricolor,
}

impl InvariantKind {
    /// Canonical comparable form of the invariant on a diagram. The raw
    /// bracket is not move-invariant, so the Kauffman kind compares the
    /// writhe-normalized polynomial, as does Jones (same information).
    pub fn canonical_value(&self, d: &Diagram) -> Result<Vec<String>, BracketError> {
        match self {
            InvariantKind::Kauffman | InvariantKind::Jones => {
                Ok(vec![jones_polynomial_in_a(d)?.to_string()])
            }
            InvariantKind::Enhanced => Ok(multiset_text(&enhanced_invariant(d)?)),
            InvariantKind::Nor => Ok(multiset_text(&nor_phi(d)?)),
            InvariantKind::Tricolor => Ok(multiset_text(&tricolor_invariant(d)?)),
        }
    }

    pub fn raw_bracket(&self, d: &Diagram) -> Result<String, BracketError> {
        Ok(kauffman_bracket(d)?.to_string())
    }
}

impl std::str::FromStr for InvariantKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "kauffman" => Ok(InvariantKind::Kauffman),
            "jones" => Ok(InvariantKind::Jones),
            "enhanced" => Ok(InvariantKind::Enhanced),
            "nor" => Ok(InvariantKind::Nor),
            "tricolor" => Ok(InvariantKind::Tricolor),
            other => Err(format!("unknown invariant kind `{other}`")),
        }
    }
}

/// Crossing-count budget for random walks: once a diagram reaches the
/// cap, only shrinking or rearranging moves are offered.
#[derive(Debug, Clone, Copy)]
pub struct WalkPolicy {
    pub max_crossings: usize,
}

impl Default for WalkPolicy {
    fn default() -> Self {
        Self { max_crossings: 13 }
    }
}

/// A seeded random walk through move space. Each step picks uniformly
/// among the applicable moves of the allowed kinds; the same seed always
/// reproduces the same walk.
pub fn random_walk(
    d: &Diagram,
    kinds: &[MoveKind],
    steps: usize,
    seed: u64,
    policy: WalkPolicy,
) -> Vec<(MoveSpec, Diagram)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = d.clone();
    let mut out = Vec::with_capacity(steps);
    for _ in 0..steps {
        let shrinking: Vec<MoveKind> = kinds
            .iter()
            .copied()
            .filter(|k| matches!(k, MoveKind::R1Remove | MoveKind::R2Remove | MoveKind::R3))
            .collect();
        let allowed = if current.classical_count() >= policy.max_crossings && !shrinking.is_empty()
        {
            shrinking
        } else {
            kinds.to_vec()
        };
        let candidates = current.enumerate_moves(&allowed);
        let Some(spec) = candidates.choose(&mut rng).copied() else {
            break;
        };
        match current.apply_move(&spec) {
            Ok(next) => {
                current = next;
                out.push((spec, current.clone()));
            }
            Err(_) => continue,
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct MoveCheckStep {
    pub description: String,
    pub crossings: usize,
    pub equal: bool,
}

#[derive(Debug, Clone)]
pub struct MoveCheckReport {
    pub steps: Vec<MoveCheckStep>,
    pub baseline: Vec<String>,
}

impl MoveCheckReport {
    pub fn all_equal(&self) -> bool {
        self.steps.iter().all(|s| s.equal)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "all_equal": self.all_equal(),
            "steps": self.steps.iter().map(|s| serde_json::json!({
                "move": s.description,
                "crossings": s.crossings,
                "equal": s.equal,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Walk the diagram through the given moves and compare the invariant of
/// every image against the starting value.
pub fn move_invariance_check(
    d: &Diagram,
    moves: &[(MoveSpec, Diagram)],
    kind: InvariantKind,
) -> Result<MoveCheckReport, BracketError> {
    let baseline = kind.canonical_value(d)?;
    let mut steps = Vec::with_capacity(moves.len());
    for (spec, image) in moves {
        let value = kind.canonical_value(image)?;
        steps.push(MoveCheckStep {
            description: format!("{spec:?}"),
            crossings: image.classical_count(),
            equal: value == baseline,
        });
    }
    Ok(MoveCheckReport { steps, baseline })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::tests::{FIGURE_EIGHT, HOPF, TREFOIL};

    #[test]
    fn trefoil_walk_preserves_all_invariants() {
        let d = Diagram::from_pd(TREFOIL).unwrap();
        let kinds = [
            MoveKind::R1Add,
            MoveKind::R1Remove,
            MoveKind::R2Add,
            MoveKind::R2Remove,
            MoveKind::R3,
        ];
        let walk = random_walk(&d, &kinds, 12, 7, WalkPolicy { max_crossings: 9 });
        assert!(walk.len() >= 10, "walk stalled after {} steps", walk.len());
        for kind in [
            InvariantKind::Jones,
            InvariantKind::Enhanced,
            InvariantKind::Nor,
            InvariantKind::Tricolor,
        ] {
            let report = move_invariance_check(&d, &walk, kind).unwrap();
            let bad: Vec<_> = report.steps.iter().filter(|s| !s.equal).collect();
            assert!(bad.is_empty(), "{kind:?} broke at {bad:?}");
        }
    }

    #[test]
    fn hopf_and_figure_eight_walks() {
        for (pd, seed) in [(HOPF, 3u64), (FIGURE_EIGHT, 11u64)] {
            let d = Diagram::from_pd(pd).unwrap();
            let kinds = [MoveKind::R1Add, MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3];
            let walk = random_walk(&d, &kinds, 10, seed, WalkPolicy::default());
            for kind in [InvariantKind::Enhanced, InvariantKind::Tricolor] {
                let report = move_invariance_check(&d, &walk, kind).unwrap();
                assert!(report.all_equal(), "{kind:?} failed on {pd}");
            }
        }
    }

    #[test]
    fn seeded_walks_are_reproducible() {
        let d = Diagram::from_pd(TREFOIL).unwrap();
        let kinds = [MoveKind::R1Add, MoveKind::R2Add, MoveKind::R3];
        let a = random_walk(&d, &kinds, 6, 42, WalkPolicy::default());
        let b = random_walk(&d, &kinds, 6, 42, WalkPolicy::default());
        let descr = |w: &[(MoveSpec, Diagram)]| {
            w.iter().map(|(m, _)| format!("{m:?}")).collect::<Vec<_>>()
        };
        assert_eq!(descr(&a), descr(&b));
    }
}
