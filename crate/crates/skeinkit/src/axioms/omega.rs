//! The single oriented three-crossing slide, realized concretely.
//!
//! Both sides of the move are built as explicit tangles with three strands
//! u, v, w: on the left side w passes under u and v on one side of their
//! crossing, on the right side it has slid to the other. Closing the six
//! boundary legs with all five non-crossing matchings and smoothing the
//! three crossings in all eight ways yields the loop-count table that
//! drives the move's equation system.

use crate::algebra::{CoefficientScheme, Dir, Ring, SchemeCoeffs};
use crate::bracket::smooth_state;
use crate::diagram::{Diagram, EdgeId, Sign};

use super::{ConstraintEntry, ConstraintReport};

/// Edge ids of the tangle pieces: strand u = 1,2,3; v = 4,5,6; w = 7,8,9,
/// each in travel order.
const U: [EdgeId; 3] = [1, 2, 3];
const V: [EdgeId; 3] = [4, 5, 6];
const W: [EdgeId; 3] = [7, 8, 9];

/// Reference segments whose coloring the bookkeeping fixes: the incoming
/// piece of each strand.
pub const OMEGA3A_REFS: [EdgeId; 3] = [U[0], V[0], W[0]];

fn left_tangle() -> Vec<crate::diagram::Crossing> {
    use crate::diagram::classical_from_passes as cr;
    vec![
        // crossing 1: u under v
        cr((U[0], U[1]), (V[1], V[2]), Sign::Positive),
        // crossing 2: w under v
        cr((W[1], W[2]), (V[0], V[1]), Sign::Negative),
        // crossing 3: w under u
        cr((W[0], W[1]), (U[1], U[2]), Sign::Positive),
    ]
}

fn right_tangle() -> Vec<crate::diagram::Crossing> {
    use crate::diagram::classical_from_passes as cr;
    vec![
        cr((U[1], U[2]), (V[0], V[1]), Sign::Positive),
        cr((W[0], W[1]), (V[1], V[2]), Sign::Negative),
        cr((W[1], W[2]), (U[0], U[1]), Sign::Positive),
    ]
}

/// The five non-crossing matchings of the six boundary legs, listed in the
/// disk's cyclic order `[u_in, v_out, w_in, u_out, v_in, w_out]`. Each
/// matching pairs an outgoing leg with an incoming one.
pub fn omega3a_closures() -> [[(EdgeId, EdgeId); 3]; 5] {
    let (u_in, v_out, w_in, u_out, v_in, w_out) = (U[0], V[2], W[0], U[2], V[0], W[2]);
    [
        [(u_in, v_out), (w_in, u_out), (v_in, w_out)],
        [(u_in, v_out), (w_in, w_out), (u_out, v_in)],
        [(u_in, w_out), (v_out, w_in), (u_out, v_in)],
        [(u_in, w_out), (v_out, v_in), (w_in, u_out)],
        [(u_in, u_out), (v_out, w_in), (v_in, w_out)],
    ]
}

/// Close one side of the tangle with a boundary matching. Out-legs are
/// renamed into their matched in-legs, so the reference segments keep
/// their ids.
fn close(mut crossings: Vec<crate::diagram::Crossing>, matching: &[(EdgeId, EdgeId)]) -> Diagram {
    let in_legs = [U[0], V[0], W[0]];
    for &(a, b) in matching {
        let (keep, gone) = if in_legs.contains(&a) { (a, b) } else { (b, a) };
        for c in &mut crossings {
            for s in &mut c.slots {
                if *s == gone {
                    *s = keep;
                }
            }
        }
    }
    Diagram::new(crossings, 0).expect("closure yields a valid diagram")
}

pub fn omega3a_closed(closure: usize, right_side: bool) -> Diagram {
    let tangle = if right_side { right_tangle() } else { left_tangle() };
    close(tangle, &omega3a_closures()[closure])
}

/// Loop counts of all smoothings: `table[closure][triple]` is the pair
/// (left-side loops, right-side loops); triples are ordered with the
/// H-choice of crossing 1 varying slowest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopTable {
    pub rows: [[(usize, usize); 8]; 5],
}

pub fn r3_loop_table() -> LoopTable {
    let mut rows = [[(0, 0); 8]; 5];
    for (ci, row) in rows.iter_mut().enumerate() {
        let left = omega3a_closed(ci, false);
        let right = omega3a_closed(ci, true);
        for (col, cell) in row.iter_mut().enumerate() {
            // column order: choice of crossing 1 in the top bit
            let mask = ((col >> 2 & 1) | (col & 2) | ((col & 1) << 2)) as u32;
            *cell = (
                smooth_state(&left, mask).expect("within envelope"),
                smooth_state(&right, mask).expect("within envelope"),
            );
        }
    }
    LoopTable { rows }
}

/// The equation demanded by one closure: with the all-dotted coloring the
/// left side's crossings are typed S+, S-, S+ and the right side's N+,
/// N-, N+, so each smoothing triple contributes its scheme coefficients
/// times `d` to the counted loops. Exact equality is required.
pub fn verify_out_equation(closure: usize, scheme: &CoefficientScheme) -> ConstraintEntry {
    fn build<R: Ring>(s: &SchemeCoeffs<R>, closure: usize) -> ConstraintEntry {
        let table = r3_loop_table();
        let row = &table.rows[closure];
        let mut lhs = s.d.zero_like();
        let mut rhs = s.d.zero_like();
        for (col, &(l_loops, r_loops)) in row.iter().enumerate() {
            let mut l_term = s.d.one_like();
            let mut r_term = s.d.one_like();
            for (i, (dir_l, dir_r, positive)) in [
                (Dir::S, Dir::N, true),
                (Dir::S, Dir::N, false),
                (Dir::S, Dir::N, true),
            ]
            .iter()
            .enumerate()
            {
                let b_choice = col >> (2 - i) & 1 == 1;
                let (l_w, r_w) = if *positive {
                    let lw = if b_choice { s.b(*dir_l) } else { s.a(*dir_l) };
                    let rw = if b_choice { s.b(*dir_r) } else { s.a(*dir_r) };
                    (lw, rw)
                } else {
                    let lw = if b_choice { s.b_prime(*dir_l) } else { s.a_prime(*dir_l) };
                    let rw = if b_choice { s.b_prime(*dir_r) } else { s.a_prime(*dir_r) };
                    (lw, rw)
                };
                l_term = l_term.mul(l_w);
                r_term = r_term.mul(r_w);
            }
            for _ in 0..l_loops {
                l_term = l_term.mul(&s.d);
            }
            for _ in 0..r_loops {
                r_term = r_term.mul(&s.d);
            }
            lhs = lhs.add(&l_term);
            rhs = rhs.add(&r_term);
        }
        let residual = lhs.sub(&rhs);
        ConstraintEntry {
            eq: format!("closure {closure}: sum_S coeffs(S+,S-,S+) d^|S| = sum_S coeffs(N+,N-,N+) d^|S|"),
            ok: residual.is_zero(),
            residual: residual.to_string(),
        }
    }
    match scheme {
        CoefficientScheme::Symbolic(s) => build(s, closure),
        CoefficientScheme::Nor(s) => build(s, closure),
    }
}

pub fn verify_out_equations(scheme: &CoefficientScheme) -> ConstraintReport {
    ConstraintReport {
        entries: (0..5).map(|i| verify_out_equation(i, scheme)).collect(),
    }
}
