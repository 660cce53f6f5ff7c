//! State enumeration and the generic state sum.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::algebra::{LaurentPoly, Ring};
use crate::diagram::{Crossing, CrossingKind, Diagram, Sign};

use super::BracketError;

/// The two smoothings of a classical crossing, named in the canonical
/// frame: H joins the south pair `{SW,SE}` and the north pair `{NW,NE}`
/// (the orientation-preserving smoothing), V joins the west and east
/// pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Smoothing {
    H,
    V,
}

/// Whether loops contribute `d^|S|` or `d^(|S|-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoopExponent {
    Loops,
    LoopsMinusOne,
}

/// Slot pairs joined by a smoothing choice.
pub(crate) fn smoothing_slot_pairs(c: &Crossing, choice: Smoothing) -> [[usize; 2]; 2] {
    match c.kind {
        CrossingKind::Virtual => [[0, 2], [1, 3]],
        CrossingKind::Classical => {
            let sign = c.sign.expect("smoothing an unoriented crossing");
            match (sign, choice) {
                (Sign::Positive, Smoothing::H) => [[0, 1], [2, 3]],
                (Sign::Positive, Smoothing::V) => [[0, 3], [1, 2]],
                (Sign::Negative, Smoothing::H) => [[1, 2], [3, 0]],
                (Sign::Negative, Smoothing::V) => [[0, 1], [2, 3]],
            }
        }
    }
}

/// Kauffman's unoriented A-smoothing joins slots `{0,1}` and `{2,3}`. In
/// the canonical frame that coincides with H at positive crossings and
/// with V at negative ones.
pub(crate) fn kauffman_a_choice(sign: Sign) -> Smoothing {
    match sign {
        Sign::Positive => Smoothing::H,
        Sign::Negative => Smoothing::V,
    }
}

struct StateSpace {
    edge_index: HashMap<usize, usize>,
    /// Crossing indices that get a state bit; classical crossings marked
    /// transparent pass strands straight through instead.
    smoothable: Vec<usize>,
    transparent: Vec<bool>,
    edge_count: usize,
}

impl StateSpace {
    fn build(d: &Diagram, transparent_classical: &[bool]) -> Result<Self, BracketError> {
        let ids = d.edge_ids();
        let edge_index: HashMap<usize, usize> =
            ids.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut transparent = vec![false; d.crossings().len()];
        let mut smoothable = Vec::new();
        let mut ordinal = 0;
        for (i, c) in d.crossings().iter().enumerate() {
            if !c.is_classical() {
                continue;
            }
            if transparent_classical.get(ordinal).copied().unwrap_or(false) {
                transparent[i] = true;
            } else {
                smoothable.push(i);
            }
            ordinal += 1;
        }
        if smoothable.len() > 24 {
            return Err(BracketError::TooManyCrossings(smoothable.len()));
        }
        Ok(Self { edge_index, smoothable, transparent, edge_count: ids.len() })
    }

    fn loops(&self, d: &Diagram, mask: u32, parent: &mut Vec<usize>) -> usize {
        parent.clear();
        parent.extend(0..self.edge_count);
        let find = |parent: &mut Vec<usize>, mut x: usize| {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        };
        let mut bit = 0;
        for (ci, c) in d.crossings().iter().enumerate() {
            let pairs = if c.is_classical() && !self.transparent[ci] {
                let choice = if mask >> bit & 1 == 0 { Smoothing::H } else { Smoothing::V };
                bit += 1;
                smoothing_slot_pairs(c, choice)
            } else {
                // virtual or transparent: strands continue through
                [[0, 2], [1, 3]]
            };
            for pair in pairs {
                let a = self.edge_index[&c.slots[pair[0]]];
                let b = self.edge_index[&c.slots[pair[1]]];
                let (ra, rb) = (find(parent, a), find(parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let roots = (0..self.edge_count)
            .filter(|&i| find(parent, i) == i)
            .count();
        roots + d.unknot_components()
    }
}

/// Loop count of one smoothing state. Bit `i` of `mask` selects V at the
/// `i`-th classical crossing (in crossing-list order); crossing-free
/// circles each contribute one loop.
pub fn smooth_state(d: &Diagram, mask: u32) -> Result<usize, BracketError> {
    let space = StateSpace::build(d, &[])?;
    let mut parent = Vec::with_capacity(space.edge_count);
    Ok(space.loops(d, mask, &mut parent))
}

fn d_power<R: Ring>(d_value: &R, k: usize, cache: &mut Vec<R>) -> R {
    while cache.len() <= k {
        let next = match cache.last() {
            None => d_value.one_like(),
            Some(prev) => prev.mul(d_value),
        };
        cache.push(next);
    }
    cache[k].clone()
}

/// How one classical crossing participates in a state sum.
#[derive(Debug, Clone)]
pub enum SmoothEntry<R> {
    /// `(H, V)` weights; the crossing receives a state bit.
    Weighted(R, R),
    /// The crossing is not smoothed: strands pass through for loop
    /// counting and no bit is allocated.
    Transparent,
}

/// Exact state sum: over all `2^n` states, the product of the chosen
/// weights times `d^exponent`. `weights[i]` is the `(H, V)` pair of the
/// `i`-th classical crossing.
pub fn state_sum<R: Ring>(
    d: &Diagram,
    weights: &[(R, R)],
    d_value: &R,
    exponent: LoopExponent,
) -> Result<R, BracketError> {
    let entries: Vec<SmoothEntry<R>> = weights
        .iter()
        .map(|(h, v)| SmoothEntry::Weighted(h.clone(), v.clone()))
        .collect();
    state_sum_selective(d, &entries, d_value, exponent)
}

/// State sum where classical crossings may be marked transparent.
pub fn state_sum_selective<R: Ring>(
    d: &Diagram,
    entries: &[SmoothEntry<R>],
    d_value: &R,
    exponent: LoopExponent,
) -> Result<R, BracketError> {
    let want = d.classical_count();
    if entries.len() != want {
        return Err(BracketError::WeightCount { got: entries.len(), want });
    }
    let transparent: Vec<bool> = entries
        .iter()
        .map(|e| matches!(e, SmoothEntry::Transparent))
        .collect();
    let mut pairs: Vec<(&R, &R)> = Vec::new();
    for e in entries {
        if let SmoothEntry::Weighted(h, v) = e {
            if !h.same_ring(d_value) || !v.same_ring(d_value) {
                return Err(BracketError::RingMismatch);
            }
            pairs.push((h, v));
        }
    }
    let space = StateSpace::build(d, &transparent)?;
    let n = space.smoothable.len();
    let mut parent = Vec::with_capacity(space.edge_count);
    let mut powers: Vec<R> = Vec::new();
    let mut total = d_value.zero_like();
    for mask in 0..(1u32 << n) {
        let loops = space.loops(d, mask, &mut parent);
        let k = match exponent {
            LoopExponent::Loops => loops,
            // the empty diagram has no loops; its bracket is the empty
            // product
            LoopExponent::LoopsMinusOne => loops.saturating_sub(1),
        };
        let mut term = d_power(d_value, k, &mut powers);
        for (i, (h, v)) in pairs.iter().enumerate() {
            let coeff = if mask >> i & 1 == 0 { *h } else { *v };
            term = term.mul(coeff);
        }
        total = total.add(&term);
    }
    Ok(total)
}

/// State sum specialized to Laurent polynomials with monomial weights of
/// coefficient `±1`, which covers every scheme in the crate. States are
/// grouped by (total exponent, loop count) so ring operations happen once
/// per group instead of once per state.
pub(crate) fn state_sum_monomial(
    d: &Diagram,
    weights: &[(LaurentPoly, LaurentPoly)],
    d_value: &LaurentPoly,
    exponent: LoopExponent,
) -> Result<LaurentPoly, BracketError> {
    let entries: Vec<SmoothEntry<LaurentPoly>> = weights
        .iter()
        .map(|(h, v)| SmoothEntry::Weighted(h.clone(), v.clone()))
        .collect();
    state_sum_monomial_selective(d, &entries, d_value, exponent)
}

pub(crate) fn state_sum_monomial_selective(
    d: &Diagram,
    entries: &[SmoothEntry<LaurentPoly>],
    d_value: &LaurentPoly,
    exponent: LoopExponent,
) -> Result<LaurentPoly, BracketError> {
    let want = d.classical_count();
    if entries.len() != want {
        return Err(BracketError::WeightCount { got: entries.len(), want });
    }
    let transparent: Vec<bool> = entries
        .iter()
        .map(|e| matches!(e, SmoothEntry::Transparent))
        .collect();
    let one = BigInt::one();
    let mut mono = Vec::new();
    for e in entries {
        let SmoothEntry::Weighted(h, v) = e else { continue };
        if !h.same_ring(d_value) || !v.same_ring(d_value) {
            return Err(BracketError::RingMismatch);
        }
        let (Some((eh, ch)), Some((ev, cv))) = (h.as_monomial(), v.as_monomial()) else {
            return state_sum_selective(d, entries, d_value, exponent);
        };
        if ch.abs() != one || cv.abs() != one {
            return state_sum_selective(d, entries, d_value, exponent);
        }
        mono.push((
            (eh.clone(), ch.is_negative()),
            (ev.clone(), cv.is_negative()),
        ));
    }
    let space = StateSpace::build(d, &transparent)?;
    let n = space.smoothable.len();
    let nvars = d_value.vars().len();
    let mut parent = Vec::with_capacity(space.edge_count);
    let mut groups: HashMap<(Vec<i32>, usize), i64> = HashMap::new();
    for mask in 0..(1u32 << n) {
        let loops = space.loops(d, mask, &mut parent);
        let k = match exponent {
            LoopExponent::Loops => loops,
            LoopExponent::LoopsMinusOne => loops.saturating_sub(1),
        };
        let mut expo = vec![0i32; nvars];
        let mut negative = false;
        for (i, ((eh, sh), (ev, sv))) in mono.iter().enumerate() {
            let (e, s) = if mask >> i & 1 == 0 { (eh, sh) } else { (ev, sv) };
            for (acc, x) in expo.iter_mut().zip(e.iter()) {
                *acc += x;
            }
            negative ^= s;
        }
        *groups.entry((expo, k)).or_insert(0) += if negative { -1 } else { 1 };
    }
    let mut powers: Vec<LaurentPoly> = Vec::new();
    let mut total = d_value.zero_like();
    for ((expo, k), count) in groups {
        if count == 0 {
            continue;
        }
        let shift = LaurentPoly::monomial(d_value.vars(), count, &expo);
        let term = shift.mul(&d_power(d_value, k, &mut powers));
        total = total.add(&term);
    }
    Ok(total)
}
