//! The generic state-sum engine and the invariants built on it.
//!
//! Every bracket here is evaluated the same way: smooth all classical
//! crossings in each of the `2^n` possible ways, take the product of the
//! chosen per-crossing coefficients, and weight by a power of the loop
//! value. Skein-tree reduction is deliberately absent: the colored brackets
//! cannot be computed inductively because smoothing a crossing destroys
//! the coloring that assigned the neighboring weights.

mod enhanced;
mod engine;
mod kauffman;
mod nor;
mod tricolor;

pub use enhanced::{bar_involution, enhanced_f, enhanced_invariant};
pub use engine::{smooth_state, state_sum, state_sum_selective, LoopExponent, SmoothEntry, Smoothing};
pub use kauffman::{jones_eval, jones_polynomial_in_a, kauffman_bracket};
pub use nor::nor_phi;
pub use tricolor::{tricolor_invariant, tricolor_v};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BracketError {
    #[error("diagram error: {0}")]
    Diagram(#[from] crate::diagram::DiagramError),
    #[error("coloring error: {0}")]
    Coloring(#[from] crate::coloring::ColoringError),
    #[error("weights and loop value live in different rings")]
    RingMismatch,
    #[error("expected one weight pair per classical crossing: {got} for {want}")]
    WeightCount { got: usize, want: usize },
    #[error("{0} classical crossings exceed the supported state-sum envelope of 24")]
    TooManyCrossings(usize),
    #[error("Jones evaluation at t = 0")]
    JonesAtZero,
}

/// One bracket value tagged with the coloring that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantValue<R> {
    pub coloring: usize,
    pub value: R,
}

/// Canonical multiset form: sorted list of exact serializations.
pub fn multiset_text<R: std::fmt::Display>(values: &[InvariantValue<R>]) -> Vec<String> {
    let mut out: Vec<String> = values.iter().map(|v| v.value.to_string()).collect();
    out.sort();
    out
}
