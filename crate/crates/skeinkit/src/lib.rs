//! Exact computation of state-sum link invariants on planar diagram codes.
//!
//! The crate is organized around a generic bracket engine: a diagram is
//! smoothed at every classical crossing in all `2^n` ways, each state is
//! weighted by per-crossing ring coefficients, and loops contribute a power
//! of the ring's loop value. On top of the engine sit the classical
//! Kauffman bracket / Jones polynomial, a bicolor-enhanced bracket over a
//! five-variable Laurent ring, its specialization over `Z2[t]/(1+t+t^3)`,
//! and a two-variable bracket driven by Fox tricolorings.
//!
//! See the `examples/` directory for runnable entry points, or the
//! `skeinkit` binary for the command-line interface.

pub mod algebra;
pub mod axioms;
pub mod bracket;
pub mod cli;
pub mod coloring;
pub mod diagram;

pub use algebra::{CoefficientScheme, F8Element, LaurentPoly, VarSet};
pub use diagram::{Crossing, CrossingKind, Diagram, MoveSpec, Sign};
