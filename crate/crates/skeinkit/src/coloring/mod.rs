//! Edge colorings of diagrams: two-color alternation colorings and Fox
//! tricolorings, with the per-crossing type classification each bracket
//! needs.

mod bicolor;
mod gf3;
mod tricolor;

pub use bicolor::{
    classify_bicolor, enumerate_bicolorings, swap_colors, BicolorColor, BicolorCrossingType,
    Bicoloring,
};
pub use tricolor::{
    classify_tricolor, enumerate_tricolorings, fox_arcs, tri_count, TricolorCrossingType,
    TricolorKind, TricolorSet, Tricoloring, DEFAULT_ENUMERATION_CAP,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("diagram error: {0}")]
    Diagram(#[from] crate::diagram::DiagramError),
    #[error("coloring does not belong to this diagram (missing edge {0})")]
    MissingEdge(usize),
    #[error("coloring integrity violated at crossing {0}: dotted ends are opposite")]
    OppositeDottedEnds(usize),
    #[error("coloring integrity violated at crossing {0}: expected exactly two dotted ends")]
    DottedEndCount(usize),
    #[error("crossing {0} is virtual; classification requires a classical crossing")]
    VirtualCrossing(usize),
    #[error("coloring violates the Fox condition at crossing {0}")]
    FoxCondition(usize),
}
