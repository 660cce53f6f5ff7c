//! Symbolic verification of the Reidemeister constraint systems and
//! reproduction of the three-crossing slide bookkeeping tables.

mod equations;
mod moves;
mod omega;

pub use equations::{kink_factors, verify_r2_equations, verify_r3_equations};
pub use moves::{move_invariance_check, random_walk, InvariantKind, MoveCheckReport, WalkPolicy};
pub use omega::{omega3a_closed, omega3a_closures, r3_loop_table, verify_out_equation, verify_out_equations, LoopTable, OMEGA3A_REFS};

use serde_json::json;

/// One checked equation: it is satisfied exactly when the residual is the
/// ring zero.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintEntry {
    pub eq: String,
    pub residual: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ConstraintReport {
    pub entries: Vec<ConstraintEntry>,
}

impl ConstraintReport {
    pub fn all_ok(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }

    pub fn satisfied_count(&self) -> usize {
        self.entries.iter().filter(|e| e.ok).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self
            .entries
            .iter()
            .map(|e| json!({ "eq": e.eq, "residual": e.residual, "ok": e.ok }))
            .collect::<Vec<_>>())
    }
}
