//! Exact solvers for `α`, `χ`, `γ_t` and `χ^t_d` on arbitrary small graphs,
//! and the mixed invariants obtained from them through the total graph.
//!
//! Every solver returns an [`InvariantResult`] whose certificate re-verifies
//! under [`crate::verifiers`]. When a [`SearchBudget`] runs out the result
//! carries the best certificate found so far and `proven_optimal == false`.

use std::time::Duration;

use serde::Serialize;

use crate::graph::ObjectId;
use crate::verifiers::Coloring;

pub mod chromatic;
pub mod domination;
pub mod dominator_coloring;
pub mod independence;
pub mod mixed;

pub use chromatic::chromatic_number;
pub use domination::total_domination_number;
pub use dominator_coloring::total_dominator_chromatic_number;
pub use independence::independence_number;
pub use mixed::{
    mixed_independence_number, tdtc_number, total_chromatic_number, total_mixed_domination_number,
    total_mixed_domination_number_direct,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Certificate {
    Set(Vec<ObjectId>),
    Coloring(Coloring),
}

impl Certificate {
    /// Cardinality of the set or number of classes of the coloring.
    pub fn size(&self) -> usize {
        match self {
            Certificate::Set(s) => s.len(),
            Certificate::Coloring(c) => c.len(),
        }
    }

    pub fn as_set(&self) -> Option<&[ObjectId]> {
        match self {
            Certificate::Set(s) => Some(s),
            Certificate::Coloring(_) => None,
        }
    }

    pub fn as_coloring(&self) -> Option<&Coloring> {
        match self {
            Certificate::Coloring(c) => Some(c),
            Certificate::Set(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantResult {
    pub value: usize,
    pub certificate: Certificate,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    /// `false` when a budget ran out; `value` is then only an upper bound
    /// (a lower bound for `α`).
    pub proven_optimal: bool,
}

/// Switches for the optional pruning rules. Turning pruning off must never
/// change a solver's value, only its running time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub pruning: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { pruning: true }
    }
}

impl SolveOptions {
    pub const NO_PRUNING: SolveOptions = SolveOptions { pruning: false };
}

pub(crate) fn vertex_labels(vertices: &[usize]) -> Vec<ObjectId> {
    vertices.iter().map(|&v| ObjectId::Vertex(v + 1)).collect()
}
