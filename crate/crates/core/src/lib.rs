//! Exact total dominator colorings, total dominator total colorings and the
//! invariants around them, plus closed-form values and certificates for
//! cycles and paths.
//!
//! ```
//! use tdtc_core::{closed_forms, graph::Graph, solvers, SearchBudget};
//!
//! let p4 = Graph::path(4).unwrap();
//! let exact = solvers::tdtc_number(&p4, SearchBudget::UNBOUNDED).unwrap();
//! assert_eq!(exact.value, closed_forms::chi_tt_path(4).unwrap().value);
//! ```

pub mod budget;
pub mod closed_forms;
pub mod error;
pub mod graph;
pub mod io;
pub mod solvers;
pub mod verifiers;

pub use budget::SearchBudget;
pub use error::{Error, Result};
pub use graph::{line_graph, total_graph, Graph, ObjectId, TotalGraph};
pub use solvers::{Certificate, InvariantResult, SolveOptions};
pub use verifiers::{Coloring, DominationReport, Universe};
