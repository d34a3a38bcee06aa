//! Homogeneously traceable graphs.
//!
//! Exact Hamilton path and longest cycle solvers, the vertex blow-up
//! operation with instance-level checks of its effect on traceability and
//! circumference, the cubic and 4-regular family constructions, and
//! isomorph-free small-order searches.

pub mod blowup;
pub mod canon;
pub mod certificate;
pub mod cycle;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod ham;
pub mod independence;
pub mod search;
pub mod serde_graph6;

pub use canon::{canonical_form, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{Graph, Members, VertexSet};
