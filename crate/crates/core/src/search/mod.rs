//! Exhaustive and stochastic searches over small graphs.

mod anneal;
mod connected;
mod extremal;
mod regular;

use serde::{Deserialize, Serialize};

use crate::cycle::is_hamiltonian;
use crate::graph::{Graph, Members};
use crate::ham::{is_doubly_homogeneously_traceable, is_homogeneously_traceable};

pub use anneal::{anneal_seed_search, seed_penalty, AnnealConfig, AnnealOutcome, PenaltyWeights, RestartResult};
pub use connected::{connected_classes, enumerate_connected, CONNECTED_LIMIT};
pub use extremal::{
    conjectured_min_circumference, min_circumference_ht, min_size_formula, min_size_ht_nonham, Extremum,
};
pub use regular::{enumerate_regular, regular_classes, RegularBudget};

/// Graph properties a search can filter by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    Any,
    Ht,
    DoublyHt,
    #[serde(rename = "nonham")]
    Nonhamiltonian,
    HtNonham,
    /// 4-regular, doubly traceable, circumference `n - 4`, with a vertex on
    /// a longest cycle inside a 4-clique.
    Seed,
}

impl Predicate {
    pub fn id(self) -> &'static str {
        match self {
            Predicate::Any => "any",
            Predicate::Ht => "ht",
            Predicate::DoublyHt => "doubly-ht",
            Predicate::Nonhamiltonian => "nonham",
            Predicate::HtNonham => "ht-nonham",
            Predicate::Seed => "seed",
        }
    }

    pub fn parse(s: &str) -> Option<Predicate> {
        [
            Predicate::Any,
            Predicate::Ht,
            Predicate::DoublyHt,
            Predicate::Nonhamiltonian,
            Predicate::HtNonham,
            Predicate::Seed,
        ]
        .into_iter()
        .find(|p| p.id() == s)
    }

    /// Evaluates the predicate, cheapest checks first.
    pub fn test(self, g: &Graph) -> bool {
        match self {
            Predicate::Any => true,
            Predicate::Ht => may_be_traceable(g) && (hamiltonian(g) || is_homogeneously_traceable(g).holds()),
            Predicate::DoublyHt => {
                may_be_traceable(g) && (hamiltonian(g) || is_doubly_homogeneously_traceable(g).holds())
            }
            Predicate::Nonhamiltonian => !hamiltonian(g),
            Predicate::HtNonham => may_be_traceable(g) && !hamiltonian(g) && is_homogeneously_traceable(g).holds(),
            Predicate::Seed => {
                g.regularity() == Some(4)
                    && anneal::seed_mark(g).is_some_and(|v| crate::families::verify_seed(g, v).passes())
            }
        }
    }
}

impl std::fmt::Display for Predicate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.id())
    }
}

// Hamiltonian graphs are doubly traceable from every vertex (n >= 3), so a
// Hamilton cycle settles the traceability predicates at once.
fn hamiltonian(g: &Graph) -> bool {
    g.order() >= 3 && matches!(is_hamiltonian(g), Ok(Some(_)))
}

// Necessary conditions for every vertex to end a Hamilton path.
fn may_be_traceable(g: &Graph) -> bool {
    if !g.is_connected() {
        return false;
    }
    let leaves = Members(g.vertices()).filter(|&v| g.degree(v) == 1).count();
    leaves == 0 || (g.order() <= 2 && leaves <= 2)
}

/// Outcome of a search, serialized as the documented JSON report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub kind: String,
    pub bounds: Bounds,
    /// Candidate graphs generated (labeled completions or augmentations).
    pub examined: u64,
    /// Isomorphism classes visited.
    pub classes: u64,
    /// Witnesses as graph6 strings, sorted.
    pub witnesses: Vec<String>,
    /// True when no witness was found.
    pub negative: bool,
    pub seed: Option<u64>,
    /// Optimum for extremal searches.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    /// Reference value the optimum is compared with.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<usize>,
    pub wall_time_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub order: usize,
    pub degree: Option<usize>,
    pub predicate: Predicate,
}

impl SearchReport {
    /// Re-checks every witness against the predicate with fresh solver calls.
    pub fn witnesses_valid(&self) -> bool {
        self.witnesses.iter().all(|w| {
            crate::graph6::decode_str(w).is_ok_and(|g| {
                g.order() == self.bounds.order
                    && self.bounds.degree.is_none_or(|k| g.regularity() == Some(k))
                    && self.bounds.predicate.test(&g)
            })
        })
    }

    /// The report with the timing field cleared, for byte comparisons.
    pub fn without_timing(&self) -> SearchReport {
        SearchReport {
            wall_time_ms: 0,
            ..self.clone()
        }
    }
}
