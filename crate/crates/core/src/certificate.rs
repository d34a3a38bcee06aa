//! Self-contained property certificates: every claimed value carries a
//! witness that can be checked against the echoed graph.

use serde::{Deserialize, Serialize};

use crate::cycle::{circumference, is_cycle};
use crate::graph::{set_of, Graph, Members};
use crate::graph6;
use crate::ham::{is_doubly_homogeneously_traceable, is_hamilton_path, is_homogeneously_traceable, Traceability};
use crate::independence::{independence_number, is_independent, INDEPENDENCE_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hamiltonicity {
    pub value: bool,
    /// A Hamilton cycle when `value` holds.
    pub cycle: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circumference {
    /// Length of a longest cycle; 0 for forests.
    pub value: usize,
    pub cycle: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Traceable {
    pub value: bool,
    /// `paths[v]` is a Hamilton path starting at `v`.
    pub paths: Option<Vec<Vec<usize>>>,
    /// Smallest vertex ending no Hamilton path.
    pub failing_vertex: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Independence {
    pub value: usize,
    pub set: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyCertificate {
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub regularity: Option<usize>,
    pub hamiltonian: Hamiltonicity,
    pub circumference: Circumference,
    pub homogeneously_traceable: Traceable,
    pub doubly: bool,
    /// Omitted above the independence solver's order limit.
    pub independence_number: Option<Independence>,
}

impl PropertyCertificate {
    pub fn compute(g: &Graph) -> PropertyCertificate {
        let n = g.order();
        let longest = circumference(g);
        let c = longest.as_ref().map_or(0, |w| w.len());
        let cycle = longest.map(|w| w.0);
        let ht = match is_homogeneously_traceable(g) {
            Traceability::Certified(cert) => Traceable {
                value: true,
                paths: Some(cert.paths.iter().map(|ps| ps[0].0.clone()).collect()),
                failing_vertex: None,
            },
            Traceability::Fails { vertex } => Traceable {
                value: false,
                paths: None,
                failing_vertex: Some(vertex),
            },
        };
        let independence = (n <= INDEPENDENCE_LIMIT).then(|| {
            let (value, set) = independence_number(g).expect("order within the solver limit");
            Independence {
                value,
                set: Members(set).collect(),
            }
        });
        PropertyCertificate {
            graph6: graph6::encode(g),
            order: n,
            size: g.size(),
            regularity: g.regularity(),
            hamiltonian: Hamiltonicity {
                value: c == n,
                cycle: (c == n).then(|| cycle.clone()).flatten(),
            },
            circumference: Circumference { value: c, cycle },
            doubly: ht.value && is_doubly_homogeneously_traceable(g).holds(),
            homogeneously_traceable: ht,
            independence_number: independence,
        }
    }

    /// Re-checks every witness against the echoed graph.
    pub fn validate(&self) -> bool {
        let Ok(g) = graph6::decode_str(&self.graph6) else {
            return false;
        };
        let n = g.order();
        let shape = self.order == n && self.size == g.size() && self.regularity == g.regularity();
        let circ = match &self.circumference.cycle {
            Some(c) => c.len() == self.circumference.value && is_cycle(&g, c),
            None => self.circumference.value == 0,
        };
        let ham = self.hamiltonian.value == (self.circumference.value == n)
            && match &self.hamiltonian.cycle {
                Some(c) => self.hamiltonian.value && c.len() == n && is_cycle(&g, c),
                None => !self.hamiltonian.value,
            };
        let ht = match &self.homogeneously_traceable.paths {
            Some(paths) => {
                self.homogeneously_traceable.value
                    && paths.len() == n
                    && paths
                        .iter()
                        .enumerate()
                        .all(|(v, p)| p.first() == Some(&v) && is_hamilton_path(&g, p))
            }
            None => !self.homogeneously_traceable.value,
        };
        let alpha = self.independence_number.as_ref().is_none_or(|a| {
            a.set.len() == a.value && a.set.iter().all(|&v| v < n) && is_independent(&g, set_of(a.set.iter().copied()))
        });
        shape && circ && ham && ht && alpha && (!self.doubly || self.homogeneously_traceable.value)
    }
}
