//! Blowing up a vertex into a clique, and instance checks of what the
//! K3 and K4 blow-ups do to double traceability and circumference.
//!
//! A vertex `v` of degree `d` is replaced by a copy of `K_d` whose vertices
//! are matched one-to-one with the former neighbors. Labels are assigned
//! deterministically: the other vertices keep their relative order (labels
//! above `v` shift down by one) and the clique takes the `d` highest labels,
//! the `i`-th clique vertex being matched to the `i`-th smallest neighbor.

use serde::{Deserialize, Serialize};

use crate::cycle::{circumference, cycle_through};
use crate::error::{Error, Result};
use crate::graph::{full_set, Graph, Members, VertexSet, MAX_ORDER};
use crate::ham::is_doubly_homogeneously_traceable;

/// Relabeling record of one blow-up.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupMap {
    pub source_order: usize,
    /// Removed vertex, in source labels.
    pub vertex: usize,
    pub degree: usize,
    /// Former neighbors in ascending order, in source labels.
    pub neighbors: Vec<usize>,
    /// Target label of every surviving source vertex (`None` for `vertex`).
    pub relabel: Vec<Option<usize>>,
    /// Target labels of the new clique vertices.
    pub clique: Vec<usize>,
    /// `(clique vertex, former neighbor)` pairs, both in target labels.
    pub matching: Vec<(usize, usize)>,
}

impl BlowupMap {
    pub fn target_order(&self) -> usize {
        self.source_order + self.degree - 1
    }

    pub fn clique_set(&self) -> VertexSet {
        self.clique.iter().fold(0, |acc, &v| acc | 1 << v)
    }

    /// Target label of a surviving source vertex.
    pub fn image(&self, source: usize) -> Option<usize> {
        self.relabel.get(source).copied().flatten()
    }
}

/// Replaces `v` by `K_d` joined to `N(v)` by a matching.
pub fn blow_up(g: &Graph, v: usize) -> Result<(Graph, BlowupMap)> {
    g.check_vertex(v)?;
    let n = g.order();
    let d = g.degree(v);
    if d == 0 {
        return Err(Error::Degree {
            vertex: v,
            degree: 0,
            expected: "at least 1".into(),
        });
    }
    if n + d - 1 > MAX_ORDER {
        return Err(Error::Budget {
            what: "blow-up target",
            order: n + d - 1,
            limit: MAX_ORDER,
        });
    }
    let shift = |u: usize| if u < v { u } else { u - 1 };
    let low = full_set(v);
    let neighbors: Vec<usize> = Members(g.neighbors(v)).collect();
    let mut rows: Vec<u64> = (0..n)
        .filter(|&u| u != v)
        .map(|u| {
            let r = g.neighbors(u) & !(1 << v);
            (r & low) | ((r >> 1) & !low)
        })
        .collect();
    let base = n - 1;
    let clique: Vec<usize> = (base..base + d).collect();
    let clique_mask = clique.iter().fold(0u64, |acc, &c| acc | 1 << c);
    let mut matching = Vec::with_capacity(d);
    rows.resize(n - 1 + d, 0);
    for (i, &x) in neighbors.iter().enumerate() {
        let (c, x) = (clique[i], shift(x));
        rows[c] = (clique_mask & !(1 << c)) | 1 << x;
        rows[x] |= 1 << c;
        matching.push((c, x));
    }
    let relabel = (0..n).map(|u| (u != v).then(|| shift(u))).collect();
    let map = BlowupMap {
        source_order: n,
        vertex: v,
        degree: d,
        neighbors,
        relabel,
        clique,
        matching,
    };
    Ok((Graph::from_rows_unchecked(rows), map))
}

/// Which clique size the report concerns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Lemma {
    /// Degree-3 vertex blown up into `K_3`: circumference grows by 2.
    K3,
    /// Degree-4 vertex in a 4-clique blown up into `K_4`: circumference grows by 3.
    K4,
}

impl Lemma {
    pub fn degree(self) -> usize {
        match self {
            Lemma::K3 => 3,
            Lemma::K4 => 4,
        }
    }

    pub fn expected_delta(self) -> usize {
        self.degree() - 1
    }
}

/// Measured hypotheses and conclusions of one blow-up instance.
///
/// Conclusion fields are `None` when their hypotheses fail; measured values
/// are always filled in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: Lemma,
    pub vertex: usize,
    pub map: BlowupMap,
    #[serde(with = "crate::serde_graph6")]
    pub target: Graph,
    pub source_doubly: bool,
    pub on_longest_cycle: bool,
    /// The chosen 4-clique `{v, xa, xb, xc}` (K4 case only).
    pub four_clique: Option<Vec<usize>>,
    pub source_circumference: usize,
    pub target_circumference: usize,
    pub target_doubly: bool,
    pub doubly_preserved: Option<bool>,
    pub circumference_shift: Option<bool>,
    /// Target label of the clique vertex matched to the neighbor outside the chosen 4-clique.
    pub v_prime: Option<usize>,
    pub v_prime_qualifies: Option<bool>,
}

impl LemmaReport {
    pub fn hypotheses_hold(&self) -> bool {
        let base = self.source_doubly && self.on_longest_cycle;
        match self.lemma {
            Lemma::K3 => base,
            Lemma::K4 => base && self.four_clique.is_some(),
        }
    }

    /// True when every applicable conclusion was checked and holds.
    pub fn conclusions_hold(&self) -> bool {
        let checks = [self.doubly_preserved, self.circumference_shift, self.v_prime_qualifies];
        let needed = match self.lemma {
            Lemma::K3 => 2,
            Lemma::K4 => 3,
        };
        checks[..needed].iter().all(|c| *c == Some(true))
    }

    pub fn delta(&self) -> isize {
        self.target_circumference as isize - self.source_circumference as isize
    }
}

/// Smallest (lexicographically) 4-clique containing `v`.
pub fn four_clique_at(g: &Graph, v: usize) -> Option<Vec<usize>> {
    let nbrs: Vec<usize> = Members(g.neighbors(v)).collect();
    for (i, &a) in nbrs.iter().enumerate() {
        for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
            if !g.has_edge(a, b) {
                continue;
            }
            for &c in &nbrs[j + 1..] {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    let mut q = vec![v, a, b, c];
                    q.sort_unstable();
                    return Some(q);
                }
            }
        }
    }
    None
}

pub fn verify_lemma1(g: &Graph, v: usize) -> Result<LemmaReport> {
    verify(g, v, Lemma::K3)
}

pub fn verify_lemma2(g: &Graph, v: usize) -> Result<LemmaReport> {
    verify(g, v, Lemma::K4)
}

fn verify(g: &Graph, v: usize, lemma: Lemma) -> Result<LemmaReport> {
    g.check_vertex(v)?;
    let d = g.degree(v);
    if d != lemma.degree() {
        return Err(Error::Degree {
            vertex: v,
            degree: d,
            expected: lemma.degree().to_string(),
        });
    }
    let source_doubly = is_doubly_homogeneously_traceable(g).holds();
    let c = circumference(g).map_or(0, |w| w.len());
    let on_longest_cycle = c > 0 && cycle_through(g, v, c)?.is_some();
    let four_clique = match lemma {
        Lemma::K3 => None,
        Lemma::K4 => four_clique_at(g, v),
    };

    let (target, map) = blow_up(g, v)?;
    let target_c = circumference(&target).map_or(0, |w| w.len());
    let target_doubly = is_doubly_homogeneously_traceable(&target).holds();

    let mut report = LemmaReport {
        lemma,
        vertex: v,
        map,
        target,
        source_doubly,
        on_longest_cycle,
        four_clique,
        source_circumference: c,
        target_circumference: target_c,
        target_doubly,
        doubly_preserved: source_doubly.then_some(target_doubly),
        circumference_shift: None,
        v_prime: None,
        v_prime_qualifies: None,
    };
    match lemma {
        Lemma::K3 => {
            if on_longest_cycle {
                report.circumference_shift = Some(target_c == c + 2);
            }
        }
        Lemma::K4 => {
            if report.hypotheses_hold() {
                report.circumference_shift = Some(target_c == c + 3);
                let clique = report.four_clique.as_ref().expect("hypotheses include the clique");
                let outside = report
                    .map
                    .neighbors
                    .iter()
                    .position(|x| !clique.contains(x))
                    .expect("degree 4 with three neighbors in the clique");
                let vp = report.map.clique[outside];
                let qualifies = cycle_through(&report.target, vp, target_c)?.is_some()
                    && four_clique_at(&report.target, vp).is_some();
                report.v_prime = Some(vp);
                report.v_prime_qualifies = Some(qualifies);
            }
        }
    }
    Ok(report)
}
