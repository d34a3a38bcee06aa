//! Hamilton paths with a fixed endpoint and traceability certificates.
//!
//! The path search is exact depth-first backtracking over bitset
//! neighborhoods. A partial path `p0 .. cur` is abandoned when the unvisited
//! vertices are not all reachable from `cur` through unvisited vertices, or
//! when two unvisited vertices have at most one neighbor among the unvisited
//! vertices and `cur` (only the final endpoint may be that constrained).
//! Neighbors are tried in ascending label order, so results are
//! deterministic.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, Members, VertexSet};

/// A Hamilton path, listed from its first endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HamPath(pub Vec<usize>);

impl HamPath {
    pub fn start(&self) -> usize {
        self.0[0]
    }

    /// The vertex following the start, if the path has an edge.
    pub fn second(&self) -> Option<usize> {
        self.0.get(1).copied()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn reversed(&self) -> HamPath {
        HamPath(self.0.iter().rev().copied().collect())
    }
}

/// Checks that `path` is a Hamilton path of `g`.
pub fn is_hamilton_path(g: &Graph, path: &[usize]) -> bool {
    if path.len() != g.order() {
        return false;
    }
    let mut seen = vec![false; g.order()];
    for &v in path {
        if v >= g.order() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

struct PathSearch<'a> {
    g: &'a Graph,
    all: VertexSet,
    path: Vec<usize>,
}

impl PathSearch<'_> {
    fn extend(&mut self, visited: VertexSet, first_step: VertexSet) -> bool {
        if visited == self.all {
            return true;
        }
        let cur = *self.path.last().expect("path is never empty");
        let free = self.all & !visited;
        let step = self.g.neighbors(cur) & free & first_step;
        if step == 0 {
            return false;
        }
        if self.g.reach_set(step, free) != free {
            return false;
        }
        if free.count_ones() > 1 {
            let around = free | (1 << cur);
            let mut tight = 0;
            for u in Members(free) {
                if (self.g.neighbors(u) & around).count_ones() <= 1 {
                    tight += 1;
                    if tight > 1 {
                        return false;
                    }
                }
            }
        }
        for u in Members(step) {
            self.path.push(u);
            if self.extend(visited | (1 << u), u64::MAX) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

/// Hamilton path beginning with `prefix` whose second vertex lies in
/// `second_choices` (ignored when the prefix already has two vertices).
fn path_with(g: &Graph, prefix: &[usize], second_choices: VertexSet) -> Option<HamPath> {
    let mut visited = 0u64;
    for w in prefix.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return None;
        }
    }
    for &v in prefix {
        if visited >> v & 1 == 1 {
            return None;
        }
        visited |= 1 << v;
    }
    let mut search = PathSearch {
        g,
        all: g.vertices(),
        path: prefix.to_vec(),
    };
    let restrict = if prefix.len() == 1 { second_choices } else { u64::MAX };
    search.extend(visited, restrict).then_some(HamPath(search.path))
}

/// A Hamilton path with endpoint `v`, or `None` when none exists.
pub fn hamilton_path_from(g: &Graph, v: usize) -> Result<Option<HamPath>> {
    g.check_vertex(v)?;
    Ok(path_with(g, &[v], u64::MAX))
}

/// Hamilton path starting `v, u`, if any.
pub fn hamilton_path_via(g: &Graph, v: usize, u: usize) -> Result<Option<HamPath>> {
    g.check_vertex(v)?;
    g.check_vertex(u)?;
    Ok(path_with(g, &[v, u], u64::MAX))
}

/// Neighbors `u` of `v` such that some Hamilton path starts `v, u`.
pub fn start_neighbors(g: &Graph, v: usize) -> Result<VertexSet> {
    g.check_vertex(v)?;
    if g.order() == 1 {
        return Ok(0);
    }
    Ok(Members(g.neighbors(v))
        .filter(|&u| path_with(g, &[v, u], u64::MAX).is_some())
        .fold(0, |acc, u| acc | 1 << u))
}

/// Per-vertex Hamilton path witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceabilityCertificate {
    /// True when every vertex carries two paths with distinct first edges.
    pub doubly: bool,
    /// `paths[v]` starts at `v`; one or two entries.
    pub paths: Vec<Vec<HamPath>>,
}

impl TraceabilityCertificate {
    /// Structural re-check against `g`, independent of the search.
    pub fn validate(&self, g: &Graph) -> bool {
        if self.paths.len() != g.order() {
            return false;
        }
        self.paths.iter().enumerate().all(|(v, ps)| {
            let ok = !ps.is_empty() && ps.iter().all(|p| is_hamilton_path(g, &p.0) && p.start() == v);
            if !ok {
                return false;
            }
            if self.doubly {
                g.order() == 1 || (ps.len() >= 2 && ps[0].second() != ps[1].second())
            } else {
                true
            }
        })
    }
}

/// Outcome of a traceability check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Traceability {
    Certified(TraceabilityCertificate),
    /// The smallest vertex lacking the required path(s).
    Fails {
        vertex: usize,
    },
}

impl Traceability {
    pub fn holds(&self) -> bool {
        matches!(self, Traceability::Certified(_))
    }

    pub fn certificate(&self) -> Option<&TraceabilityCertificate> {
        match self {
            Traceability::Certified(c) => Some(c),
            Traceability::Fails { .. } => None,
        }
    }
}

pub fn is_homogeneously_traceable(g: &Graph) -> Traceability {
    certify(g, 1)
}

pub fn is_doubly_homogeneously_traceable(g: &Graph) -> Traceability {
    certify(g, 2)
}

/// Collects witnesses per vertex. Every Hamilton path found certifies both
/// of its endpoints; rotations (`p0..pi, p_last, .., p_{i+1}` when
/// `p_last ~ pi`) are followed while they certify new (endpoint, first
/// edge) pairs. Vertices still missing witnesses get a direct search.
struct Registry<'a> {
    g: &'a Graph,
    want: usize,
    paths: Vec<Vec<HamPath>>,
}

impl Registry<'_> {
    fn record(&mut self, p: &[usize]) -> bool {
        let v = p[0];
        let second = p.get(1).copied();
        let have = &mut self.paths[v];
        if have.len() >= self.want || have.iter().any(|q| q.second() == second) {
            return false;
        }
        have.push(HamPath(p.to_vec()));
        true
    }

    fn absorb(&mut self, path: HamPath) {
        let mut queue = vec![path.0];
        while let Some(p) = queue.pop() {
            for oriented in [p.clone(), p.iter().rev().copied().collect::<Vec<_>>()] {
                self.record(&oriented);
                // rotate at the far end of `oriented`
                let n = oriented.len();
                if n < 3 {
                    continue;
                }
                let last = oriented[n - 1];
                for i in 0..n - 2 {
                    if !self.g.has_edge(last, oriented[i]) {
                        continue;
                    }
                    let mut rotated = oriented[..=i].to_vec();
                    rotated.extend(oriented[i + 1..].iter().rev());
                    let rev: Vec<usize> = rotated.iter().rev().copied().collect();
                    if self.record(&rev) {
                        queue.push(rotated);
                    }
                }
            }
        }
    }

    fn missing(&self, v: usize) -> bool {
        self.paths[v].len() < self.want
    }
}

fn certify(g: &Graph, want: usize) -> Traceability {
    let n = g.order();
    if n == 1 {
        return if want == 1 {
            Traceability::Certified(TraceabilityCertificate {
                doubly: false,
                paths: vec![vec![HamPath(vec![0])]],
            })
        } else {
            Traceability::Fails { vertex: 0 }
        };
    }
    let mut reg = Registry {
        g,
        want,
        paths: vec![Vec::new(); n],
    };
    for v in 0..n {
        while reg.missing(v) {
            let used = reg.paths[v]
                .iter()
                .filter_map(|p| p.second())
                .fold(0u64, |acc, u| acc | 1 << u);
            match path_with(g, &[v], !used) {
                Some(p) => reg.absorb(p),
                None => return Traceability::Fails { vertex: v },
            }
        }
    }
    Traceability::Certified(TraceabilityCertificate {
        doubly: want == 2,
        paths: reg.paths,
    })
}
