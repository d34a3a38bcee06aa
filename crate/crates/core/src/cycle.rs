//! Hamilton cycles, circumference and the vertices on longest cycles.
//!
//! All three reduce to one branch-and-bound: grow a path from an anchor
//! vertex and close it when the current end is adjacent to the anchor. The
//! bound peels unvisited vertices that cannot be interior to the closing
//! path (fewer than two neighbors among the unvisited vertices and the two
//! path ends) and then keeps only the largest component that touches both
//! ends, since the closing path lies inside one component.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{full_set, Graph, Members, VertexSet};

/// A cycle listed as a cyclic vertex sequence (the closing edge is implied).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleWitness(pub Vec<usize>);

impl CycleWitness {
    /// Number of edges, equal to the number of vertices.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().fold(0, |acc, &v| acc | 1 << v)
    }
}

/// Checks that `cycle` is a cycle of `g` with at least three vertices.
pub fn is_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let mut seen = vec![false; g.order()];
    for &v in cycle {
        if v >= g.order() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]))
}

struct CycleSearch<'a> {
    g: &'a Graph,
    anchor: usize,
    allowed: VertexSet,
    /// Only cycles with strictly more vertices than this are of interest.
    beat: usize,
    /// Stop at the first cycle of at least this length.
    stop_at: usize,
    path: Vec<usize>,
    found: Option<Vec<usize>>,
}

impl CycleSearch<'_> {
    fn run(&mut self) {
        self.path.clear();
        self.path.push(self.anchor);
        self.dfs(1 << self.anchor);
    }

    // Returns true when the search should stop.
    fn dfs(&mut self, visited: VertexSet) -> bool {
        let cur = *self.path.last().expect("path holds the anchor");
        let len = self.path.len();
        let anchor_nbrs = self.g.neighbors(self.anchor);
        // Orientation: the anchor's successor is below its predecessor.
        let above_second = if len >= 2 {
            !full_set(self.path[1] + 1)
        } else {
            u64::MAX
        };
        if len >= 3 && anchor_nbrs >> cur & 1 == 1 && len > self.beat && above_second >> cur & 1 == 1 {
            self.beat = len;
            self.found = Some(self.path.clone());
            if len >= self.stop_at {
                return true;
            }
        }
        if len + self.interior_bound(cur, visited, above_second) <= self.beat {
            return false;
        }
        let free = self.allowed & !visited;
        for u in Members(self.g.neighbors(cur) & free) {
            self.path.push(u);
            let stop = self.dfs(visited | 1 << u);
            self.path.pop();
            if stop {
                return true;
            }
        }
        false
    }

    /// Upper bound on the number of vertices that can still be added between
    /// `cur` and the anchor.
    fn interior_bound(&self, cur: usize, visited: VertexSet, closing: VertexSet) -> usize {
        let g = self.g;
        let ends = 1u64 << cur | 1u64 << self.anchor;
        let mut free = self.allowed & !visited;
        loop {
            let mut drop = 0;
            for u in Members(free) {
                if (g.neighbors(u) & (free | ends)).count_ones() < 2 {
                    drop |= 1 << u;
                }
            }
            if drop == 0 {
                break;
            }
            free &= !drop;
        }
        let close = g.neighbors(self.anchor) & closing;
        let mut best = 0;
        let mut seeds = g.neighbors(cur) & free;
        while seeds != 0 {
            let comp = g.reach(seeds.trailing_zeros() as usize, free);
            seeds &= !comp;
            if comp & close != 0 {
                best = best.max(comp.count_ones() as usize);
            }
        }
        best
    }
}

fn search(g: &Graph, anchor: usize, allowed: VertexSet, beat: usize, stop_at: usize) -> Option<Vec<usize>> {
    let mut s = CycleSearch {
        g,
        anchor,
        allowed,
        beat,
        stop_at,
        path: Vec::with_capacity(g.order()),
        found: None,
    };
    s.run();
    s.found
}

/// A Hamilton cycle, or `None` when the graph has none.
pub fn is_hamiltonian(g: &Graph) -> Result<Option<CycleWitness>> {
    let n = g.order();
    if n < 3 {
        return Err(Error::Invalid(format!("hamiltonicity needs order >= 3, got {n}")));
    }
    if (0..n).any(|v| g.degree(v) < 2) {
        return Ok(None);
    }
    Ok(search(g, 0, g.vertices(), n - 1, n).map(CycleWitness))
}

/// A longest cycle, or `None` for forests.
pub fn circumference(g: &Graph) -> Option<CycleWitness> {
    let n = g.order();
    let mut best: Option<Vec<usize>> = None;
    for anchor in 0..n {
        // cycles whose smallest vertex is `anchor`
        let allowed = g.vertices() & !full_set(anchor);
        let beat = best.as_ref().map_or(2, Vec::len);
        if allowed.count_ones() as usize <= beat {
            break;
        }
        if let Some(c) = search(g, anchor, allowed, beat, allowed.count_ones() as usize) {
            best = Some(c);
        }
        if best.as_ref().is_some_and(|c| c.len() == n) {
            break;
        }
    }
    best.map(CycleWitness)
}

/// A cycle of length at least `length` through `v`, if any.
pub fn cycle_through(g: &Graph, v: usize, length: usize) -> Result<Option<CycleWitness>> {
    g.check_vertex(v)?;
    let beat = length.max(3) - 1;
    Ok(search(g, v, g.vertices(), beat, beat + 1).map(CycleWitness))
}

/// Vertices lying on some longest cycle.
pub fn longest_cycle_vertices(g: &Graph) -> Result<VertexSet> {
    let c = circumference(g).ok_or(Error::Acyclic)?;
    longest_cycle_vertices_with(g, &c)
}

/// As [`longest_cycle_vertices`], given a known longest cycle.
pub fn longest_cycle_vertices_with(g: &Graph, longest: &CycleWitness) -> Result<VertexSet> {
    let c = longest.len();
    let mut covered = longest.vertex_set();
    for v in 0..g.order() {
        if covered >> v & 1 == 1 || g.degree(v) < 2 {
            continue;
        }
        if let Some(w) = cycle_through(g, v, c)? {
            covered |= w.vertex_set();
        }
    }
    Ok(covered)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_circumference_nine() {
        let p = Graph::petersen();
        assert_eq!(is_hamiltonian(&p).unwrap(), None);
        let c = circumference(&p).unwrap();
        assert_eq!(c.len(), 9);
        assert!(is_cycle(&p, c.vertices()));
        assert_eq!(longest_cycle_vertices(&p).unwrap(), p.vertices());
    }

    #[test]
    fn small_cases() {
        let c7 = Graph::cycle(7).unwrap();
        let h = is_hamiltonian(&c7).unwrap().unwrap();
        assert_eq!(h.len(), 7);
        assert!(is_cycle(&c7, h.vertices()));
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(is_hamiltonian(&k4).unwrap().unwrap().len(), 4);
        assert_eq!(longest_cycle_vertices(&k4).unwrap(), 0b1111);
        assert!(is_hamiltonian(&Graph::complete(2).unwrap()).is_err());
        let tree = Graph::star(4).unwrap();
        assert_eq!(circumference(&tree), None);
        assert_eq!(longest_cycle_vertices(&tree), Err(Error::Acyclic));
        let k4e = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(circumference(&k4e).unwrap().len(), 4);
    }

    #[test]
    fn pendant_vertex_is_off_the_cycle() {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.push((0, 5));
        let g = Graph::from_edges(6, &edges).unwrap();
        assert_eq!(circumference(&g).unwrap().len(), 5);
        assert_eq!(longest_cycle_vertices(&g).unwrap(), 0b11111);
    }

    #[test]
    fn witness_validator_rejects_bad_cycles() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(is_cycle(&c5, &[0, 1, 2, 3, 4]));
        assert!(!is_cycle(&c5, &[0, 1, 2]));
        assert!(!is_cycle(&c5, &[0, 1]));
        assert!(!is_cycle(&c5, &[0, 1, 2, 3, 4, 0]));
    }
}
