//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` row per vertex: bit `j` of row `i` is set
//! iff `i` and `j` are adjacent. Every constructor enforces symmetry and the
//! absence of loops, so the rest of the crate can rely on them.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

/// A set of vertices of one graph, as a bit mask.
pub type VertexSet = u64;

/// Iterator over the members of a [`VertexSet`] in ascending order.
#[derive(Debug, Clone, Copy)]
pub struct Members(pub VertexSet);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Members {}

/// Mask with the low `n` bits set.
#[inline]
pub fn full_set(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Build a [`VertexSet`] from vertex labels. Labels must be below 64.
pub fn set_of(vertices: impl IntoIterator<Item = usize>) -> VertexSet {
    vertices.into_iter().fold(0, |acc, v| acc | (1u64 << v))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

/// Sorted degree sequence plus the common degree when the graph is regular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub regular: Option<usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        check_order(n)?;
        let mut rows = vec![0u64; n];
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, order: n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            rows[a] |= 1 << b;
            rows[b] |= 1 << a;
        }
        Ok(Graph { n, rows })
    }

    /// Builds a graph from adjacency rows, validating symmetry and loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        check_order(n)?;
        let mask = full_set(n);
        for (i, &r) in rows.iter().enumerate() {
            if r & !mask != 0 {
                let bad = (r & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: bad, order: n });
            }
            if r >> i & 1 == 1 {
                return Err(Error::LoopEdge(i));
            }
            for j in Members(r) {
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::Invalid(format!("asymmetric adjacency at ({i}, {j})")));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    /// Rows already known to be symmetric and loop-free.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Graph {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph { n: rows.len(), rows }
    }

    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph { n, rows: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        check_order(n)?;
        let all = full_set(n);
        Ok(Graph {
            n,
            rows: (0..n).map(|i| all & !(1 << i)).collect(),
        })
    }

    /// The cycle `0, 1, ..., n-1, 0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Invalid(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The path `0, 1, ..., n-1`.
    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The star with center `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    /// The Petersen graph: outer 5-cycle on `0..5`, inner pentagram on
    /// `5..10` (`5+i ~ 5+(i+2)%5`) and spokes `i ~ i+5`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Graph::from_edges(10, &edges).expect("static edge list")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        full_set(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Edges `(a, b)` with `a < b`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| Members(self.rows[a] & !full_set(a + 1)).map(move |b| (a, b)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degrees.sort_unstable();
        let regular = match (degrees.first(), degrees.last()) {
            (Some(&lo), Some(&hi)) if lo == hi => Some(lo),
            _ => None,
        };
        DegreeProfile { degrees, regular }
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regularity(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    /// True iff every pair of the given vertices is adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> Result<bool> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        Ok(self.is_clique_set(set_of(vertices.iter().copied())))
    }

    /// Clique test on a vertex mask; members must be valid vertices.
    pub fn is_clique_set(&self, set: VertexSet) -> bool {
        Members(set).all(|v| set & !(1 << v) & !self.rows[v] == 0)
    }

    /// Vertices reachable from `start` inside `within` (which must contain `start`).
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        self.reach_set(1u64 << start, within)
    }

    /// Vertices reachable from any of `start` inside `within ∪ start`.
    #[inline]
    pub fn reach_set(&self, start: VertexSet, within: VertexSet) -> VertexSet {
        let mut seen = start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Members(frontier) {
                next |= self.rows[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertices()) == self.vertices()
    }

    /// The graph with vertex `v` deleted; labels above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(Error::Order(0));
        }
        let low = full_set(v);
        let rows = (0..self.n)
            .filter(|&u| u != v)
            .map(|u| {
                let r = self.rows[u];
                (r & low) | ((r >> 1) & !low)
            })
            .collect();
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]` in the result.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal the order");
        let mut rows = vec![0u64; self.n];
        for (v, &r) in self.rows.iter().enumerate() {
            rows[perm[v]] = Members(r).fold(0, |acc, u| acc | 1 << perm[u]);
        }
        Graph { n: self.n, rows }
    }

    /// Adds a new vertex `n` joined to `nbrs`.
    pub fn add_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        check_order(self.n + 1)?;
        let nbrs = nbrs & self.vertices();
        let mut rows = self.rows.clone();
        for u in Members(nbrs) {
            rows[u] |= 1 << self.n;
        }
        rows.push(nbrs);
        Ok(Graph { n: self.n + 1, rows })
    }

    /// Copy of the graph with edges `ab`, `cd` replaced by `ac`, `bd`.
    /// Degrees are unchanged; the caller checks the swap is simple.
    pub(crate) fn swapped(&self, a: usize, b: usize, c: usize, d: usize) -> Graph {
        let mut rows = self.rows.clone();
        rows[a] ^= 1 << b | 1 << c;
        rows[b] ^= 1 << a | 1 << d;
        rows[c] ^= 1 << d | 1 << a;
        rows[d] ^= 1 << c | 1 << b;
        Graph { n: self.n, rows }
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        Err(Error::Order(n))
    } else {
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", crate::graph6::encode(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::graph6::encode(self))
    }
}
