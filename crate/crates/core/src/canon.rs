//! Canonical labeling by partition refinement and individualization.
//!
//! A small nauty-style kernel: ordered partitions are refined to equitable
//! ones, a search tree individualizes vertices of the first non-singleton
//! cell, and each leaf yields a relabeled adjacency matrix. The canonical
//! form is the largest such matrix. Automorphisms found along the way prune
//! the tree (orbit pruning at each node and jumps back to the common
//! ancestor with the first or best leaf).

use std::cmp::Ordering;

use crate::graph::{Graph, Members, VertexSet};
use crate::graph6;

/// Isomorphism-class identifier: the graph6 text of the canonical relabeling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonically labeled graph.
    pub fn graph(&self) -> Graph {
        graph6::decode(&self.0).expect("canonical forms hold valid graph6")
    }
}

impl std::fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalForm({})", String::from_utf8_lossy(&self.0))
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

/// Result of a canonical labeling run.
#[derive(Debug, Clone)]
pub struct Canonical {
    /// `labeling[v]` is the canonical label of vertex `v`.
    pub labeling: Vec<usize>,
    pub graph: Graph,
    /// Automorphisms discovered during the search; they generate the group.
    pub generators: Vec<Vec<usize>>,
}

impl Canonical {
    pub fn form(&self) -> CanonicalForm {
        CanonicalForm(graph6::encode(&self.graph).into_bytes())
    }

    /// Automorphism orbits as a representative (smallest member) per vertex.
    pub fn orbits(&self) -> Vec<usize> {
        orbit_representatives(self.graph.order(), self.generators.iter())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonicalize(g).form()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}

pub fn canonicalize(g: &Graph) -> Canonical {
    let n = g.order();
    let mut cells = vec![g.vertices()];
    refine(g, &mut cells);
    let mut search = Search {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut path = Vec::with_capacity(n);
    search.descend(cells, &mut path);
    let best = search.best.expect("search visits at least one leaf");
    Canonical {
        labeling: best.labeling,
        graph: Graph::from_rows_unchecked(best.cert),
        generators: search.generators,
    }
}

/// Refines an ordered partition to the coarsest equitable refinement.
/// Cells are split by neighbor counts into each splitter cell; the pieces
/// replace the split cell in ascending count order, which keeps the result
/// independent of vertex labels.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<VertexSet>) {
    let mut counts = [0u32; 64];
    loop {
        let mut changed = false;
        let mut si = 0;
        while si < cells.len() {
            let splitter = cells[si];
            let mut ci = 0;
            while ci < cells.len() {
                let cell = cells[ci];
                if cell.count_ones() == 1 {
                    ci += 1;
                    continue;
                }
                let mut lo = u32::MAX;
                let mut hi = 0;
                for v in Members(cell) {
                    let c = (g.neighbors(v) & splitter).count_ones();
                    counts[v] = c;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo == hi {
                    ci += 1;
                    continue;
                }
                let mut pieces: Vec<(u32, VertexSet)> = Vec::new();
                for v in Members(cell) {
                    match pieces.iter_mut().find(|(c, _)| *c == counts[v]) {
                        Some((_, set)) => *set |= 1 << v,
                        None => pieces.push((counts[v], 1 << v)),
                    }
                }
                pieces.sort_unstable_by_key(|&(c, _)| c);
                let k = pieces.len();
                cells.splice(ci..=ci, pieces.into_iter().map(|(_, s)| s));
                ci += k;
                changed = true;
            }
            si += 1;
        }
        if !changed {
            break;
        }
    }
}

struct Leaf {
    cert: Vec<u64>,
    labeling: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(level)` when the caller should unwind to that depth.
    fn descend(&mut self, cells: Vec<VertexSet>, path: &mut Vec<usize>) -> Option<usize> {
        let depth = path.len();
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(&cells, path);
        };
        let cell = cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for w in Members(cell) {
            if !tried.is_empty() {
                let fixing: Vec<&Vec<usize>> = self
                    .generators
                    .iter()
                    .filter(|a| path.iter().all(|&p| a[p] == p))
                    .collect();
                if !fixing.is_empty() {
                    let reps = orbit_representatives(self.g.order(), fixing.into_iter());
                    if tried.iter().any(|&t| reps[t] == reps[w]) {
                        continue;
                    }
                }
            }
            tried.push(w);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << w);
            child.push(cell & !(1 << w));
            child.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut child);
            path.push(w);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[VertexSet], path: &[usize]) -> Option<usize> {
        let n = self.g.order();
        let mut labeling = vec![0usize; n];
        for (i, &c) in cells.iter().enumerate() {
            labeling[c.trailing_zeros() as usize] = i;
        }
        let cert = self.g.relabel(&labeling).rows().to_vec();
        let leaf = Leaf {
            cert,
            labeling,
            path: path.to_vec(),
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                cert: leaf.cert.clone(),
                labeling: leaf.labeling.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if leaf.cert == first.cert {
            let aut = automorphism(&first.labeling, &leaf.labeling);
            self.generators.push(aut);
            return Some(common_prefix(&first.path, &leaf.path));
        }
        let best = self.best.as_ref().expect("best is set with first");
        match leaf.cert.cmp(&best.cert) {
            Ordering::Equal => {
                let aut = automorphism(&best.labeling, &leaf.labeling);
                self.generators.push(aut);
                Some(common_prefix(&best.path, &leaf.path))
            }
            Ordering::Greater => {
                self.best = Some(leaf);
                None
            }
            Ordering::Less => None,
        }
    }
}

// Two labelings giving the same relabeled graph differ by an automorphism
// sending v to the vertex that shares its label in the reference labeling.
fn automorphism(reference: &[usize], other: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; reference.len()];
    for (v, &l) in reference.iter().enumerate() {
        inv[l] = v;
    }
    other.iter().map(|&l| inv[l]).collect()
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Smallest vertex of each orbit under the group generated by `gens`.
pub(crate) fn orbit_representatives<'a>(n: usize, gens: impl Iterator<Item = &'a Vec<usize>>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for a in gens {
        for (v, &w) in a.iter().enumerate() {
            let (rv, rw) = (find(&mut parent, v), find(&mut parent, w));
            if rv != rw {
                let (lo, hi) = if rv < rw { (rv, rw) } else { (rw, rv) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}
