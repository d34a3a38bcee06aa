//! Brute-force oracles shared by the integration tests. Everything here works
//! from plain adjacency matrices and permutations, independent of the
//! library's solvers.

#![allow(dead_code)]

use htgraph::Graph;
use rand::Rng;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|a| (0..n).map(|b| g.has_edge(a, b)).collect()).collect()
}

/// Calls `f` on every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&p);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// What exhaustive vertex orderings reveal about Hamilton paths and cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orderings {
    pub hamiltonian: bool,
    /// `starts[v]`: second vertices of Hamilton paths starting at `v`.
    pub starts: Vec<Vec<usize>>,
}

impl Orderings {
    /// The single vertex of `K1` is a Hamilton path by itself.
    pub fn traceable_from(&self, v: usize) -> bool {
        self.starts.len() == 1 || !self.starts[v].is_empty()
    }

    pub fn homogeneously_traceable(&self) -> bool {
        (0..self.starts.len()).all(|v| self.traceable_from(v))
    }

    pub fn doubly(&self) -> bool {
        let n = self.starts.len();
        n >= 2 && (0..n).all(|v| self.starts[v].len() >= 2)
    }
}

pub fn orderings(g: &Graph) -> Orderings {
    let n = g.order();
    let adj = adjacency(g);
    let mut hamiltonian = false;
    let mut starts = vec![vec![]; n];
    if n == 1 {
        return Orderings {
            hamiltonian: false,
            starts,
        };
    }
    for_each_permutation(n, |p| {
        if p.windows(2).all(|w| adj[w[0]][w[1]]) {
            if !starts[p[0]].contains(&p[1]) {
                starts[p[0]].push(p[1]);
            }
            if n >= 3 && adj[p[n - 1]][p[0]] {
                hamiltonian = true;
            }
        }
    });
    for s in &mut starts {
        s.sort_unstable();
    }
    Orderings { hamiltonian, starts }
}

/// Longest cycle length by trying every vertex subset in every cyclic order.
pub fn brute_circumference(g: &Graph) -> usize {
    let n = g.order();
    let adj = adjacency(g);
    let mut best = 0;
    for mask in 1u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k < 3 || k <= best {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|&v| mask & 1 << v != 0).collect();
        let first = verts[0];
        let rest = &verts[1..];
        let mut found = false;
        for_each_permutation(rest.len(), |p| {
            if found {
                return;
            }
            let seq: Vec<usize> = std::iter::once(first).chain(p.iter().map(|&i| rest[i])).collect();
            if seq.windows(2).all(|w| adj[w[0]][w[1]]) && adj[seq[k - 1]][first] {
                found = true;
            }
        });
        if found {
            best = k;
        }
    }
    best
}

/// Adjacency bits of `g` relabeled by `p`, packed in row-major upper-triangle order.
fn code_under(adj: &[Vec<bool>], p: &[usize]) -> u64 {
    let n = adj.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | adj[p[i]][p[j]] as u64;
        }
    }
    code
}

/// Lexicographically largest adjacency code over all labelings.
pub fn brute_canonical_code(g: &Graph) -> u64 {
    let adj = adjacency(g);
    let mut best = 0;
    for_each_permutation(g.order(), |p| best = best.max(code_under(&adj, p)));
    best
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let (x, y) = (adjacency(a), adjacency(b));
    let target = code_under(&y, &(0..b.order()).collect::<Vec<_>>());
    let mut found = false;
    for_each_permutation(a.order(), |p| found |= code_under(&x, p) == target);
    found
}

pub fn brute_independence(g: &Graph) -> usize {
    let n = g.order();
    let adj = adjacency(g);
    (0u64..1 << n)
        .filter(|m| (0..n).all(|a| m & 1 << a == 0 || (a + 1..n).all(|b| m & 1 << b == 0 || !adj[a][b])))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// All labeled graphs of order `n` (n <= 7), as edge masks over the pairs.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & 1 << i != 0)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Plain graph6 writer: size byte, then the upper triangle column by column
/// in six-bit groups, each offset by 63.
pub fn naive_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n < 63);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut out = vec![(n as u8 + 63) as char];
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        out.push((v + 63) as char);
    }
    out.into_iter().collect()
}

/// `ends[mask]`: vertices `w` such that some path from `start` to `w` uses
/// exactly the vertices of `mask` (subset dynamic programming, n <= 22).
pub fn path_ends_from(g: &Graph, start: usize) -> Vec<u32> {
    let n = g.order();
    assert!(n <= 22);
    let nbr: Vec<u32> = (0..n).map(|v| g.neighbors(v) as u32).collect();
    let mut ends = vec![0u32; 1 << n];
    ends[1 << start] = 1 << start;
    for mask in 0..1usize << n {
        let mut e = ends[mask];
        while e != 0 {
            let w = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut next = nbr[w] & !(mask as u32);
            while next != 0 {
                let u = next.trailing_zeros() as usize;
                next &= next - 1;
                ends[mask | 1 << u] |= 1 << u;
            }
        }
    }
    ends
}

/// Longest cycle length from subset dynamic programming (n <= 22): a cycle
/// on `mask` is a path from its lowest vertex back to a neighbor of it.
pub fn dp_circumference(g: &Graph) -> usize {
    let n = g.order();
    let nbr: Vec<u32> = (0..n).map(|v| g.neighbors(v) as u32).collect();
    let mut best = 0;
    for s in 0..n {
        // paths may only use vertices above s, so each cycle is counted at its lowest vertex
        let allowed: u32 = !((1u32 << s) - 1) & ((1u64 << n) - 1) as u32;
        let mut ends = vec![0u32; 1 << n];
        ends[1 << s] = 1 << s;
        for mask in (0..1usize << n).filter(|m| m >> s & 1 == 1 && *m as u32 & !allowed == 0) {
            let mut e = ends[mask];
            if e & nbr[s] != 0 && mask.count_ones() >= 3 {
                best = best.max(mask.count_ones() as usize);
            }
            while e != 0 {
                let w = e.trailing_zeros() as usize;
                e &= e - 1;
                let mut next = nbr[w] & allowed & !(mask as u32);
                while next != 0 {
                    let u = next.trailing_zeros() as usize;
                    next &= next - 1;
                    ends[mask | 1 << u] |= 1 << u;
                }
            }
        }
    }
    best
}

/// `firsts[v]`: neighbors `u` such that a Hamilton path starts with the edge `vu`.
pub fn dp_first_edges(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let full = (1usize << n) - 1;
    let mut firsts = vec![vec![]; n];
    for u in 0..n {
        let ends = path_ends_from(g, u);
        for v in 0..n {
            if g.has_edge(u, v) && ends[full & !(1 << v)] != 0 {
                firsts[v].push(u);
            }
        }
    }
    firsts
}
