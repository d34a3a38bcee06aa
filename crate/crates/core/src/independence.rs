//! Exact maximum independent sets by branch and bound on bitsets.

use crate::error::{Error, Result};
use crate::graph::{Graph, Members, VertexSet};

/// Largest order accepted by [`independence_number`].
pub const INDEPENDENCE_LIMIT: usize = 40;

/// The independence number together with a maximum independent set.
pub fn independence_number(g: &Graph) -> Result<(usize, VertexSet)> {
    if g.order() > INDEPENDENCE_LIMIT {
        return Err(Error::Budget {
            what: "independence number",
            order: g.order(),
            limit: INDEPENDENCE_LIMIT,
        });
    }
    let mut best = (0, 0);
    grow(g, g.vertices(), 0, &mut best);
    Ok((best.0, best.1))
}

fn grow(g: &Graph, mut cand: VertexSet, mut chosen: VertexSet, best: &mut (usize, VertexSet)) {
    // vertices with at most one candidate neighbor belong to some maximum set
    loop {
        let forced = Members(cand).find(|&v| (g.neighbors(v) & cand).count_ones() <= 1);
        match forced {
            Some(v) => {
                chosen |= 1 << v;
                cand &= !(1 << v) & !g.neighbors(v);
            }
            None => break,
        }
    }
    let size = chosen.count_ones() as usize;
    if cand == 0 {
        if size > best.0 {
            *best = (size, chosen);
        }
        return;
    }
    if size + bound(g, cand) <= best.0 {
        return;
    }
    let v = Members(cand)
        .max_by_key(|&v| ((g.neighbors(v) & cand).count_ones(), std::cmp::Reverse(v)))
        .expect("cand is non-empty");
    grow(g, cand & !(1 << v) & !g.neighbors(v), chosen | 1 << v, best);
    grow(g, cand & !(1 << v), chosen, best);
}

// Greedy clique cover: an independent set meets each clique at most once.
fn bound(g: &Graph, mut cand: VertexSet) -> usize {
    let mut cliques = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let mut clique_common = g.neighbors(v) & cand;
        cand &= !(1 << v);
        while clique_common != 0 {
            let u = clique_common.trailing_zeros() as usize;
            cand &= !(1 << u);
            clique_common &= g.neighbors(u);
        }
        cliques += 1;
    }
    cliques
}

/// True iff no two members of `set` are adjacent.
pub fn is_independent(g: &Graph, set: VertexSet) -> bool {
    Members(set).all(|v| g.neighbors(v) & set == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(g: &Graph) -> usize {
        (0u64..1 << g.order())
            .filter(|&s| is_independent(g, s))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn known_values() {
        let (a, w) = independence_number(&Graph::cycle(9).unwrap()).unwrap();
        assert_eq!(a, 4);
        assert!(is_independent(&Graph::cycle(9).unwrap(), w));
        assert_eq!(independence_number(&Graph::complete(5).unwrap()).unwrap().0, 1);
        let p = Graph::petersen();
        let (a, w) = independence_number(&p).unwrap();
        assert_eq!(a, brute(&p));
        assert_eq!(a, 4);
        assert_eq!(w.count_ones(), 4);
        assert!(is_independent(&p, w));
    }

    #[test]
    fn cycles_attain_half() {
        for n in 3..=12 {
            assert_eq!(independence_number(&Graph::cycle(n).unwrap()).unwrap().0, n / 2);
        }
    }

    #[test]
    fn budget() {
        assert!(independence_number(&Graph::empty(41).unwrap()).is_err());
        assert_eq!(independence_number(&Graph::empty(40).unwrap()).unwrap().0, 40);
    }
}
