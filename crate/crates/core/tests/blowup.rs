mod common;

use std::collections::BTreeSet;

use htgraph::blowup::{blow_up, four_clique_at, verify_lemma1, verify_lemma2, Lemma};
use htgraph::cycle::circumference;
use htgraph::ham::is_doubly_homogeneously_traceable;
use htgraph::{Error, Graph, Members};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Edge set of `g` with the clique merged back into one vertex, in source labels.
fn contracted(target: &Graph, relabel: &[Option<usize>], clique: &[usize], v: usize) -> BTreeSet<(usize, usize)> {
    let mut back = vec![v; target.order()];
    for (src, img) in relabel.iter().enumerate() {
        if let Some(t) = img {
            back[*t] = src;
        }
    }
    assert!(clique.iter().all(|&c| back[c] == v));
    target
        .edges()
        .map(|(a, b)| (back[a], back[b]))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn structure_of_the_blow_up(n in 2usize..=16, p in 0.15f64..0.8, seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_connected(&mut rng, n, p);
        let v = pick.index(n);
        let d = g.degree(v);
        let (h, map) = blow_up(&g, v).unwrap();
        prop_assert_eq!(h.order(), n + d - 1);
        prop_assert_eq!(h.size(), g.size() + d * (d - 1) / 2);
        prop_assert_eq!(map.target_order(), h.order());
        prop_assert!(h.is_clique_set(map.clique_set()));
        for &c in &map.clique {
            prop_assert_eq!(h.degree(c), d);
        }
        for u in (0..n).filter(|&u| u != v) {
            prop_assert_eq!(h.degree(map.image(u).unwrap()), g.degree(u));
        }
        // each former neighbor gets exactly one clique vertex, in ascending order
        for (i, &x) in map.neighbors.iter().enumerate() {
            let x = map.image(x).unwrap();
            prop_assert_eq!(h.neighbors(x) & map.clique_set(), 1u64 << map.clique[i]);
        }
        let original: BTreeSet<(usize, usize)> = g.edges().collect();
        prop_assert_eq!(contracted(&h, &map.relabel, &map.clique, v), original);
        prop_assert_eq!(h.is_connected(), true);
        if let Some(k) = g.regularity() {
            prop_assert_eq!(h.regularity(), Some(k));
        }
    }
}

#[test]
fn labels_are_deterministic() {
    let g = Graph::petersen();
    let (h, map) = blow_up(&g, 4).unwrap();
    assert_eq!(map.clique, vec![9, 10, 11]);
    assert_eq!(map.neighbors, Members(g.neighbors(4)).collect::<Vec<_>>());
    assert_eq!(map.image(3), Some(3));
    assert_eq!(map.image(5), Some(4));
    assert_eq!(map.image(4), None);
    assert_eq!(blow_up(&g, 4).unwrap().0, h);
}

#[test]
fn rejects_bad_vertices() {
    let g = Graph::petersen();
    assert!(matches!(blow_up(&g, 10), Err(Error::VertexOutOfRange { .. })));
    let isolated = Graph::empty(3).unwrap();
    assert!(matches!(blow_up(&isolated, 0), Err(Error::Degree { .. })));
    assert!(matches!(verify_lemma2(&g, 0), Err(Error::Degree { .. })));
    assert!(matches!(
        verify_lemma1(&Graph::complete(5).unwrap(), 0),
        Err(Error::Degree { .. })
    ));
}

#[test]
fn petersen_blow_ups() {
    let g = Graph::petersen();
    for v in 0..10 {
        let r = verify_lemma1(&g, v).unwrap();
        assert!(r.hypotheses_hold() && r.conclusions_hold());
        assert_eq!((r.source_circumference, r.target_circumference), (9, 11));
        assert_eq!(r.lemma, Lemma::K3);
    }
}

#[test]
fn complete_graph_blow_ups() {
    // K4 and K5 are doubly traceable and every vertex lies on a Hamilton cycle
    let r = verify_lemma1(&Graph::complete(4).unwrap(), 0).unwrap();
    assert!(r.conclusions_hold());
    assert_eq!(r.delta(), 2);
    let r = verify_lemma2(&Graph::complete(5).unwrap(), 2).unwrap();
    assert!(r.hypotheses_hold() && r.conclusions_hold());
    assert_eq!(r.delta(), 3);
    let vp = r.v_prime.unwrap();
    assert!(r.map.clique.contains(&vp));
    assert!(four_clique_at(&r.target, vp).is_some());
}

#[test]
fn failed_hypotheses_leave_conclusions_open() {
    // the centre of a star: degree 3, no Hamilton path from it
    let g = Graph::star(3).unwrap();
    assert!(!is_doubly_homogeneously_traceable(&g).holds());
    let r = verify_lemma1(&g, 0).unwrap();
    assert!(!r.hypotheses_hold());
    assert_eq!(r.doubly_preserved, None);
    assert_eq!(r.v_prime, None);

    // degree 4 but no 4-clique: C_8 squared
    let c8sq = Graph::from_edges(
        8,
        &(0..8)
            .flat_map(|i| [(i, (i + 1) % 8), (i, (i + 2) % 8)])
            .collect::<Vec<_>>(),
    )
    .unwrap();
    assert_eq!(four_clique_at(&c8sq, 0), None);
    let r = verify_lemma2(&c8sq, 0).unwrap();
    assert!(r.source_doubly && r.on_longest_cycle);
    assert!(!r.hypotheses_hold());
    assert_eq!(r.circumference_shift, None);
    assert_eq!(r.v_prime_qualifies, None);
    assert_eq!(r.doubly_preserved, Some(r.target_doubly));
    assert_eq!(r.target_circumference, circumference(&r.target).unwrap().len());
}
