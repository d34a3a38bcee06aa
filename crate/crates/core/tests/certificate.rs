mod common;

use htgraph::certificate::PropertyCertificate;
use htgraph::Graph;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn certificates_validate_and_match_oracles(n in 1usize..=8, p in 0.2f64..0.8, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, n, p);
        let c = PropertyCertificate::compute(&g);
        prop_assert!(c.validate());
        let o = common::orderings(&g);
        prop_assert_eq!(c.hamiltonian.value, o.hamiltonian);
        prop_assert_eq!(c.homogeneously_traceable.value, o.homogeneously_traceable());
        prop_assert_eq!(c.doubly, o.doubly());
        prop_assert_eq!(c.circumference.value, common::brute_circumference(&g));
        prop_assert_eq!(c.independence_number.unwrap().value, common::brute_independence(&g));
        prop_assert_eq!(c.homogeneously_traceable.failing_vertex, (0..n).find(|&v| !o.traceable_from(v)));
    }
}

#[test]
fn json_shape() {
    let c = PropertyCertificate::compute(&Graph::petersen());
    let v: serde_json::Value = serde_json::to_value(&c).unwrap();
    assert_eq!(v["graph6"], "IheA@GUAo");
    assert_eq!(v["order"], 10);
    assert_eq!(v["size"], 15);
    assert_eq!(v["regularity"], 3);
    assert_eq!(v["hamiltonian"]["value"], false);
    assert!(v["hamiltonian"]["cycle"].is_null());
    assert_eq!(v["circumference"]["value"], 9);
    assert_eq!(v["circumference"]["cycle"].as_array().unwrap().len(), 9);
    assert_eq!(v["homogeneously_traceable"]["paths"].as_array().unwrap().len(), 10);
    assert_eq!(v["doubly"], true);
    assert_eq!(v["independence_number"]["value"], 4);
    let back: PropertyCertificate = serde_json::from_value(v).unwrap();
    assert_eq!(back, c);
}

#[test]
fn large_orders_skip_independence() {
    let c = PropertyCertificate::compute(&Graph::cycle(48).unwrap());
    assert!(c.independence_number.is_none());
    assert!(c.hamiltonian.value && c.validate());
}

#[test]
fn tampered_paths_fail_validation() {
    let mut c = PropertyCertificate::compute(&Graph::cycle(7).unwrap());
    c.homogeneously_traceable.paths.as_mut().unwrap()[3].swap(1, 2);
    assert!(!c.validate());
    let mut c = PropertyCertificate::compute(&Graph::petersen());
    c.graph6 = "Dhc".into();
    assert!(!c.validate());
}
