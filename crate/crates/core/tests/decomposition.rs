use nbhd_perfect::decomp::{decompose, validate};
use nbhd_perfect::family::FamilySpec;
use nbhd_perfect::graph::Graph;
use proptest::prelude::*;

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn every_graph_up_to_six_vertices() {
    for n in 1..=6usize {
        let pairs = n * (n - 1) / 2;
        for mask in 0..(1u64 << pairs) {
            let g = graph_from_mask(n, mask);
            let t = decompose(&g).unwrap();
            let v = validate(&t, &g);
            assert!(v.is_ok(), "n={n} mask={mask}: {v:?}");
        }
    }
}

#[test]
fn class_generators_validate() {
    for seed in 0..200 {
        for spec in [
            FamilySpec::RandomP4Tidy { n: 40, seed },
            FamilySpec::RandomTreeCograph { n: 40, seed },
            FamilySpec::RandomTree { n: 40, seed },
        ] {
            let g = spec.generate().unwrap();
            let t = decompose(&g).unwrap();
            let v = validate(&t, &g);
            assert!(v.is_ok(), "{spec}: {v:?}");
        }
    }
}

#[test]
fn large_tree_decomposes_quickly() {
    let g = FamilySpec::RandomTree { n: 200_000, seed: 1 }.generate().unwrap();
    let start = std::time::Instant::now();
    let t = decompose(&g).unwrap();
    assert!(t.len() < 2 * g.n());
    assert!(start.elapsed().as_secs() < 20);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn random_graphs_up_to_eight_vertices(n in 1usize..=8, mask in any::<u64>()) {
        let g = graph_from_mask(n, mask & ((1u64 << (n * (n - 1) / 2)) - 1));
        let t = decompose(&g).unwrap();
        let v = validate(&t, &g);
        prop_assert!(v.is_ok(), "{:?}", v);
        prop_assert_eq!(t.dump(), decompose(&g).unwrap().dump());
    }

    #[test]
    fn random_dense_graphs(n in 9usize..=30, p in 0.05f64..0.95, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        let t = decompose(&g).unwrap();
        let v = validate(&t, &g);
        prop_assert!(v.is_ok(), "{:?}", v);
    }
}
