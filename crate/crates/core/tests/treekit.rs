mod common;

use nbhd_perfect::family::random_tree;
use nbhd_perfect::oracle::{brute_param, ParamKind};
use nbhd_perfect::sets;
use nbhd_perfect::treekit::*;
use proptest::prelude::*;

#[test]
fn random_trees_match_brute_force() {
    for seed in 0..1000u64 {
        let n = 1 + (seed % 12) as usize;
        let t = random_tree(n, seed);
        if let Err(msg) = common::treekit_matches_oracle(&t) {
            panic!("seed {seed}, n {n}: {msg}");
        }
    }
}

#[test]
fn total_domination_lower_bound() {
    for seed in 0..1000u64 {
        let n = 2 + (seed % 11) as usize;
        let t = random_tree(n, seed);
        let leaves = (0..n).filter(|&v| t.degree(v) == 1).count();
        let gt = brute_param(&t, ParamKind::GammaT).unwrap().value;
        assert!(2 * gt + leaves >= n + 2, "seed {seed}");
    }
}

#[test]
fn two_independent_pairs_are_total_dominating_in_complement() {
    for n in 2..=6 {
        for g in common::all_graphs(n) {
            let c = g.complement();
            for x in 0..n {
                for y in x + 1..n {
                    assert_eq!(
                        sets::is_two_independent(&g, &[x, y]),
                        sets::is_total_dominating(&c, &[x, y])
                    );
                }
            }
        }
    }
}

#[test]
fn large_trees_give_valid_certificates() {
    for seed in 0..3 {
        let t = random_tree(100_000, seed);
        let (m, c) = tree_matching_cover(&t).unwrap();
        assert!(sets::is_matching(&t, &m) && sets::is_vertex_cover(&t, &c));
        assert_eq!(m.len(), c.len());
        assert!(sets::is_dominating(&t, &tree_domination(&t).unwrap()));
        assert!(sets::is_independent(&t, &tree_alpha(&t).unwrap()));
        assert!(sets::is_two_independent(&t, &tree_alpha2(&t).unwrap()));
        assert!(sets::is_induced_matching(&t, &tree_induced_matching(&t).unwrap()));
        assert!(tree_longest_path(&t).unwrap() >= 2);
    }
    let long_path = nbhd_perfect::FamilySpec::Path(1_000_000).generate().unwrap();
    assert_eq!(tree_longest_path(&long_path).unwrap(), 1_000_000);
    assert_eq!(tree_alpha2(&long_path).unwrap().len(), 333_334);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]
    #[test]
    fn forests_match_brute_force(n in 1usize..12, seed in any::<u64>(), cut in 0usize..4) {
        // drop a few edges of a random tree to get a forest
        let t = random_tree(n, seed);
        let edges: Vec<_> = t.edges().skip(cut).map(|e| (e.u, e.v)).collect();
        let f = nbhd_perfect::Graph::from_edges(n, edges).unwrap();
        let (m, c) = tree_matching_cover(&f).unwrap();
        prop_assert_eq!(m.len(), brute_param(&f, ParamKind::Nu).unwrap().value);
        prop_assert_eq!(c.len(), brute_param(&f, ParamKind::Tau).unwrap().value);
        prop_assert_eq!(tree_alpha2(&f).unwrap().len(), brute_param(&f, ParamKind::A2).unwrap().value);
        prop_assert_eq!(tree_domination(&f).unwrap().len(), brute_param(&f, ParamKind::Gamma).unwrap().value);
    }
}
