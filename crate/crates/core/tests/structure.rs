use nbhd_perfect::decomp::decompose;
use nbhd_perfect::oracle::{is_p4_tidy_by_definition, is_tree_cograph_by_definition};
use nbhd_perfect::structure::{
    classify_p4tidy_node, host_tree, is_p4_tidy, is_tree_cograph, NodeClass, SpiderKind,
};
use nbhd_perfect::{FamilySpec, Graph, NodeKind};

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

#[test]
fn class_membership_matches_definitions_exhaustively() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            let t = decompose(&g).unwrap();
            assert_eq!(is_p4_tidy(&t), is_p4_tidy_by_definition(&g), "P4-tidy mismatch on {g:?}");
            assert_eq!(
                is_tree_cograph(&t),
                is_tree_cograph_by_definition(&g),
                "tree-cograph mismatch on {g:?}"
            );
        }
    }
}

#[test]
fn spider_partitions_reverify() {
    for n in 4..=6 {
        for g in all_graphs(n) {
            let t = decompose(&g).unwrap();
            for h in 0..t.len() {
                if t.kind(h) != NodeKind::Neighborhood {
                    continue;
                }
                let Ok(NodeClass::Spider(s)) = classify_p4tidy_node(&t, h) else { continue };
                let q = t.prime_quotient(h).unwrap();
                assert!(s.t() >= 2);
                for i in 0..s.t() {
                    for j in 0..s.t() {
                        let leg = q.has_edge(s.ends[i], s.body[j]);
                        match s.kind {
                            SpiderKind::Starfish => assert_eq!(leg, i == j),
                            SpiderKind::Urchin => assert_eq!(leg, i != j),
                        }
                        if i != j {
                            assert!(!q.has_edge(s.ends[i], s.ends[j]));
                            assert!(q.has_edge(s.body[i], s.body[j]));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn generated_instances_stay_in_class() {
    for seed in 0..200 {
        for n in [5, 10, 40, 120] {
            let g = FamilySpec::RandomP4Tidy { n, seed }.generate().unwrap();
            assert!(is_p4_tidy(&decompose(&g).unwrap()), "seed {seed} n {n}");
            let g = FamilySpec::RandomTreeCograph { n, seed }.generate().unwrap();
            assert!(is_tree_cograph(&decompose(&g).unwrap()), "seed {seed} n {n}");
        }
    }
}

#[test]
fn host_trees_match_materialized_nodes() {
    for seed in 0..100 {
        let g = FamilySpec::RandomTreeCograph { n: 30, seed }.generate().unwrap();
        let t = decompose(&g).unwrap();
        for h in 0..t.len() {
            if t.kind(h) != NodeKind::Neighborhood {
                continue;
            }
            let class = nbhd_perfect::structure::classify_treecograph_node(&t, h).unwrap();
            let host = host_tree(&t, h, &class).unwrap();
            assert_eq!(host.tree.m() + 1, host.tree.n());
            assert!(host.tree.is_connected());
            for e in host.tree.edges() {
                let adjacent = g.has_edge(host.map[e.u], host.map[e.v]);
                assert_eq!(adjacent, !host.complemented);
            }
            assert_eq!(host.map.len(), t.size(h));
        }
    }
}
