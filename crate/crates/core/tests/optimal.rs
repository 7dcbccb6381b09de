mod common;

use nbhd_perfect::decomp::decompose;
use nbhd_perfect::family::FatShape;
use nbhd_perfect::optimal::*;
use nbhd_perfect::oracle::ParamKind;
use nbhd_perfect::recognition::Analysis;
use nbhd_perfect::sets::Element;
use nbhd_perfect::structure::{is_p4_tidy, is_tree_cograph};
use nbhd_perfect::{FamilySpec, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn in_class(g: &Graph) -> bool {
    let t = decompose(g).unwrap();
    is_p4_tidy(&t) || is_tree_cograph(&t)
}

#[test]
fn exhaustive_small_graphs() {
    for n in 1..=6 {
        for g in common::all_graphs(n).filter(in_class) {
            if let Err(e) = common::lists_match_oracle(&g) {
                panic!("{e} on {g:?}");
            }
        }
    }
}

#[test]
fn random_class_members() {
    for seed in 0..500u64 {
        let n = 4 + (seed % 7) as usize;
        for spec in [FamilySpec::RandomP4Tidy { n, seed }, FamilySpec::RandomTreeCograph { n, seed }] {
            let g = spec.generate().unwrap();
            if let Err(e) = common::lists_match_oracle(&g) {
                panic!("{e} on {spec:?}");
            }
        }
    }
}

#[test]
fn large_instances_validate_and_pairing_is_bounded() {
    for seed in 0..20u64 {
        for spec in [
            FamilySpec::RandomP4Tidy { n: 200, seed },
            FamilySpec::RandomTreeCograph { n: 200, seed },
        ] {
            let g = spec.generate().unwrap();
            let a = Analysis::new(decompose(&g).unwrap()).unwrap();
            let (l, stats) = lists_for(&a);
            l.validate(&g).unwrap();
            assert!(stats.pair_edges + l.a_2.len() <= g.n());
        }
    }
}

#[test]
fn spider_parameters() {
    let heads = [None, Some(FamilySpec::Complete(3)), Some(FamilySpec::Path(4))];
    for t in 2..=6 {
        for head in &heads {
            let mut spec = FamilySpec::starfish(t);
            if let Some(h) = head {
                spec = spec.with_head(h.clone());
            }
            let l = optimal_lists(&spec.generate().unwrap()).unwrap();
            assert_eq!((l.r_n.len(), l.a_n.len()), (t, t), "{spec:?}");
        }
    }
    for t in 3..=6 {
        let g = FamilySpec::urchin(t).generate().unwrap();
        let l = optimal_lists(&g).unwrap();
        assert_eq!((l.r_n.len(), l.a_n.len()), (2, 1));
        assert!(matches!(l.a_n.elements(), [Element::Edge(_)]));
        l.validate(&g).unwrap();
    }
}

#[test]
fn fat_spiders() {
    // starfish(3): ends 0..3, body 3..6; the 2K1 twin of body vertex 4 is 6
    let g = FamilySpec::starfish(3).fat(4, FatShape::TwoK1).generate().unwrap();
    let l = optimal_lists(&g).unwrap();
    assert_eq!(l.r_n, vec![3, 1, 5]);
    for t in 3..=5 {
        for v in 0..2 * t {
            for shape in [FatShape::K2, FatShape::TwoK1] {
                for base in [FamilySpec::starfish(t), FamilySpec::urchin(t)] {
                    let g = base.clone().fat(v, shape).generate().unwrap();
                    if let Err(e) = common::lists_match_oracle(&g) {
                        panic!("{e} on {base:?} fat {v} {shape:?}");
                    }
                }
            }
        }
    }
}

fn brute_params(g: &Graph) -> JoinParams {
    JoinParams {
        gamma: common::param(g, ParamKind::Gamma),
        pn: common::param(g, ParamKind::Pn),
        a2: common::param(g, ParamKind::A2),
        an: common::param(g, ParamKind::An),
    }
}

#[test]
fn join_formulas_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..150 {
        let parts = if round % 3 == 0 { 3 } else { 2 };
        let graphs: Vec<Graph> = (0..parts)
            .map(|_| {
                let n = 1 + (round * 7 + parts) % 5;
                common::random_graph(n, 0.4, &mut rng)
            })
            .collect();
        let joined = Graph::join_all(&graphs).unwrap();
        let params: Vec<JoinParams> = graphs.iter().map(brute_params).collect();
        assert_eq!(join_formulas(&params).unwrap(), brute_params(&joined), "{graphs:?}");
    }
}

#[test]
fn certificates_round_trip() {
    for seed in 0..20u64 {
        let g = FamilySpec::RandomP4Tidy { n: 30, seed }.generate().unwrap();
        let l = optimal_lists(&g).unwrap();
        assert_eq!(parse_certificates(&write_certificates(&l)).unwrap(), l);
    }
}
