mod common;

use nbhd_perfect::decomp::decompose;
use nbhd_perfect::oracle::{contains_induced, ParamKind};
use nbhd_perfect::recognition::*;
use nbhd_perfect::structure::{is_p4_tidy, is_tree_cograph};
use nbhd_perfect::{FamilySpec, Graph};

fn free_of(g: &Graph, shapes: &[Forbidden]) -> bool {
    shapes.iter().all(|s| contains_induced(g, &s.graph()).is_none())
}

fn check_witness(g: &Graph, v: &NpVerdict) {
    assert_eq!(v.perfect, v.witness.is_none());
    if let Some(w) = &v.witness {
        let sub = g.induced(&w.vertices).unwrap();
        let pattern = w.shape.graph();
        assert_eq!(sub.n(), pattern.n(), "witness {w} on {g:?}");
        assert!(contains_induced(&sub, &pattern).is_some(), "witness {w} on {g:?}");
    }
}

fn check_graph(g: &Graph) {
    let t = decompose(g).unwrap();
    let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    if is_p4_tidy(&t) {
        let v = recognize_p4tidy(&t).unwrap();
        check_witness(g, &v);
        assert_eq!(v.perfect, nbhd_perfect::oracle::brute_is_np_with_limit(g, 10).unwrap(), "P4-tidy verdict on {g:?}");
        let shapes = [Forbidden::ThreeK2Bar, Forbidden::ThreeSun, Forbidden::C5];
        assert_eq!(v.perfect, free_of(g, &shapes));
        let c = c4_flags(&t).unwrap();
        for h in 0..t.len() {
            let (sub, _) = t.materialize(h);
            assert_eq!(c[h], contains_induced(&sub, &c4).is_some(), "C flag at {h} of {g:?}");
        }
    }
    if is_tree_cograph(&t) {
        let v = recognize_treecograph(&t).unwrap();
        check_witness(g, &v);
        assert_eq!(v.perfect, nbhd_perfect::oracle::brute_is_np_with_limit(g, 10).unwrap(), "tree-cograph verdict on {g:?}");
        assert_eq!(v.perfect, free_of(g, &[Forbidden::ThreeK2Bar, Forbidden::P6Join3K1]));
        let f = tc_flags(&t).unwrap();
        let p6 = FamilySpec::Path(6).generate().unwrap();
        for h in 0..t.len() {
            let (sub, _) = t.materialize(h);
            assert_eq!(f.c[h], contains_induced(&sub, &c4).is_some(), "C flag at {h} of {g:?}");
            assert_eq!(f.p[h], contains_induced(&sub, &p6).is_some(), "P flag at {h} of {g:?}");
            assert_eq!(f.alpha[h], common::param(&sub, ParamKind::Alpha), "alpha at {h} of {g:?}");
        }
    }
}

#[test]
fn exhaustive_small_graphs() {
    for n in 1..=6 {
        for g in common::all_graphs(n) {
            check_graph(&g);
        }
    }
}

#[test]
fn random_class_members() {
    for seed in 0..500u64 {
        let n = 4 + (seed % 7) as usize;
        check_graph(&FamilySpec::RandomP4Tidy { n, seed }.generate().unwrap());
        check_graph(&FamilySpec::RandomTreeCograph { n, seed }.generate().unwrap());
    }
}

#[test]
fn targeted_spiders() {
    use nbhd_perfect::family::FatShape;
    let c4 = FamilySpec::Cycle(4);
    for t in 2..=4 {
        for body in 0..t {
            let plain = FamilySpec::starfish(t).with_head(c4.clone());
            // body vertices sit after the t ends
            let fat = plain.clone().fat(t + body, FatShape::TwoK1).generate().unwrap();
            let (_, v) = recognize(&fat).unwrap();
            assert!(!v.perfect);
            assert_eq!(v.witness.as_ref().unwrap().rule, Rule::FatStarfishHead);
            check_witness(&fat, &v);
            let plain = plain.generate().unwrap();
            assert!(recognize(&plain).unwrap().1.perfect);
            assert!(brute_is_np_big(&plain));
        }
    }
}

fn brute_is_np_big(g: &Graph) -> bool {
    nbhd_perfect::oracle::brute_is_np_with_limit(g, 12).unwrap()
}
