#![allow(dead_code)]

use nbhd_perfect::graph::Graph;
use nbhd_perfect::oracle::{self, brute_param, brute_param_with_limit, ParamKind};
use nbhd_perfect::sets;
use nbhd_perfect::treekit;

pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

pub fn param(g: &Graph, kind: ParamKind) -> usize {
    brute_param_with_limit(g, kind, 64).unwrap().value
}

fn expect(what: &str, ours: usize, truth: usize) -> Result<(), String> {
    if ours == truth {
        Ok(())
    } else {
        Err(format!("{what}: ours {ours}, brute force {truth}"))
    }
}

/// Compares every tree-kit subroutine on `t` against the oracles and checks
/// each returned certificate.
pub fn treekit_matches_oracle(t: &Graph) -> Result<(), String> {
    let (m, c) = treekit::tree_matching_cover(t).map_err(|e| e.to_string())?;
    if !sets::is_matching(t, &m) || !sets::is_vertex_cover(t, &c) {
        return Err("invalid matching or cover".into());
    }
    expect("nu", m.len(), param(t, ParamKind::Nu))?;
    expect("tau", c.len(), param(t, ParamKind::Tau))?;
    let d = treekit::tree_domination(t).unwrap();
    if !sets::is_dominating(t, &d) {
        return Err("invalid dominating set".into());
    }
    expect("gamma", d.len(), brute_param(t, ParamKind::Gamma).unwrap().value)?;
    let a = treekit::tree_alpha(t).unwrap();
    if !sets::is_independent(t, &a) {
        return Err("invalid independent set".into());
    }
    expect("alpha", a.len(), param(t, ParamKind::Alpha))?;
    let a2 = treekit::tree_alpha2(t).unwrap();
    if !sets::is_two_independent(t, &a2) {
        return Err("invalid 2-independent set".into());
    }
    expect("alpha2", a2.len(), param(t, ParamKind::A2))?;
    expect("longest path", treekit::tree_longest_path(t).unwrap(), oracle::brute_longest_path(t))?;
    let im = treekit::tree_induced_matching(t).unwrap();
    if !sets::is_induced_matching(t, &im) {
        return Err("invalid induced matching".into());
    }
    expect("induced matching", im.len(), oracle::brute_induced_matching(t).unwrap().len())?;
    if t.n() >= 2 {
        let ours = treekit::total_dom_pair(t).unwrap();
        if let Some((x, y)) = ours {
            if !sets::is_total_dominating(t, &[x, y]) {
                return Err(format!("({x},{y}) is not totally dominating"));
            }
        }
        let truth = oracle::brute_total_dom_pair(t).is_some();
        if ours.is_some() != truth {
            return Err(format!("total-dom pair: ours {ours:?}, brute force exists = {truth}"));
        }
        let g = t.complement();
        if !g.is_connected() {
            return Ok(());
        }
        let pair = treekit::cotree_ni_pair(t).unwrap();
        if let Some((e1, e2)) = pair {
            let set = sets::MixedSet::from_edges(&[e1, e2]);
            if !g.has_edge(e1.u, e1.v) || !g.has_edge(e2.u, e2.v) {
                return Err("co-tree pair uses a non-edge".into());
            }
            if !sets::is_neighborhood_independent(&g, &set) {
                return Err(format!("co-tree pair {e1} {e2} is not neighborhood-independent"));
            }
        }
        let an = param(&g, ParamKind::An);
        if pair.is_some() != (an > 1) {
            return Err(format!("co-tree pair {pair:?} but brute alpha_n = {an}"));
        }
    }
    Ok(())
}

/// Checks the optimal lists of `g` for validity and against the brute-force
/// parameter values.
pub fn lists_match_oracle(g: &Graph) -> Result<(), String> {
    let l = nbhd_perfect::optimal::optimal_lists(g).map_err(|e| e.to_string())?;
    l.validate(g)?;
    expect("rho_n", l.r_n.len(), param(g, ParamKind::Pn))?;
    expect("alpha_n", l.a_n.len(), param(g, ParamKind::An))?;
    expect("alpha_2", l.a_2.len(), param(g, ParamKind::A2))?;
    expect("gamma", l.d.len(), param(g, ParamKind::Gamma))
}

pub fn random_graph(n: usize, p: f64, rng: &mut impl rand::Rng) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}
