//! Optimal neighborhood-independent, neighborhood-covering, 2-independent
//! and dominating lists, built bottom-up over the decomposition tree.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decomp::{decompose, NodeId, NodeKind};
use crate::graph::{Edge, Graph};
use crate::recognition::{Analysis, GraphClass, RecognitionError};
use crate::sets::{self, Element, MixedSet};
use crate::structure::{NodeClass, SpiderKind};
use crate::treekit;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OptimalError {
    #[error("join formulas need at least two parts")]
    TooFewParts,
    #[error("certificate line {line}: {msg}")]
    Certificate { line: usize, msg: String },
}

/// The four certificate lists of one node.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalLists {
    pub a_n: MixedSet,
    pub r_n: Vec<usize>,
    pub a_2: Vec<usize>,
    pub d: Vec<usize>,
}

impl OptimalLists {
    fn single(v: usize) -> OptimalLists {
        OptimalLists {
            a_n: MixedSet::from_vertices(&[v]),
            r_n: vec![v],
            a_2: vec![v],
            d: vec![v],
        }
    }

    /// Checks each list against its definition on `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        if !sets::is_neighborhood_covering(g, &self.r_n) {
            return Err("R_n is not neighborhood-covering".into());
        }
        if !sets::is_neighborhood_independent(g, &self.a_n) {
            return Err("A_n is not neighborhood-independent".into());
        }
        if !sets::is_two_independent(g, &self.a_2) {
            return Err("A_2 is not 2-independent".into());
        }
        if !sets::is_dominating(g, &self.d) {
            return Err("D is not dominating".into());
        }
        if self.a_2.len() > self.d.len() || self.a_n.len() > self.r_n.len() {
            return Err("weak duality violated".into());
        }
        Ok(())
    }

    pub fn params(&self) -> JoinParams {
        JoinParams { gamma: self.d.len(), pn: self.r_n.len(), a2: self.a_2.len(), an: self.a_n.len() }
    }
}

/// γ, ρn, α2 and αn of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinParams {
    pub gamma: usize,
    pub pn: usize,
    pub a2: usize,
    pub an: usize,
}

/// Parameters of the join of the given graphs.
pub fn join_formulas(parts: &[JoinParams]) -> Result<JoinParams, OptimalError> {
    if parts.len() < 2 {
        return Err(OptimalError::TooFewParts);
    }
    let min_gamma = parts.iter().map(|p| p.gamma).min().expect("parts");
    let min_pn = parts.iter().map(|p| p.pn).min().expect("parts");
    let gamma = min_gamma.min(2);
    let (pn, an) = if parts.len() == 2 {
        ((min_gamma + 1).min(min_pn), parts[0].a2.min(parts[1].a2))
    } else {
        ((min_gamma + 1).min(min_pn).min(3), 1)
    };
    Ok(JoinParams { gamma, pn, a2: 1, an })
}

/// Work counters of one traversal.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraversalStats {
    /// Edges built by pairing 2-independent lists at two-child S-nodes.
    pub pair_edges: usize,
}

pub fn optimal_lists(g: &Graph) -> Result<OptimalLists, RecognitionError> {
    let tree = decompose(g)?;
    let a = Analysis::new(tree)?;
    Ok(lists_for(&a).0)
}

/// Lists for the root together with traversal counters.
pub fn lists_for(a: &Analysis<'_>) -> (OptimalLists, TraversalStats) {
    let t = &a.tree;
    let mut stats = TraversalStats::default();
    let mut lists: Vec<Option<OptimalLists>> = vec![None; t.len()];
    for h in t.post_order() {
        let kids: Vec<OptimalLists> = t
            .children(h)
            .iter()
            .map(|&c| lists[c].take().expect("children come first"))
            .collect();
        let out = match t.kind(h) {
            NodeKind::Leaf(v) => OptimalLists::single(v),
            NodeKind::Parallel => {
                let mut acc = OptimalLists::default();
                for mut k in kids {
                    acc.a_n.append(&mut k.a_n);
                    acc.r_n.append(&mut k.r_n);
                    acc.a_2.append(&mut k.a_2);
                    acc.d.append(&mut k.d);
                }
                acc
            }
            NodeKind::Series => series_lists(a, h, kids, &mut stats),
            NodeKind::Neighborhood => match a.class {
                GraphClass::P4Tidy => nnode_p4tidy(a, h, &kids),
                GraphClass::TreeCograph => nnode_treecograph(a, h, &kids),
            },
        };
        lists[h] = Some(out);
    }
    (lists[t.root()].take().expect("root"), stats)
}

/// First list of minimum length.
fn shortest(cands: Vec<Vec<usize>>) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for c in cands {
        if best.as_ref().is_none_or(|b| c.len() < b.len()) {
            best = Some(c);
        }
    }
    best.expect("candidates")
}

fn series_lists(
    a: &Analysis<'_>,
    h: NodeId,
    kids: Vec<OptimalLists>,
    stats: &mut TraversalStats,
) -> OptimalLists {
    let t = &a.tree;
    let ch = t.children(h);
    let k = ch.len();
    let rep = |i: usize| t.min_vertex(ch[i]);
    let a_2 = vec![t.min_vertex(h)];
    let a_n = if k == 2 {
        let pairs: Vec<Element> = kids[0]
            .a_2
            .iter()
            .zip(&kids[1].a_2)
            .map(|(&x, &y)| Element::Edge(Edge::new(x, y)))
            .collect();
        stats.pair_edges += pairs.len();
        pairs.into_iter().collect()
    } else {
        [Element::Edge(Edge::new(rep(0), rep(1)))].into_iter().collect()
    };
    let mut d_cands = Vec::with_capacity(k + 1);
    let mut r_cands = Vec::with_capacity(2 * k);
    let mut r_tail = Vec::with_capacity(k);
    for (i, kid) in kids.into_iter().enumerate() {
        let mut star = kid.d.clone();
        star.push(if i == 0 { rep(1) } else { rep(0) });
        r_cands.push(star);
        d_cands.push(kid.d);
        r_tail.push(kid.r_n);
    }
    d_cands.push(vec![rep(0), rep(1)]);
    r_cands.extend(r_tail);
    let mut r_n = shortest(r_cands);
    if k >= 3 && r_n.len() > 3 {
        r_n = vec![rep(0), rep(1), rep(2)];
    }
    OptimalLists { a_n, r_n, a_2, d: shortest(d_cands) }
}

/// Lists at a P4-tidy N-node from its classified quotient.
pub fn nnode_p4tidy(a: &Analysis<'_>, h: NodeId, _kids: &[OptimalLists]) -> OptimalLists {
    let t = &a.tree;
    let ch = t.children(h);
    let rep = |i: usize| t.min_vertex(ch[i]);
    let edge = |x: usize, y: usize| Element::Edge(Edge::new(x, y));
    match &a.node_class[h] {
        NodeClass::C5(o) => {
            let v: Vec<usize> = o.iter().map(|&i| rep(i)).collect();
            OptimalLists {
                a_n: [edge(v[0], v[1]), edge(v[3], v[4])].into_iter().collect(),
                r_n: vec![v[0], v[2], v[4]],
                a_2: vec![v[0]],
                d: vec![v[0], v[2]],
            }
        }
        NodeClass::P5(o) => {
            let v: Vec<usize> = o.iter().map(|&i| rep(i)).collect();
            OptimalLists {
                a_n: [edge(v[0], v[1]), edge(v[3], v[4])].into_iter().collect(),
                r_n: vec![v[1], v[3]],
                a_2: vec![v[0], v[3]],
                d: vec![v[1], v[3]],
            }
        }
        NodeClass::P5Bar(o) => {
            let v: Vec<usize> = o.iter().map(|&i| rep(i)).collect();
            OptimalLists {
                a_n: [edge(v[0], v[4]), edge(v[1], v[3])].into_iter().collect(),
                r_n: vec![v[0], v[1]],
                a_2: vec![v[0]],
                d: vec![v[0], v[1]],
            }
        }
        NodeClass::Spider(s) if s.kind == SpiderKind::Starfish => {
            let v: Vec<usize> = s.body.iter().map(|&i| rep(i)).collect();
            let w: Vec<usize> = s.ends.iter().map(|&i| rep(i)).collect();
            let mut r_n = v.clone();
            if let Some(leg) = s.fat_body_2k1() {
                r_n[leg] = w[leg];
            }
            OptimalLists {
                a_n: v.iter().zip(&w).map(|(&x, &y)| edge(x, y)).collect(),
                r_n,
                a_2: w,
                d: v,
            }
        }
        NodeClass::Spider(s) => {
            let fat_leg = s.fat_body_2k1();
            let mut legs = (0..s.t()).filter(|&i| Some(i) != fat_leg);
            let (i, j) = (legs.next().expect("leg"), legs.next().expect("leg"));
            let (v1, v2, w2) = (rep(s.body[i]), rep(s.body[j]), rep(s.ends[j]));
            let a_n = match fat_leg {
                // the two twins reach the other two ends with no common neighbor
                Some(f) if s.t() == 3 => {
                    let twins = t.vertices(ch[s.body[f]]);
                    [edge(twins[0], rep(s.ends[i])), edge(twins[1], rep(s.ends[j]))]
                        .into_iter()
                        .collect()
                }
                _ => [edge(v1, w2)].into_iter().collect(),
            };
            OptimalLists {
                a_n,
                r_n: vec![v1, v2],
                a_2: vec![v1],
                d: vec![v1, v2],
            }
        }
        other => unreachable!("P4-tidy N-node classified as {}", other.label()),
    }
}

/// Lists at a tree-cograph N-node from its host tree.
pub fn nnode_treecograph(a: &Analysis<'_>, h: NodeId, _kids: &[OptimalLists]) -> OptimalLists {
    let host = a.hosts[h].as_ref().expect("tree-cograph N-node has a host tree");
    let tree = &host.tree;
    let map = |vs: Vec<usize>| -> Vec<usize> { vs.into_iter().map(|v| host.map[v]).collect() };
    let lift = |e: Edge| Element::Edge(Edge::new(host.map[e.u], host.map[e.v]));
    if !host.complemented {
        let (matching, cover) = treekit::tree_matching_cover(tree).expect("tree");
        return OptimalLists {
            a_n: matching.into_iter().map(lift).collect(),
            r_n: map(cover),
            a_2: map(treekit::tree_alpha2(tree).expect("tree")),
            d: map(treekit::tree_domination(tree).expect("tree")),
        };
    }
    let n = tree.n();
    // Host vertex with the smallest original id.
    let first = (0..n).min_by_key(|&v| host.map[v]).expect("non-empty");
    let a_2 = match treekit::total_dom_pair(tree).expect("tree with n >= 4") {
        Some((x, y)) => {
            let mut p = vec![host.map[x], host.map[y]];
            p.sort_unstable();
            p
        }
        None => vec![host.map[first]],
    };
    let a_n: MixedSet = match treekit::cotree_ni_pair(tree).expect("co-tree") {
        Some((e1, e2)) => [lift(e1), lift(e2)].into_iter().collect(),
        None => {
            let mut nonadj = vec![true; n];
            nonadj[first] = false;
            for &w in tree.neighbors(first) {
                nonadj[w] = false;
            }
            let other = (0..n)
                .filter(|&v| nonadj[v])
                .min_by_key(|&v| host.map[v])
                .expect("connected co-tree has an edge at every vertex");
            [Element::Edge(Edge::new(host.map[first], host.map[other]))].into_iter().collect()
        }
    };
    let leaf = (0..n)
        .filter(|&v| tree.degree(v) == 1)
        .min_by_key(|&v| host.map[v])
        .expect("trees have leaves");
    let pair = vec![host.map[leaf], host.map[tree.neighbors(leaf)[0]]];
    OptimalLists { a_n, r_n: pair.clone(), a_2, d: pair }
}

const LIST_NAMES: [&str; 4] = ["A_n", "R_n", "A_2", "D"];

/// Text form: for each list a `<name> <length>` line, then one `v <id>` or
/// `e <u> <v>` line per element.
pub fn write_certificates(l: &OptimalLists) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "A_n {}", l.a_n.len());
    for x in l.a_n.elements() {
        let _ = writeln!(s, "{x}");
    }
    for (name, list) in [("R_n", &l.r_n), ("A_2", &l.a_2), ("D", &l.d)] {
        let _ = writeln!(s, "{name} {}", list.len());
        for v in list {
            let _ = writeln!(s, "v {v}");
        }
    }
    s
}

pub fn parse_certificates(text: &str) -> Result<OptimalLists, OptimalError> {
    let err = |line: usize, msg: &str| OptimalError::Certificate { line, msg: msg.to_string() };
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let mut out = OptimalLists::default();
    for name in LIST_NAMES {
        let (no, header) = lines.next().ok_or_else(|| err(0, &format!("missing {name}")))?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some(name) {
            return Err(err(no + 1, &format!("expected `{name} <length>`")));
        }
        let len: usize = parts
            .next()
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| err(no + 1, "bad length"))?;
        for _ in 0..len {
            let (no, line) = lines.next().ok_or_else(|| err(0, &format!("{name} is short")))?;
            let toks: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| s.parse::<usize>().map_err(|_| err(no + 1, "bad number"));
            let element = match toks.as_slice() {
                ["v", x] => Element::Vertex(num(x)?),
                ["e", x, y] if name == "A_n" => {
                    let (x, y) = (num(x)?, num(y)?);
                    if x == y {
                        return Err(err(no + 1, "loop edge"));
                    }
                    Element::Edge(Edge::new(x, y))
                }
                _ => return Err(err(no + 1, "expected `v <id>` or `e <u> <v>`")),
            };
            match (name, element) {
                ("A_n", x) => out.a_n.push(x),
                (_, Element::Vertex(v)) => match name {
                    "R_n" => out.r_n.push(v),
                    "A_2" => out.a_2.push(v),
                    _ => out.d.push(v),
                },
                _ => unreachable!("edges only parse inside A_n"),
            }
        }
    }
    if let Some((no, _)) = lines.next() {
        return Err(err(no + 1, "trailing content"));
    }
    Ok(out)
}
