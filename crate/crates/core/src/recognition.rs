//! Deciding neighborhood-perfectness of P4-tidy graphs and tree-cographs
//! from flags computed bottom-up over the decomposition tree.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decomp::{decompose, DecompError, MdTree, NodeId, NodeKind};
use crate::graph::Graph;
use crate::structure::{
    classify_p4tidy_node, classify_treecograph_node, host_tree, HostTree, NodeClass, SpiderKind,
};
use crate::treekit;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("graph is neither P4-tidy nor a tree-cograph")]
    UnsupportedClass,
    #[error("graph is not P4-tidy")]
    NotP4Tidy,
    #[error("graph is not a tree-cograph")]
    NotTreeCograph,
    #[error(transparent)]
    Decomp(#[from] DecompError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphClass {
    P4Tidy,
    TreeCograph,
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphClass::P4Tidy => "P4-tidy",
            GraphClass::TreeCograph => "tree-cograph",
        })
    }
}

/// The decision rule that fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    /// π(h) is C5.
    PrimeC5,
    /// π(h) is an urchin with at least three ends.
    PrimeUrchin,
    /// Fat starfish with a 2K1 body vertex and a head containing C4.
    FatStarfishHead,
    /// S-node with at least three non-leaf children.
    SeriesThree,
    /// S-node with two non-leaf children, one containing C4.
    SeriesTwoC4,
    /// S-node with two non-leaf children, one containing P6 and the other
    /// three independent vertices.
    SeriesP6Alpha3,
    /// Co-tree N-node whose complement has an induced matching of size 3.
    CoTreeMatching3,
}

impl Rule {
    pub fn code(&self) -> &'static str {
        match self {
            Rule::PrimeC5 => "prime-c5",
            Rule::PrimeUrchin => "prime-urchin",
            Rule::FatStarfishHead => "fat-starfish-head",
            Rule::SeriesThree => "series-three",
            Rule::SeriesTwoC4 => "series-two-c4",
            Rule::SeriesP6Alpha3 => "series-p6-alpha3",
            Rule::CoTreeMatching3 => "cotree-matching3",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Forbidden {
    C5,
    ThreeSun,
    ThreeK2Bar,
    P6Join3K1,
}

impl Forbidden {
    pub fn name(&self) -> &'static str {
        match self {
            Forbidden::C5 => "C5",
            Forbidden::ThreeSun => "3-sun",
            Forbidden::ThreeK2Bar => "3K2bar",
            Forbidden::P6Join3K1 => "P6+3K1",
        }
    }

    pub fn graph(&self) -> Graph {
        use crate::family::{FamilySpec, Named};
        let spec = match self {
            Forbidden::C5 => FamilySpec::Cycle(5),
            Forbidden::ThreeSun => FamilySpec::Named(Named::ThreeSun),
            Forbidden::ThreeK2Bar => FamilySpec::Named(Named::ThreeK2Bar),
            Forbidden::P6Join3K1 => FamilySpec::Named(Named::P6Join3K1),
        };
        spec.generate().expect("named graph")
    }
}

/// A forbidden induced subgraph found by a firing rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub rule: Rule,
    pub node: NodeId,
    pub shape: Forbidden,
    pub vertices: Vec<usize>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "{} at node {} ({}): {}",
            self.shape.name(),
            self.node,
            self.rule.code(),
            vs.join(" ")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NpVerdict {
    pub perfect: bool,
    pub witness: Option<Witness>,
}

impl NpVerdict {
    fn perfect() -> NpVerdict {
        NpVerdict { perfect: true, witness: None }
    }

    fn fails(w: Witness) -> NpVerdict {
        NpVerdict { perfect: false, witness: Some(w) }
    }
}

/// Per-node C (contains C4), P (contains P6) and α flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeFlags {
    pub c: Vec<bool>,
    pub p: Vec<bool>,
    pub alpha: Vec<usize>,
}

/// A decomposition tree with every N-node classified for one graph class.
#[derive(Debug, Clone)]
pub struct Analysis<'g> {
    pub tree: MdTree<'g>,
    pub class: GraphClass,
    pub node_class: Vec<NodeClass>,
    /// Host trees of tree-cograph N-nodes.
    pub hosts: Vec<Option<HostTree>>,
}

impl<'g> Analysis<'g> {
    /// Classifies against P4-tidy first, then tree-cograph.
    pub fn new(tree: MdTree<'g>) -> Result<Analysis<'g>, RecognitionError> {
        Analysis::for_class(tree.clone(), GraphClass::P4Tidy)
            .or_else(|_| Analysis::for_class(tree, GraphClass::TreeCograph))
            .map_err(|_| RecognitionError::UnsupportedClass)
    }

    pub fn for_class(tree: MdTree<'g>, class: GraphClass) -> Result<Analysis<'g>, RecognitionError> {
        let mut node_class = vec![NodeClass::Other; tree.len()];
        let mut hosts = vec![None; tree.len()];
        for h in 0..tree.len() {
            if tree.kind(h) != NodeKind::Neighborhood {
                continue;
            }
            let c = match class {
                GraphClass::P4Tidy => classify_p4tidy_node(&tree, h),
                GraphClass::TreeCograph => classify_treecograph_node(&tree, h),
            }
            .expect("N-node");
            if c == NodeClass::Other {
                return Err(match class {
                    GraphClass::P4Tidy => RecognitionError::NotP4Tidy,
                    GraphClass::TreeCograph => RecognitionError::NotTreeCograph,
                });
            }
            if class == GraphClass::TreeCograph {
                hosts[h] = host_tree(&tree, h, &c);
            }
            node_class[h] = c;
        }
        Ok(Analysis { tree, class, node_class, hosts })
    }

    fn host(&self, h: NodeId) -> &HostTree {
        self.hosts[h].as_ref().expect("tree-cograph N-node has a host tree")
    }

    fn rep(&self, h: NodeId) -> usize {
        self.tree.min_vertex(h)
    }

    /// Quotient vertex `i` of `h` as a representative original vertex.
    fn qrep(&self, h: NodeId, i: usize) -> usize {
        self.rep(self.tree.children(h)[i])
    }
}

fn non_leaf_children(t: &MdTree<'_>, h: NodeId) -> Vec<NodeId> {
    t.children(h).iter().copied().filter(|&c| !t.is_leaf(c)).collect()
}

/// C(h) for every node of a P4-tidy decomposition.
pub fn c4_flags(t: &MdTree<'_>) -> Result<Vec<bool>, RecognitionError> {
    let a = Analysis::for_class(t.clone(), GraphClass::P4Tidy)?;
    Ok(p4tidy_c4(&a))
}

fn p4tidy_c4(a: &Analysis<'_>) -> Vec<bool> {
    let t = &a.tree;
    let mut c = vec![false; t.len()];
    for h in t.post_order() {
        if t.is_leaf(h) {
            continue;
        }
        let from_child = t.children(h).iter().any(|&x| c[x]);
        let here = match (&t.kind(h), &a.node_class[h]) {
            (NodeKind::Series, _) => non_leaf_children(t, h).len() >= 2,
            (NodeKind::Neighborhood, NodeClass::P5Bar(_)) => true,
            (NodeKind::Neighborhood, NodeClass::Spider(s)) => s.fat_body_2k1().is_some(),
            _ => false,
        };
        c[h] = from_child || here;
    }
    c
}

/// C, P and α for every node of a tree-cograph decomposition.
pub fn tc_flags(t: &MdTree<'_>) -> Result<NodeFlags, RecognitionError> {
    let a = Analysis::for_class(t.clone(), GraphClass::TreeCograph)?;
    Ok(treecograph_flags(&a))
}

fn treecograph_flags(a: &Analysis<'_>) -> NodeFlags {
    let t = &a.tree;
    let k = t.len();
    let mut f = NodeFlags { c: vec![false; k], p: vec![false; k], alpha: vec![1; k] };
    for h in t.post_order() {
        let kids = t.children(h);
        match t.kind(h) {
            NodeKind::Leaf(_) => {}
            NodeKind::Parallel => {
                f.c[h] = kids.iter().any(|&x| f.c[x]);
                f.p[h] = kids.iter().any(|&x| f.p[x]);
                f.alpha[h] = kids.iter().map(|&x| f.alpha[x]).sum();
            }
            NodeKind::Series => {
                f.alpha[h] = kids.iter().map(|&x| f.alpha[x]).max().unwrap_or(1);
                f.p[h] = kids.iter().any(|&x| f.p[x]);
                f.c[h] = non_leaf_children(t, h).len() >= 2 || kids.iter().any(|&x| f.c[x]);
            }
            NodeKind::Neighborhood => {
                let host = a.host(h);
                if host.complemented {
                    f.alpha[h] = 2;
                    f.c[h] = treekit::tree_induced_matching(&host.tree).expect("tree").len() >= 2;
                } else {
                    f.alpha[h] = treekit::tree_alpha(&host.tree).expect("tree").len();
                    f.p[h] = treekit::tree_longest_path(&host.tree).expect("tree") >= 6;
                }
            }
        }
    }
    f
}

/// Full pipeline: decompose, pick the class, decide.
pub fn recognize(g: &Graph) -> Result<(GraphClass, NpVerdict), RecognitionError> {
    let tree = decompose(g)?;
    let a = Analysis::new(tree)?;
    Ok((a.class, verdict(&a)))
}

pub fn verdict(a: &Analysis<'_>) -> NpVerdict {
    match a.class {
        GraphClass::P4Tidy => p4tidy_verdict(a, &p4tidy_c4(a)),
        GraphClass::TreeCograph => treecograph_verdict(a, &treecograph_flags(a)),
    }
}

pub fn recognize_p4tidy(t: &MdTree<'_>) -> Result<NpVerdict, RecognitionError> {
    let a = Analysis::for_class(t.clone(), GraphClass::P4Tidy)?;
    Ok(p4tidy_verdict(&a, &p4tidy_c4(&a)))
}

pub fn recognize_treecograph(t: &MdTree<'_>) -> Result<NpVerdict, RecognitionError> {
    let a = Analysis::for_class(t.clone(), GraphClass::TreeCograph)?;
    Ok(treecograph_verdict(&a, &treecograph_flags(&a)))
}

fn p4tidy_verdict(a: &Analysis<'_>, c: &[bool]) -> NpVerdict {
    let t = &a.tree;
    for h in t.post_order() {
        let witness = |rule, shape, vertices| Witness { rule, node: h, shape, vertices };
        match t.kind(h) {
            NodeKind::Neighborhood => match &a.node_class[h] {
                NodeClass::C5(order) => {
                    let vs = order.iter().map(|&i| a.qrep(h, i)).collect();
                    return NpVerdict::fails(witness(Rule::PrimeC5, Forbidden::C5, vs));
                }
                NodeClass::Spider(s) if s.kind == SpiderKind::Urchin && s.t() >= 3 => {
                    let b: Vec<usize> = s.body[..3].iter().map(|&i| a.qrep(h, i)).collect();
                    let e: Vec<usize> = s.ends[..3].iter().map(|&i| a.qrep(h, i)).collect();
                    let vs = vec![b[0], b[1], b[2], e[2], e[0], e[1]];
                    return NpVerdict::fails(witness(Rule::PrimeUrchin, Forbidden::ThreeSun, vs));
                }
                NodeClass::Spider(s) if s.kind == SpiderKind::Starfish => {
                    let (Some(leg), Some(r)) = (s.fat_body_2k1(), s.head) else { continue };
                    let head = t.children(h)[r];
                    if !c[head] {
                        continue;
                    }
                    let mut vs = find_c4(a, c, head);
                    let fat = t.children(h)[s.body[leg]];
                    vs.extend(t.children(fat).iter().map(|&x| a.rep(x)));
                    return NpVerdict::fails(witness(
                        Rule::FatStarfishHead,
                        Forbidden::ThreeK2Bar,
                        vs,
                    ));
                }
                _ => {}
            },
            NodeKind::Series => {
                if let Some(w) = series_3k2bar(a, c, h) {
                    return NpVerdict::fails(w);
                }
            }
            _ => {}
        }
    }
    NpVerdict::perfect()
}

fn series_3k2bar(a: &Analysis<'_>, c: &[bool], h: NodeId) -> Option<Witness> {
    let t = &a.tree;
    let big = non_leaf_children(t, h);
    let (rule, vertices) = if big.len() >= 3 {
        let vs = big[..3].iter().flat_map(|&x| nonedge(a, x)).collect();
        (Rule::SeriesThree, vs)
    } else if big.len() == 2 && (c[big[0]] || c[big[1]]) {
        let (with, other) = if c[big[0]] { (big[0], big[1]) } else { (big[1], big[0]) };
        let mut vs = find_c4(a, c, with);
        vs.extend(nonedge(a, other));
        (Rule::SeriesTwoC4, vs)
    } else {
        return None;
    };
    Some(Witness { rule, node: h, shape: Forbidden::ThreeK2Bar, vertices })
}

fn treecograph_verdict(a: &Analysis<'_>, f: &NodeFlags) -> NpVerdict {
    let t = &a.tree;
    for h in t.post_order() {
        match t.kind(h) {
            NodeKind::Series => {
                if let Some(w) = series_3k2bar(a, &f.c, h) {
                    return NpVerdict::fails(w);
                }
                let big = non_leaf_children(t, h);
                if big.len() == 2 {
                    let (x, y) = (big[0], big[1]);
                    let pair = if f.p[x] && f.alpha[y] >= 3 {
                        Some((x, y))
                    } else if f.p[y] && f.alpha[x] >= 3 {
                        Some((y, x))
                    } else {
                        None
                    };
                    if let Some((with_p6, with_3k1)) = pair {
                        let mut vs = find_p6(a, f, with_p6);
                        vs.extend(independent_set(a, with_3k1).into_iter().take(3));
                        return NpVerdict::fails(Witness {
                            rule: Rule::SeriesP6Alpha3,
                            node: h,
                            shape: Forbidden::P6Join3K1,
                            vertices: vs,
                        });
                    }
                }
            }
            NodeKind::Neighborhood if a.node_class[h] == NodeClass::CoTreeLike => {
                let host = a.host(h);
                let im = treekit::tree_induced_matching(&host.tree).expect("tree");
                if im.len() >= 3 {
                    let vs = im[..3].iter().flat_map(|e| [host.map[e.u], host.map[e.v]]).collect();
                    return NpVerdict::fails(Witness {
                        rule: Rule::CoTreeMatching3,
                        node: h,
                        shape: Forbidden::ThreeK2Bar,
                        vertices: vs,
                    });
                }
            }
            _ => {}
        }
    }
    NpVerdict::perfect()
}

/// Two nonadjacent vertices of a non-complete module.
fn nonedge(a: &Analysis<'_>, h: NodeId) -> [usize; 2] {
    let t = &a.tree;
    let kids = t.children(h);
    match t.kind(h) {
        NodeKind::Parallel => [a.rep(kids[0]), a.rep(kids[1])],
        NodeKind::Neighborhood => {
            let q = t.prime_quotient(h).expect("quotient");
            let j = (1..q.n()).find(|&j| !q.has_edge(0, j)).expect("prime graphs have no universal vertex");
            [a.qrep(h, 0), a.qrep(h, j)]
        }
        _ => unreachable!("leaves and S-nodes are complete or have non-complete children"),
    }
}

/// Vertices of an induced C4 inside module `h`, given C(h).
fn find_c4(a: &Analysis<'_>, c: &[bool], mut h: NodeId) -> Vec<usize> {
    let t = &a.tree;
    while let Some(&x) = t.children(h).iter().find(|&&x| c[x]) {
        h = x;
    }
    match (t.kind(h), &a.node_class[h]) {
        (NodeKind::Series, _) => {
            let big = non_leaf_children(t, h);
            let [p, q] = nonedge(a, big[0]);
            let [r, s] = nonedge(a, big[1]);
            vec![p, r, q, s]
        }
        (NodeKind::Neighborhood, NodeClass::P5Bar(order)) => {
            [0, 1, 3, 4].iter().map(|&i| a.qrep(h, order[i])).collect()
        }
        (NodeKind::Neighborhood, NodeClass::Spider(s)) => {
            let leg = s.fat_body_2k1().expect("C set by a fat body");
            let other = if leg == 0 { 1 } else { 0 };
            let fat = t.children(h)[s.body[leg]];
            let twins: Vec<usize> = t.children(fat).iter().map(|&x| a.rep(x)).collect();
            let cj = a.qrep(h, s.body[other]);
            let end = match s.kind {
                SpiderKind::Starfish => a.qrep(h, s.ends[leg]),
                SpiderKind::Urchin => a.qrep(h, s.ends[other]),
            };
            vec![twins[0], end, twins[1], cj]
        }
        (NodeKind::Neighborhood, NodeClass::CoTreeLike) => {
            let host = a.host(h);
            let im = treekit::tree_induced_matching(&host.tree).expect("tree");
            let (e, f) = (im[0], im[1]);
            vec![host.map[e.u], host.map[f.u], host.map[e.v], host.map[f.v]]
        }
        _ => unreachable!("C flag without a source"),
    }
}

/// Vertices of an induced P6 inside module `h`, given P(h).
fn find_p6(a: &Analysis<'_>, f: &NodeFlags, mut h: NodeId) -> Vec<usize> {
    let t = &a.tree;
    while let Some(&x) = t.children(h).iter().find(|&&x| f.p[x]) {
        h = x;
    }
    let host = a.host(h);
    longest_path(&host.tree).into_iter().take(6).map(|v| host.map[v]).collect()
}

fn longest_path(tree: &Graph) -> Vec<usize> {
    let bfs = |s: usize| {
        let mut parent = vec![usize::MAX; tree.n()];
        parent[s] = s;
        let mut queue = vec![s];
        let mut i = 0;
        while i < queue.len() {
            let v = queue[i];
            for &w in tree.neighbors(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push(w);
                }
            }
            i += 1;
        }
        (*queue.last().expect("non-empty"), parent)
    };
    let (a, _) = bfs(0);
    let (b, parent) = bfs(a);
    let mut path = vec![b];
    while *path.last().expect("non-empty") != a {
        path.push(parent[*path.last().expect("non-empty")]);
    }
    path
}

/// A maximum independent set of G[h] for a tree-cograph node.
fn independent_set(a: &Analysis<'_>, h: NodeId) -> Vec<usize> {
    let t = &a.tree;
    match t.kind(h) {
        NodeKind::Leaf(v) => vec![v],
        NodeKind::Parallel => t.children(h).iter().flat_map(|&x| independent_set(a, x)).collect(),
        NodeKind::Series => t
            .children(h)
            .iter()
            .map(|&x| independent_set(a, x))
            .max_by_key(|s| s.len())
            .expect("children"),
        NodeKind::Neighborhood => {
            let host = a.host(h);
            if host.complemented {
                let e = host.tree.edges().next().expect("co-tree complement has an edge");
                vec![host.map[e.u], host.map[e.v]]
            } else {
                let s = treekit::tree_alpha(&host.tree).expect("tree");
                s.into_iter().map(|v| host.map[v]).collect()
            }
        }
    }
}
