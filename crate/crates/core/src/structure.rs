//! Shapes of N-node quotients for P4-tidy graphs and tree-cographs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decomp::{MdTree, NodeId, NodeKind};
use crate::family::FatShape;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("node {0} is not an N-node")]
    NotNNode(NodeId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpiderKind {
    Starfish,
    Urchin,
}

/// Which quotient vertex of a spider stands for K2 or 2K1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FatPart {
    pub position: usize,
    pub on_body: bool,
    pub shape: FatShape,
}

/// Partition of a prime spider quotient. All entries are quotient vertex
/// indices; `ends[i]` and `body[i]` form leg `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpiderPartition {
    pub kind: SpiderKind,
    pub ends: Vec<usize>,
    pub body: Vec<usize>,
    pub head: Option<usize>,
    pub fat: Option<FatPart>,
}

impl SpiderPartition {
    pub fn t(&self) -> usize {
        self.ends.len()
    }

    /// Fat body vertex standing for 2K1, as a leg index.
    pub fn fat_body_2k1(&self) -> Option<usize> {
        match self.fat {
            Some(FatPart { position, on_body: true, shape: FatShape::TwoK1 }) => {
                self.body.iter().position(|&b| b == position)
            }
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum NodeClass {
    /// Cyclic order v1..v5.
    C5(Vec<usize>),
    /// Path order v1..v5.
    P5(Vec<usize>),
    /// Path order of the complement.
    P5Bar(Vec<usize>),
    Spider(SpiderPartition),
    TreeLike,
    CoTreeLike,
    Other,
}

impl NodeClass {
    pub fn label(&self) -> &'static str {
        match self {
            NodeClass::C5(_) => "C5",
            NodeClass::P5(_) => "P5",
            NodeClass::P5Bar(_) => "P5bar",
            NodeClass::Spider(s) if s.kind == SpiderKind::Starfish => "starfish",
            NodeClass::Spider(_) => "urchin",
            NodeClass::TreeLike => "tree",
            NodeClass::CoTreeLike => "co-tree",
            NodeClass::Other => "other",
        }
    }
}

fn n_node_quotient<'a>(t: &'a MdTree<'_>, h: NodeId) -> Result<&'a Graph, StructureError> {
    match t.kind(h) {
        NodeKind::Neighborhood => Ok(t.prime_quotient(h).expect("N-node quotient")),
        _ => Err(StructureError::NotNNode(h)),
    }
}

/// Shape of a non-leaf child with two vertices.
fn small_child(t: &MdTree<'_>, c: NodeId) -> Option<FatShape> {
    if t.size(c) != 2 {
        return None;
    }
    match t.kind(c) {
        NodeKind::Series => Some(FatShape::K2),
        NodeKind::Parallel => Some(FatShape::TwoK1),
        _ => None,
    }
}

/// Walks a graph whose vertices all have degree at most 2 from `start`.
fn walk(q: &Graph, start: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = q.neighbors(cur).iter().copied().find(|&w| w != prev && w != start);
        match next {
            Some(w) if !order.contains(&w) => {
                order.push(w);
                prev = cur;
                cur = w;
            }
            _ => return order,
        }
    }
}

fn five_vertex_shape(q: &Graph) -> Option<NodeClass> {
    if q.n() != 5 {
        return None;
    }
    let degs: Vec<usize> = (0..5).map(|v| q.degree(v)).collect();
    if q.m() == 5 && degs.iter().all(|&d| d == 2) {
        return Some(NodeClass::C5(walk(q, 0)));
    }
    if q.m() == 4 && degs.iter().all(|&d| d <= 2) {
        let start = degs.iter().position(|&d| d == 1)?;
        return Some(NodeClass::P5(walk(q, start)));
    }
    if q.m() == 6 {
        let c = q.complement();
        if (0..5).all(|v| c.degree(v) <= 2) {
            let start = (0..5).find(|&v| c.degree(v) == 1)?;
            return Some(NodeClass::P5Bar(walk(&c, start)));
        }
    }
    None
}

/// Starfish partition of a prime quotient: the ends are the degree-1 vertices.
fn starfish_partition(q: &Graph) -> Option<SpiderPartition> {
    let k = q.n();
    let ends: Vec<usize> = (0..k).filter(|&v| q.degree(v) == 1).collect();
    let t = ends.len();
    if t < 2 || (k != 2 * t && k != 2 * t + 1) {
        return None;
    }
    let body: Vec<usize> = ends.iter().map(|&s| q.neighbors(s)[0]).collect();
    let mut role = vec![0u8; k];
    for &s in &ends {
        role[s] = 1;
    }
    for &c in &body {
        if role[c] != 0 {
            return None;
        }
        role[c] = 2;
    }
    let head = (0..k).find(|&v| role[v] == 0);
    let has_head = usize::from(head.is_some());
    if body.iter().any(|&c| q.degree(c) != t + has_head) {
        return None;
    }
    if let Some(r) = head {
        if q.degree(r) != t || q.neighbors(r).iter().any(|&w| role[w] != 2) {
            return None;
        }
    }
    Some(SpiderPartition { kind: SpiderKind::Starfish, ends, body, head, fat: None })
}

/// Urchin partition with at least three ends: the ends have degree t − 1.
fn urchin_partition(q: &Graph) -> Option<SpiderPartition> {
    let k = q.n();
    let t = k / 2;
    if t < 3 {
        return None;
    }
    let ends: Vec<usize> = (0..k).filter(|&v| q.degree(v) == t - 1).collect();
    if ends.len() != t {
        return None;
    }
    let mut role = vec![0u8; k];
    for &s in &ends {
        role[s] = 1;
    }
    let mut end_hits = vec![0usize; k];
    for &s in &ends {
        for &w in q.neighbors(s) {
            if role[w] == 1 {
                return None;
            }
            end_hits[w] += 1;
        }
    }
    let non_ends: Vec<usize> = (0..k).filter(|&v| role[v] == 0).collect();
    let head = non_ends.iter().copied().find(|&v| end_hits[v] == 0);
    let has_head = usize::from(head.is_some());
    if k != 2 * t + has_head {
        return None;
    }
    let mut partner = vec![usize::MAX; k];
    let mut seen = vec![false; k];
    for &s in &ends {
        for &w in q.neighbors(s) {
            seen[w] = true;
        }
        let missing: Vec<usize> =
            non_ends.iter().copied().filter(|&c| Some(c) != head && !seen[c]).collect();
        for &w in q.neighbors(s) {
            seen[w] = false;
        }
        if missing.len() != 1 || partner[missing[0]] != usize::MAX {
            return None;
        }
        partner[missing[0]] = s;
    }
    let body: Vec<usize> = ends
        .iter()
        .map(|&s| non_ends.iter().copied().find(|&c| partner[c] == s).expect("bijection"))
        .collect();
    if body.iter().any(|&c| q.degree(c) != 2 * t - 2 + has_head) {
        return None;
    }
    if let Some(r) = head {
        if q.degree(r) != t {
            return None;
        }
    }
    Some(SpiderPartition { kind: SpiderKind::Urchin, ends, body, head, fat: None })
}

/// Identifies π(h) as C5, P5, P5bar or a prime spider and checks the
/// children: leaves except one head child and one child standing for K2 or 2K1.
pub fn classify_p4tidy_node(t: &MdTree<'_>, h: NodeId) -> Result<NodeClass, StructureError> {
    let q = n_node_quotient(t, h)?;
    let children = t.children(h);
    if let Some(shape) = five_vertex_shape(q) {
        let all_leaves = children.iter().all(|&c| t.is_leaf(c));
        return Ok(if all_leaves { shape } else { NodeClass::Other });
    }
    let Some(mut spider) = starfish_partition(q).or_else(|| urchin_partition(q)) else {
        return Ok(NodeClass::Other);
    };
    for (i, &c) in children.iter().enumerate() {
        if t.is_leaf(c) || spider.head == Some(i) {
            continue;
        }
        match small_child(t, c) {
            Some(shape) if spider.fat.is_none() => {
                let on_body = spider.body.contains(&i);
                spider.fat = Some(FatPart { position: i, on_body, shape });
            }
            _ => return Ok(NodeClass::Other),
        }
    }
    Ok(NodeClass::Spider(spider))
}

/// True iff every N-node classifies as one of the P4-tidy shapes.
pub fn is_p4_tidy(t: &MdTree<'_>) -> bool {
    n_nodes(t).all(|h| {
        !matches!(classify_p4tidy_node(t, h), Ok(NodeClass::Other) | Err(_))
    })
}

fn n_nodes<'a>(t: &'a MdTree<'_>) -> impl Iterator<Item = NodeId> + 'a {
    (0..t.len()).filter(|&h| t.kind(h) == NodeKind::Neighborhood)
}

/// A child whose children are all leaves and whose kind matches `kind`.
fn flat_child(t: &MdTree<'_>, c: NodeId, kind: NodeKind) -> bool {
    t.kind(c) == kind && t.children(c).iter().all(|&x| t.is_leaf(x))
}

/// TreeLike when G[h] is a tree: π(h) is a tree and every non-leaf child is
/// edgeless and sits at a leaf of π(h). CoTreeLike dually on the complement.
pub fn classify_treecograph_node(t: &MdTree<'_>, h: NodeId) -> Result<NodeClass, StructureError> {
    let q = n_node_quotient(t, h)?;
    let k = q.n();
    let children = t.children(h);
    let fits = |kind: NodeKind, leaf_degree: usize| {
        children.iter().enumerate().all(|(i, &c)| {
            t.is_leaf(c) || (q.degree(i) == leaf_degree && flat_child(t, c, kind))
        })
    };
    if q.m() + 1 == k && fits(NodeKind::Parallel, 1) {
        return Ok(NodeClass::TreeLike);
    }
    if q.m() + (k - 1) == k * (k - 1) / 2 && fits(NodeKind::Series, k - 2) {
        return Ok(NodeClass::CoTreeLike);
    }
    Ok(NodeClass::Other)
}

/// True iff every N-node is TreeLike or CoTreeLike.
pub fn is_tree_cograph(t: &MdTree<'_>) -> bool {
    n_nodes(t).all(|h| {
        matches!(classify_treecograph_node(t, h), Ok(NodeClass::TreeLike | NodeClass::CoTreeLike))
    })
}

/// The tree behind a tree-cograph N-node: G[h] itself when TreeLike, its
/// complement when CoTreeLike. Built from π(h) and the children without
/// touching G. `map[i]` is the original id of tree vertex `i`.
#[derive(Debug, Clone)]
pub struct HostTree {
    pub tree: Graph,
    pub map: Vec<usize>,
    pub complemented: bool,
}

pub fn host_tree(t: &MdTree<'_>, h: NodeId, class: &NodeClass) -> Option<HostTree> {
    let complemented = match class {
        NodeClass::TreeLike => false,
        NodeClass::CoTreeLike => true,
        _ => return None,
    };
    let q = t.prime_quotient(h)?;
    let base = if complemented { q.complement() } else { q.clone() };
    let children = t.children(h);
    let mut map = Vec::with_capacity(t.size(h));
    let mut members: Vec<Vec<usize>> = Vec::with_capacity(children.len());
    for &c in children {
        let verts: Vec<usize> = if t.is_leaf(c) {
            vec![t.min_vertex(c)]
        } else {
            t.children(c).iter().map(|&x| t.min_vertex(x)).collect()
        };
        members.push((map.len()..map.len() + verts.len()).collect());
        map.extend(verts);
    }
    let mut edges = Vec::with_capacity(map.len());
    for e in base.edges() {
        for &a in &members[e.u] {
            for &b in &members[e.v] {
                edges.push((a, b));
            }
        }
    }
    let tree = Graph::from_edges(map.len(), edges).expect("host tree edges are in range");
    Some(HostTree { tree, map, complemented })
}
