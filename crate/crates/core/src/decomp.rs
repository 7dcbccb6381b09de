use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("cannot decompose the empty graph")]
    EmptyGraph,
    #[error("node {0} is a leaf and has no quotient")]
    LeafHasNoQuotient(NodeId),
    #[error("node {0} does not exist")]
    NoSuchNode(NodeId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Leaf(usize),
    Parallel,
    Series,
    Neighborhood,
}

impl NodeKind {
    pub fn label(&self) -> &'static str {
        match self {
            NodeKind::Leaf(_) => "Leaf",
            NodeKind::Parallel => "P",
            NodeKind::Series => "S",
            NodeKind::Neighborhood => "N",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdNode {
    pub kind: NodeKind,
    pub children: Vec<NodeId>,
    pub parent: Option<NodeId>,
    /// Quotient on the children (vertex `i` is `children[i]`); N-nodes only.
    pub quotient: Option<Graph>,
    size: usize,
    min_vertex: usize,
}

impl MdNode {
    pub fn new(kind: NodeKind, children: Vec<NodeId>, quotient: Option<Graph>) -> MdNode {
        MdNode { kind, children, parent: None, quotient, size: 0, min_vertex: usize::MAX }
    }
}

/// Modular decomposition tree of a graph it borrows.
#[derive(Debug, Clone)]
pub struct MdTree<'g> {
    graph: &'g Graph,
    nodes: Vec<MdNode>,
    root: NodeId,
    leaf_of: Vec<NodeId>,
}

impl<'g> MdTree<'g> {
    /// Assembles a tree from raw nodes without checking it; sizes, parents and
    /// smallest vertices are recomputed. Intended for tests and `validate`.
    pub fn from_nodes(graph: &'g Graph, mut nodes: Vec<MdNode>, root: NodeId) -> MdTree<'g> {
        let mut leaf_of = vec![usize::MAX; graph.n()];
        for node in nodes.iter_mut() {
            node.parent = None;
        }
        let mut order = Vec::new();
        let mut stack = vec![root];
        let mut seen = vec![false; nodes.len()];
        while let Some(h) = stack.pop() {
            if h >= nodes.len() || seen[h] {
                continue;
            }
            seen[h] = true;
            order.push(h);
            for i in 0..nodes[h].children.len() {
                let c = nodes[h].children[i];
                if c < nodes.len() && !seen[c] {
                    nodes[c].parent = Some(h);
                    stack.push(c);
                }
            }
        }
        for &h in order.iter().rev() {
            if let NodeKind::Leaf(v) = nodes[h].kind {
                nodes[h].size = 1;
                nodes[h].min_vertex = v;
                if v < leaf_of.len() {
                    leaf_of[v] = h;
                }
            } else {
                let (mut size, mut min) = (0, usize::MAX);
                for &c in &nodes[h].children {
                    if c < nodes.len() {
                        size += nodes[c].size;
                        min = min.min(nodes[c].min_vertex);
                    }
                }
                nodes[h].size = size;
                nodes[h].min_vertex = min;
            }
        }
        MdTree { graph, nodes, root, leaf_of }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, h: NodeId) -> &MdNode {
        &self.nodes[h]
    }

    pub fn nodes(&self) -> &[MdNode] {
        &self.nodes
    }

    pub fn kind(&self, h: NodeId) -> NodeKind {
        self.nodes[h].kind
    }

    pub fn children(&self, h: NodeId) -> &[NodeId] {
        &self.nodes[h].children
    }

    pub fn is_leaf(&self, h: NodeId) -> bool {
        matches!(self.nodes[h].kind, NodeKind::Leaf(_))
    }

    /// n(h): number of vertices in the module.
    pub fn size(&self, h: NodeId) -> usize {
        self.nodes[h].size
    }

    pub fn min_vertex(&self, h: NodeId) -> usize {
        self.nodes[h].min_vertex
    }

    pub fn leaf(&self, v: usize) -> NodeId {
        self.leaf_of[v]
    }

    /// The module M(h), sorted.
    pub fn vertices(&self, h: NodeId) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes[h].size);
        let mut stack = vec![h];
        while let Some(x) = stack.pop() {
            match self.nodes[x].kind {
                NodeKind::Leaf(v) => out.push(v),
                _ => stack.extend(self.nodes[x].children.iter().copied()),
            }
        }
        out.sort_unstable();
        out
    }

    /// π(h); P- and S-nodes give the edgeless and complete graph on their children.
    pub fn quotient(&self, h: NodeId) -> Result<Graph, DecompError> {
        let node = self.nodes.get(h).ok_or(DecompError::NoSuchNode(h))?;
        let k = node.children.len();
        match node.kind {
            NodeKind::Leaf(_) => Err(DecompError::LeafHasNoQuotient(h)),
            NodeKind::Parallel => Ok(Graph::edgeless(k)),
            NodeKind::Series => Ok(Graph::complete(k)),
            NodeKind::Neighborhood => Ok(node.quotient.clone().expect("N-node carries a quotient")),
        }
    }

    /// Quotient of an N-node without copying.
    pub fn prime_quotient(&self, h: NodeId) -> Option<&Graph> {
        self.nodes[h].quotient.as_ref()
    }

    /// G[h] together with the map from its vertices to original ids.
    pub fn materialize(&self, h: NodeId) -> (Graph, Vec<usize>) {
        let verts = self.vertices(h);
        let g = self.graph.induced(&verts).expect("module vertices are in range");
        (g, verts)
    }

    /// Children before parents.
    pub fn post_order(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((h, expanded)) = stack.pop() {
            if expanded || self.is_leaf(h) {
                out.push(h);
            } else {
                stack.push((h, true));
                for &c in self.nodes[h].children.iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    /// Indented text dump: `<kind> [vertices] (quotient edges)`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let mut stack = vec![(self.root, 0usize)];
        while let Some((h, depth)) = stack.pop() {
            let node = &self.nodes[h];
            let verts: Vec<String> = self.vertices(h).iter().map(|v| v.to_string()).collect();
            let _ = write!(s, "{}{} [{}]", "  ".repeat(depth), node.kind.label(), verts.join(" "));
            if let Some(q) = &node.quotient {
                let edges: Vec<String> = q.edges().map(|e| e.to_string()).collect();
                let _ = write!(s, " ({})", edges.join(" "));
            }
            s.push('\n');
            for &c in node.children.iter().rev() {
                stack.push((c, depth + 1));
            }
        }
        s
    }
}

/// Builds the modular decomposition tree. Children are ordered by their
/// smallest vertex.
pub fn decompose(g: &Graph) -> Result<MdTree<'_>, DecompError> {
    let n = g.n();
    if n == 0 {
        return Err(DecompError::EmptyGraph);
    }
    let mut nodes = vec![MdNode::new(NodeKind::Parallel, Vec::new(), None)];
    let mut pos = vec![usize::MAX; n];
    let mut stack: Vec<(NodeId, Vec<usize>)> = vec![(0, (0..n).collect())];
    while let Some((id, verts)) = stack.pop() {
        if verts.len() == 1 {
            nodes[id].kind = NodeKind::Leaf(verts[0]);
            continue;
        }
        let local = g.induced_with(&verts, &mut pos);
        let (kind, parts, quotient) = split_module(&local);
        let mut children = Vec::with_capacity(parts.len());
        for part in parts {
            let cid = nodes.len();
            nodes.push(MdNode::new(NodeKind::Parallel, Vec::new(), None));
            children.push(cid);
            stack.push((cid, part.into_iter().map(|i| verts[i]).collect()));
        }
        nodes[id].kind = kind;
        nodes[id].children = children;
        nodes[id].quotient = quotient;
    }
    Ok(MdTree::from_nodes(g, nodes, 0))
}

/// Children of the root of `g` (which has at least two vertices).
fn split_module(g: &Graph) -> (NodeKind, Vec<Vec<usize>>, Option<Graph>) {
    let comps = g.components();
    if comps.len() > 1 {
        return (NodeKind::Parallel, comps, None);
    }
    let anti = g.anticomponents();
    if anti.len() > 1 {
        return (NodeKind::Series, anti, None);
    }
    let (parts, q) = prime_children(g);
    (NodeKind::Neighborhood, parts, Some(q))
}

/// Maximal strong modules of a connected and co-connected graph, with the
/// quotient on them.
fn prime_children(g: &Graph) -> (Vec<Vec<usize>>, Graph) {
    let n = g.n();
    let x = (0..n).min_by_key(|&v| (g.degree(v), v)).expect("non-empty");
    let parts = Refiner::new(g, x).run();
    let k = parts.len();
    let mut part_of = vec![usize::MAX; n];
    for (i, p) in parts.iter().enumerate() {
        for &v in p {
            part_of[v] = i;
        }
    }
    let mut adj_x = vec![false; k];
    for &w in g.neighbors(x) {
        adj_x[part_of[w]] = true;
    }
    let qadj: Vec<Vec<usize>> = parts
        .iter()
        .map(|p| {
            let mut l: Vec<usize> =
                g.neighbors(p[0]).iter().filter(|&&w| w != x).map(|&w| part_of[w]).collect();
            l.sort_unstable();
            l.dedup();
            l
        })
        .collect();
    // Y -> Z when Z distinguishes x from Y.
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut mark = vec![usize::MAX; k];
    for z in 0..k {
        if !adj_x[z] {
            for &y in &qadj[z] {
                out[y].push(z);
            }
        } else {
            for &y in &qadj[z] {
                mark[y] = z;
            }
            for (y, o) in out.iter_mut().enumerate() {
                if y != z && mark[y] != z {
                    o.push(z);
                }
            }
        }
    }
    let (comp, ncomp) = strongly_connected(&out);
    let source = source_component(&out, &comp, ncomp);

    let mut child_of = vec![usize::MAX; n];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut mx = vec![x];
    for (i, p) in parts.into_iter().enumerate() {
        if Some(comp[i]) == source {
            groups.push(p);
        } else {
            mx.extend(p);
        }
    }
    mx.sort_unstable();
    groups.push(mx);
    for p in groups.iter_mut() {
        p.sort_unstable();
    }
    groups.sort_by_key(|p| p[0]);
    for (i, p) in groups.iter().enumerate() {
        for &v in p {
            child_of[v] = i;
        }
    }
    let mut qlists = vec![Vec::new(); groups.len()];
    for v in 0..n {
        for &w in g.neighbors(v) {
            if child_of[v] != child_of[w] {
                qlists[child_of[v]].push(child_of[w]);
            }
        }
    }
    (groups, Graph::from_raw_adjacency(qlists))
}

/// The unique source component if it reaches every component.
fn source_component(out: &[Vec<usize>], comp: &[usize], ncomp: usize) -> Option<usize> {
    let mut indeg = vec![0usize; ncomp];
    let mut cadj = vec![Vec::new(); ncomp];
    for (y, list) in out.iter().enumerate() {
        for &z in list {
            if comp[y] != comp[z] {
                indeg[comp[z]] += 1;
                cadj[comp[y]].push(comp[z]);
            }
        }
    }
    let sources: Vec<usize> = (0..ncomp).filter(|&c| indeg[c] == 0).collect();
    if sources.len() != 1 {
        debug_assert!(false, "forcing graph has {} sources", sources.len());
        return None;
    }
    let s = sources[0];
    let mut seen = vec![false; ncomp];
    seen[s] = true;
    let mut stack = vec![s];
    let mut count = 1;
    while let Some(c) = stack.pop() {
        for &d in &cadj[c] {
            if !seen[d] {
                seen[d] = true;
                count += 1;
                stack.push(d);
            }
        }
    }
    debug_assert_eq!(count, ncomp, "source does not reach every component");
    (count == ncomp).then_some(s)
}

/// Iterative Tarjan; returns component ids and their count.
pub(crate) fn strongly_connected(out: &[Vec<usize>]) -> (Vec<usize>, usize) {
    let k = out.len();
    let mut index = vec![usize::MAX; k];
    let mut low = vec![0usize; k];
    let mut on_stack = vec![false; k];
    let mut comp = vec![usize::MAX; k];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut ncomp = 0;
    for s in 0..k {
        if index[s] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(s, 0)];
        index[s] = next_index;
        low[s] = next_index;
        next_index += 1;
        stack.push(s);
        on_stack[s] = true;
        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            if *i < out[v].len() {
                let w = out[v][*i];
                *i += 1;
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(p, _)) = call.last() {
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if w == v {
                            break;
                        }
                    }
                    ncomp += 1;
                }
            }
        }
    }
    (comp, ncomp)
}

/// Partition refinement computing the maximal modules of `g` that avoid `x`.
///
/// Each vertex is a pivot once up front. When a part splits, every piece but
/// the largest re-enters the pivot queue, and is itself refined against the
/// rest of the old part by grouping its vertices on their neighbourhood there.
/// Work per split is charged to the smaller pieces, giving O(m log n).
struct Refiner<'a> {
    g: &'a Graph,
    x: usize,
    part_of: Vec<usize>,
    members: Vec<Vec<usize>>,
    slot: Vec<usize>,
    queue: Vec<usize>,
    queued: Vec<bool>,
    hits: Vec<Vec<usize>>,
    mark: Vec<usize>,
    stamp: usize,
}

impl<'a> Refiner<'a> {
    fn new(g: &'a Graph, x: usize) -> Refiner<'a> {
        let n = g.n();
        let mut r = Refiner {
            g,
            x,
            part_of: vec![usize::MAX; n],
            members: Vec::new(),
            slot: vec![0; n],
            queue: Vec::with_capacity(n),
            queued: vec![false; n],
            hits: Vec::new(),
            mark: Vec::new(),
            stamp: 0,
        };
        let mut near = vec![false; n];
        for &w in g.neighbors(x) {
            near[w] = true;
        }
        let (inside, outside): (Vec<usize>, Vec<usize>) =
            (0..n).filter(|&v| v != x).partition(|&v| near[v]);
        for part in [inside, outside] {
            if !part.is_empty() {
                let id = r.new_part();
                for v in part {
                    r.place(v, id);
                }
            }
        }
        for v in (0..n).rev() {
            if v != x {
                r.queued[v] = true;
                r.queue.push(v);
            }
        }
        r
    }

    fn new_part(&mut self) -> usize {
        self.members.push(Vec::new());
        self.hits.push(Vec::new());
        self.mark.push(0);
        self.members.len() - 1
    }

    fn place(&mut self, v: usize, id: usize) {
        self.part_of[v] = id;
        self.slot[v] = self.members[id].len();
        self.members[id].push(v);
    }

    fn move_to(&mut self, v: usize, id: usize) {
        let old = self.part_of[v];
        let s = self.slot[v];
        self.members[old].swap_remove(s);
        if s < self.members[old].len() {
            let moved = self.members[old][s];
            self.slot[moved] = s;
        }
        self.place(v, id);
    }

    fn enqueue(&mut self, v: usize) {
        if !self.queued[v] {
            self.queued[v] = true;
            self.queue.push(v);
        }
    }

    fn run(mut self) -> Vec<Vec<usize>> {
        let mut touched = Vec::new();
        while let Some(z) = self.queue.pop() {
            self.queued[z] = false;
            let pz = self.part_of[z];
            for &w in self.g.neighbors(z) {
                if w == self.x || self.part_of[w] == pz {
                    continue;
                }
                let p = self.part_of[w];
                if self.hits[p].is_empty() {
                    touched.push(p);
                }
                self.hits[p].push(w);
            }
            for p in touched.drain(..) {
                let hit = std::mem::take(&mut self.hits[p]);
                if hit.len() == self.members[p].len() {
                    continue;
                }
                let q = self.new_part();
                for &w in &hit {
                    self.move_to(w, q);
                }
                self.settle(vec![p, q]);
            }
        }
        self.members.into_iter().filter(|m| !m.is_empty()).collect()
    }

    /// Handles the split of one part into `pieces` and any splits it causes.
    fn settle(&mut self, pieces: Vec<usize>) {
        let mut events = vec![pieces];
        while let Some(pieces) = events.pop() {
            let largest = *pieces
                .iter()
                .max_by_key(|&&p| (self.members[p].len(), std::cmp::Reverse(p)))
                .expect("pieces");
            self.stamp += 1;
            for &p in &pieces {
                self.mark[p] = self.stamp;
            }
            let mut splits: Vec<(usize, Vec<Vec<usize>>)> = Vec::new();
            for &p in &pieces {
                if p == largest {
                    continue;
                }
                let verts = self.members[p].clone();
                for &v in &verts {
                    self.enqueue(v);
                }
                if verts.len() == 1 {
                    continue;
                }
                let mut keyed: Vec<(Vec<usize>, usize)> = verts
                    .iter()
                    .map(|&v| {
                        let key: Vec<usize> = self
                            .g
                            .neighbors(v)
                            .iter()
                            .copied()
                            .filter(|&w| {
                                w != self.x
                                    && self.part_of[w] != p
                                    && self.mark[self.part_of[w]] == self.stamp
                            })
                            .collect();
                        (key, v)
                    })
                    .collect();
                if keyed.iter().all(|(k, _)| *k == keyed[0].0) {
                    continue;
                }
                keyed.sort_unstable();
                let mut groups: Vec<Vec<usize>> = Vec::new();
                for (i, (_, v)) in keyed.iter().enumerate() {
                    if i == 0 || keyed[i - 1].0 != keyed[i].0 {
                        groups.push(Vec::new());
                    }
                    groups.last_mut().expect("group").push(*v);
                }
                splits.push((p, groups));
            }
            for (p, groups) in splits {
                let keep = (0..groups.len()).max_by_key(|&i| groups[i].len()).expect("groups");
                let mut next = vec![p];
                for (i, grp) in groups.iter().enumerate() {
                    if i == keep {
                        continue;
                    }
                    let q = self.new_part();
                    for &v in grp {
                        self.move_to(v, q);
                    }
                    next.push(q);
                }
                events.push(next);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub node: Option<NodeId>,
    pub rule: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Verdict {
    pub failures: Vec<Failure>,
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, node: Option<NodeId>, rule: &'static str, detail: impl Into<String>) {
        self.failures.push(Failure { node, rule, detail: detail.into() });
    }

    pub fn has_rule(&self, rule: &str) -> bool {
        self.failures.iter().any(|f| f.rule == rule)
    }
}

/// Checks every defining property of a modular decomposition tree against `g`.
/// Primality of quotients is checked by exhaustive pair closure, so this is
/// meant for small and medium inputs.
pub fn validate(t: &MdTree<'_>, g: &Graph) -> Verdict {
    let mut verdict = Verdict::default();
    let n = g.n();
    let mut seen_leaf = vec![0usize; n];
    let reachable = reachable_nodes(t);
    for &h in &reachable {
        if let NodeKind::Leaf(v) = t.kind(h) {
            if v < n {
                seen_leaf[v] += 1;
            } else {
                verdict.fail(Some(h), "leaf-count", format!("leaf vertex {v} out of range"));
            }
        }
    }
    if let Some(v) = (0..n).find(|&v| seen_leaf[v] != 1) {
        verdict.fail(None, "leaf-count", format!("vertex {v} appears in {} leaves", seen_leaf[v]));
    }
    if reachable.len() >= 2 * n.max(1) {
        verdict.fail(None, "node-bound", format!("{} nodes for n = {n}", reachable.len()));
    }
    let quotient_total: usize = reachable
        .iter()
        .filter(|&&h| t.kind(h) == NodeKind::Neighborhood)
        .map(|&h| t.children(h).len())
        .sum();
    if quotient_total > 2 * n {
        verdict.fail(None, "quotient-bound", format!("sum of quotient sizes {quotient_total}"));
    }
    if !verdict.is_ok() {
        return verdict;
    }
    for &h in &reachable {
        check_node(t, g, h, &mut verdict);
    }
    verdict
}

fn reachable_nodes(t: &MdTree<'_>) -> Vec<NodeId> {
    let mut out = Vec::new();
    let mut seen = vec![false; t.len()];
    let mut stack = vec![t.root()];
    while let Some(h) = stack.pop() {
        if h >= t.len() || seen[h] {
            continue;
        }
        seen[h] = true;
        out.push(h);
        stack.extend(t.children(h).iter().copied());
    }
    out
}

fn check_node(t: &MdTree<'_>, g: &Graph, h: NodeId, verdict: &mut Verdict) {
    let verts = t.vertices(h);
    let kids = t.children(h);
    match t.kind(h) {
        NodeKind::Leaf(_) => {
            if !kids.is_empty() {
                verdict.fail(Some(h), "leaf-size", "leaf with children");
            }
            return;
        }
        _ => {
            if verts.len() < 2 {
                verdict.fail(Some(h), "leaf-size", "internal node with one vertex");
            }
            if kids.len() < 2 {
                verdict.fail(Some(h), "arity", "internal node with fewer than two children");
            }
        }
    }
    if !g.is_module(&verts) {
        verdict.fail(Some(h), "module", format!("{verts:?} is not a module"));
    }
    let mut child_sets: Vec<Vec<usize>> = kids.iter().map(|&c| t.vertices(c)).collect();
    let total: usize = child_sets.iter().map(Vec::len).sum();
    let mut union: Vec<usize> = child_sets.iter().flatten().copied().collect();
    union.sort_unstable();
    if total != verts.len() || union != verts {
        verdict.fail(Some(h), "children-partition", "children do not partition the module");
        return;
    }
    let (local, _) = t.materialize(h);
    let pos = |v: usize| verts.binary_search(&v).expect("member");
    let as_local = |sets: &[Vec<usize>]| -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> =
            sets.iter().map(|s| s.iter().map(|&v| pos(v)).collect()).collect();
        for s in out.iter_mut() {
            s.sort_unstable();
        }
        out.sort();
        out
    };
    child_sets.sort();
    let local_children = as_local(&child_sets);
    match t.kind(h) {
        NodeKind::Parallel => {
            if local.components() != local_children {
                verdict.fail(Some(h), "P-children=components", "children are not the components");
            }
        }
        NodeKind::Series => {
            if local.anticomponents() != local_children {
                verdict.fail(
                    Some(h),
                    "S-children=anticomponents",
                    "children are not the anticomponents",
                );
            }
        }
        NodeKind::Neighborhood => {
            if !local.is_connected() || local.anticomponents().len() != 1 {
                verdict.fail(Some(h), "N-connected", "G[h] or its complement is disconnected");
            }
            let Some(q) = t.prime_quotient(h) else {
                verdict.fail(Some(h), "N-quotient-edges", "missing quotient");
                return;
            };
            let reps: Vec<usize> = kids.iter().map(|&c| t.min_vertex(c)).collect();
            let expected = g.induced(&reps).expect("representatives in range");
            if *q != expected {
                verdict.fail(Some(h), "N-quotient-edges", "quotient differs from the graph");
            }
            if let Some(m) = nontrivial_module(q) {
                verdict.fail(Some(h), "N-quotient prime", format!("quotient module {m:?}"));
            }
        }
        NodeKind::Leaf(_) => {}
    }
}

/// A module of `q` with at least two and fewer than all vertices, if any.
pub fn nontrivial_module(q: &Graph) -> Option<Vec<usize>> {
    let k = q.n();
    if k <= 2 {
        return None;
    }
    let words = k.div_ceil(64);
    let mut rows = vec![vec![0u64; words]; k];
    for e in q.edges() {
        rows[e.u][e.v / 64] |= 1 << (e.v % 64);
        rows[e.v][e.u / 64] |= 1 << (e.u % 64);
    }
    for a in 0..k {
        for b in a + 1..k {
            let mut inside = vec![0u64; words];
            inside[a / 64] |= 1 << (a % 64);
            inside[b / 64] |= 1 << (b % 64);
            let mut size = 2;
            let mut pending = vec![b];
            while let Some(y) = pending.pop() {
                if size == k {
                    break;
                }
                for w in 0..words {
                    let mut split = (rows[y][w] ^ rows[a][w]) & !inside[w];
                    while split != 0 {
                        let bit = split.trailing_zeros() as usize;
                        split &= split - 1;
                        let z = w * 64 + bit;
                        if z == a || z == y {
                            continue;
                        }
                        inside[w] |= 1 << bit;
                        size += 1;
                        pending.push(z);
                    }
                }
            }
            if size < k {
                return Some((0..k).filter(|&v| inside[v / 64] >> (v % 64) & 1 == 1).collect());
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{FamilySpec, Named};

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn p4_is_a_single_prime_node() {
        let p4 = FamilySpec::Path(4).generate().unwrap();
        let t = decompose(&p4).unwrap();
        assert_eq!(t.kind(t.root()), NodeKind::Neighborhood);
        assert_eq!(t.children(t.root()).len(), 4);
        assert_eq!(t.quotient(t.root()).unwrap(), p4);
        assert!(validate(&t, &p4).is_ok());
    }

    #[test]
    fn two_k2() {
        let gr = g(4, &[(0, 1), (2, 3)]);
        let t = decompose(&gr).unwrap();
        assert_eq!(t.dump(), "P [0 1 2 3]\n  S [0 1]\n    Leaf [0]\n    Leaf [1]\n  S [2 3]\n    Leaf [2]\n    Leaf [3]\n");
    }

    #[test]
    fn path_with_twin_leaf() {
        // a=0 b=1 c=2 d=3, e=4 hangs on b
        let gr = g(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]);
        let t = decompose(&gr).unwrap();
        let root = t.root();
        assert_eq!(t.kind(root), NodeKind::Neighborhood);
        assert_eq!(t.children(root).len(), 4);
        let twin = t.children(root)[0];
        assert_eq!(t.kind(twin), NodeKind::Parallel);
        assert_eq!(t.vertices(twin), vec![0, 4]);
        assert!(gr.is_module(&[0, 4]));
        assert_eq!(t.dump().lines().next().unwrap(), "N [0 1 2 3 4] (0-1 1-2 2-3)");
    }

    #[test]
    fn quotient_and_materialize() {
        let c4 = FamilySpec::Cycle(4).generate().unwrap();
        let t = decompose(&c4).unwrap();
        assert_eq!(t.kind(t.root()), NodeKind::Series);
        assert_eq!(t.quotient(t.root()).unwrap(), Graph::complete(2));
        let leaf = t.leaf(2);
        assert_eq!(t.materialize(leaf).0, Graph::edgeless(1));
        assert_eq!(t.quotient(leaf), Err(DecompError::LeafHasNoQuotient(leaf)));
        let c5 = FamilySpec::Cycle(5).generate().unwrap();
        let t = decompose(&c5).unwrap();
        assert_eq!(t.quotient(t.root()).unwrap(), c5);
    }

    #[test]
    fn degenerate_inputs() {
        let one = Graph::edgeless(1);
        let t = decompose(&one).unwrap();
        assert_eq!(t.kind(t.root()), NodeKind::Leaf(0));
        assert!(validate(&t, &one).is_ok());
        assert!(decompose(&Graph::edgeless(0)).is_err());
        let k2 = Graph::complete(2);
        let t = decompose(&k2).unwrap();
        assert_eq!(t.kind(t.root()), NodeKind::Series);
    }

    #[test]
    fn named_families_validate() {
        let specs = [
            FamilySpec::Named(Named::ThreeK2Bar),
            FamilySpec::Named(Named::C6Join3K1),
            FamilySpec::Named(Named::P6Join3K1),
            FamilySpec::Named(Named::ThreeSun),
            FamilySpec::starfish(4).with_head(FamilySpec::Path(4)),
            FamilySpec::urchin(5),
            FamilySpec::Cycle(7),
            FamilySpec::Path(9),
        ];
        for s in specs {
            let gr = s.generate().unwrap();
            let t = decompose(&gr).unwrap();
            assert!(validate(&t, &gr).is_ok(), "{s}");
        }
    }

    #[test]
    fn mutation_breaks_components_rule() {
        let gr = g(4, &[(0, 1), (2, 3)]);
        let t = decompose(&gr).unwrap();
        let mut nodes = t.nodes().to_vec();
        let (a, b) = (t.leaf(1), t.leaf(2));
        nodes[a].kind = NodeKind::Leaf(2);
        nodes[b].kind = NodeKind::Leaf(1);
        let bad = MdTree::from_nodes(&gr, nodes, t.root());
        assert!(validate(&bad, &gr).has_rule("P-children=components"));
    }

    #[test]
    fn mutation_breaks_primality() {
        let gr = g(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]);
        let q = gr.clone();
        let mut nodes: Vec<MdNode> =
            (0..5).map(|v| MdNode::new(NodeKind::Leaf(v), vec![], None)).collect();
        nodes.push(MdNode::new(NodeKind::Neighborhood, (0..5).collect(), Some(q)));
        let bad = MdTree::from_nodes(&gr, nodes, 5);
        let v = validate(&bad, &gr);
        assert!(v.has_rule("N-quotient prime"), "{v:?}");
    }

    #[test]
    fn primality_check() {
        assert!(nontrivial_module(&FamilySpec::Cycle(6).generate().unwrap()).is_none());
        assert!(nontrivial_module(&FamilySpec::Path(4).generate().unwrap()).is_none());
        assert_eq!(nontrivial_module(&g(3, &[(0, 1)])), Some(vec![0, 1]));
    }

    #[test]
    fn strongly_connected_components() {
        let out = vec![vec![1], vec![2], vec![0, 3], vec![]];
        let (comp, n) = strongly_connected(&out);
        assert_eq!(n, 2);
        assert_eq!(comp[0], comp[1]);
        assert_ne!(comp[0], comp[3]);
    }
}
