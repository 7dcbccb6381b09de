//! Linear-time subroutines on trees and forests. All traversals are
//! iterative, so path-like inputs with millions of vertices are fine.

use thiserror::Error;

use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("input has a cycle")]
    Cycle,
    #[error("input is disconnected")]
    Disconnected,
    #[error("input needs at least {0} vertices")]
    TooSmall(usize),
    #[error("complement of the input is not a tree")]
    NotCoTree,
}

/// Rooted view of a forest: BFS order per component with parents.
struct Rooted {
    order: Vec<usize>,
    parent: Vec<usize>,
}

const NONE: usize = usize::MAX;

fn root_forest(g: &Graph) -> Result<Rooted, TreeError> {
    let n = g.n();
    if g.m() + g.components().len() != n {
        return Err(TreeError::Cycle);
    }
    let mut parent = vec![NONE; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for r in 0..n {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let start = order.len();
        order.push(r);
        let mut i = start;
        while i < order.len() {
            let v = order[i];
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    Ok(Rooted { order, parent })
}

fn tree_only(g: &Graph) -> Result<Rooted, TreeError> {
    let r = root_forest(g)?;
    if g.n() > 0 && !g.is_connected() {
        return Err(TreeError::Disconnected);
    }
    Ok(r)
}

/// Maximum matching and minimum vertex cover of a forest, by matching each
/// unmatched vertex to its parent bottom-up. Each matched edge contributes
/// the parent endpoint to the cover.
pub fn tree_matching_cover(g: &Graph) -> Result<(Vec<Edge>, Vec<usize>), TreeError> {
    let r = root_forest(g)?;
    let mut matched = vec![false; g.n()];
    let mut matching = Vec::new();
    let mut cover = Vec::new();
    for &v in r.order.iter().rev() {
        let p = r.parent[v];
        if p != NONE && !matched[v] && !matched[p] {
            matched[v] = true;
            matched[p] = true;
            matching.push(Edge::new(v, p));
            cover.push(p);
        }
    }
    cover.sort_unstable();
    Ok((matching, cover))
}

/// Minimum dominating set of a forest: bottom-up, a vertex left undominated
/// by its children forces its parent (or itself at a root) into the set.
pub fn tree_domination(g: &Graph) -> Result<Vec<usize>, TreeError> {
    let r = root_forest(g)?;
    let n = g.n();
    let mut chosen = vec![false; n];
    let mut dominated = vec![false; n];
    for &v in r.order.iter().rev() {
        if dominated[v] {
            continue;
        }
        let target = if r.parent[v] == NONE { v } else { r.parent[v] };
        chosen[target] = true;
        dominated[target] = true;
        for &w in g.neighbors(target) {
            dominated[w] = true;
        }
    }
    Ok((0..n).filter(|&v| chosen[v]).collect())
}

/// Maximum independent set of a forest: take every vertex none of whose
/// children was taken.
pub fn tree_alpha(g: &Graph) -> Result<Vec<usize>, TreeError> {
    let r = root_forest(g)?;
    let n = g.n();
    let mut taken = vec![false; n];
    let mut blocked = vec![false; n];
    for &v in r.order.iter().rev() {
        if !blocked[v] {
            taken[v] = true;
            if r.parent[v] != NONE {
                blocked[r.parent[v]] = true;
            }
        }
    }
    Ok((0..n).filter(|&v| taken[v]).collect())
}

/// Maximum 2-independent set of a forest. Three states per subtree:
/// `f0` takes the root; `f1` leaves the root out but has a taken child;
/// `f2` has no taken vertex within distance 1 of the root.
pub fn tree_alpha2(g: &Graph) -> Result<Vec<usize>, TreeError> {
    let r = root_forest(g)?;
    let n = g.n();
    let mut f = vec![[0i64; 3]; n];
    for &v in r.order.iter().rev() {
        let mut f0 = 1;
        let mut f2 = 0;
        let mut gain = i64::MIN;
        for &c in children(g, &r, v) {
            let [c0, c1, c2] = f[c];
            f0 += c2;
            f2 += c1.max(c2);
            gain = gain.max(c0 - c1.max(c2));
        }
        let f1 = if gain == i64::MIN { i64::MIN / 4 } else { f2 + gain };
        f[v] = [f0, f1, f2];
    }
    // Reconstruction: each vertex receives the state its parent assigned.
    let mut state = vec![0u8; n];
    let mut out = Vec::new();
    for &v in &r.order {
        if r.parent[v] == NONE {
            let [a, b, c] = f[v];
            state[v] = if a >= b && a >= c { 0 } else if b >= c { 1 } else { 2 };
        }
        let kids: Vec<usize> = children(g, &r, v).copied().collect();
        match state[v] {
            0 => {
                out.push(v);
                for &c in &kids {
                    state[c] = 2;
                }
            }
            1 => {
                let star = kids
                    .iter()
                    .copied()
                    .max_by_key(|&c| (f[c][0] - f[c][1].max(f[c][2]), std::cmp::Reverse(c)))
                    .expect("state 1 needs a child");
                for &c in &kids {
                    state[c] = if c == star { 0 } else { best12(&f[c]) };
                }
            }
            _ => {
                for &c in &kids {
                    state[c] = best12(&f[c]);
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn best12(f: &[i64; 3]) -> u8 {
    if f[1] >= f[2] {
        1
    } else {
        2
    }
}

fn children<'a>(g: &'a Graph, r: &'a Rooted, v: usize) -> impl Iterator<Item = &'a usize> + 'a {
    g.neighbors(v).iter().filter(move |&&w| r.parent[w] == v)
}

fn farthest(g: &Graph, s: usize) -> (usize, usize) {
    let mut dist = vec![NONE; g.n()];
    dist[s] = 0;
    let mut queue = vec![s];
    let mut i = 0;
    while i < queue.len() {
        let v = queue[i];
        for &w in g.neighbors(v) {
            if dist[w] == NONE {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
        }
        i += 1;
    }
    let last = *queue.last().expect("non-empty");
    (last, dist[last])
}

/// Vertex count of a longest path, by two farthest-vertex sweeps.
pub fn tree_longest_path(g: &Graph) -> Result<usize, TreeError> {
    tree_only(g)?;
    if g.n() == 0 {
        return Ok(0);
    }
    let (a, _) = farthest(g, 0);
    let (_, d) = farthest(g, a);
    Ok(d + 1)
}

/// Maximum induced matching of a forest. States per subtree: `s0` root
/// unmatched; `s1` root reserved for the edge to its parent, so no child is
/// matched; `s2` root matched to a child.
pub fn tree_induced_matching(g: &Graph) -> Result<Vec<Edge>, TreeError> {
    let r = root_forest(g)?;
    let n = g.n();
    let mut s = vec![[0i64; 3]; n];
    for &v in r.order.iter().rev() {
        let mut s0 = 0;
        let mut s1 = 1;
        let mut base = 0;
        let mut gain = i64::MIN;
        for &c in children(g, &r, v) {
            let [c0, c1, c2] = s[c];
            s0 += c0.max(c2);
            s1 += c0;
            base += c0;
            gain = gain.max(c1 - c0);
        }
        let s2 = if gain == i64::MIN { i64::MIN / 4 } else { base + gain };
        s[v] = [s0, s1, s2];
    }
    let mut state = vec![0u8; n];
    let mut out = Vec::new();
    for &v in &r.order {
        if r.parent[v] == NONE {
            state[v] = if s[v][2] > s[v][0] { 2 } else { 0 };
        }
        let kids: Vec<usize> = children(g, &r, v).copied().collect();
        match state[v] {
            0 => {
                for &c in &kids {
                    state[c] = if s[c][2] > s[c][0] { 2 } else { 0 };
                }
            }
            1 => {
                for &c in &kids {
                    state[c] = 0;
                }
            }
            _ => {
                let star = kids
                    .iter()
                    .copied()
                    .max_by_key(|&c| (s[c][1] - s[c][0], std::cmp::Reverse(c)))
                    .expect("state 2 needs a child");
                out.push(Edge::new(v, star));
                for &c in &kids {
                    state[c] = if c == star { 1 } else { 0 };
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// A pair {x, y} with N(x) ∪ N(y) = V. Every leaf's neighbour must be in the
/// pair, which leaves O(1) candidates to test.
pub fn total_dom_pair(g: &Graph) -> Result<Option<(usize, usize)>, TreeError> {
    let n = g.n();
    if n < 2 {
        return Err(TreeError::TooSmall(2));
    }
    tree_only(g)?;
    let mut supports: Vec<usize> = (0..n)
        .filter(|&v| g.degree(v) == 1)
        .map(|v| g.neighbors(v)[0])
        .collect();
    supports.sort_unstable();
    supports.dedup();
    let covers = |x: usize, y: usize| {
        x != y && g.degree(x) + g.degree(y) >= n && {
            let mut hit = vec![false; n];
            for &w in g.neighbors(x).iter().chain(g.neighbors(y)) {
                hit[w] = true;
            }
            hit.iter().all(|&b| b)
        }
    };
    let found = match supports.len() {
        1 => {
            let x = supports[0];
            let mut partners: Vec<usize> = g.neighbors(x).to_vec();
            partners.sort_unstable();
            partners.into_iter().find(|&y| covers(x, y)).map(|y| (x.min(y), x.max(y)))
        }
        2 => {
            let (x, y) = (supports[0], supports[1]);
            covers(x, y).then_some((x, y))
        }
        _ => None,
    };
    Ok(found)
}

/// Two neighborhood-independent edges of a co-tree G, if any. `complement`
/// must be the tree complement of G. The four endpoints form a total
/// dominating set of the tree split into two tree non-edges.
pub fn cotree_ni_pair(complement: &Graph) -> Result<Option<(Edge, Edge)>, TreeError> {
    let t = complement;
    let n = t.n();
    if n < 2 {
        return Ok(None);
    }
    tree_only(t).map_err(|_| TreeError::NotCoTree)?;
    let inner: Vec<usize> = (0..n).filter(|&v| t.degree(v) > 1).collect();
    let k = inner.len();
    if !(2..=6).contains(&k) {
        return Ok(None);
    }
    let inner_deg = |v: usize| t.neighbors(v).iter().filter(|&&w| t.degree(w) > 1).count();
    if inner.iter().any(|&v| inner_deg(v) > 2) {
        return Ok(None);
    }
    // Walk T' from one of its ends.
    let start = *inner.iter().find(|&&v| inner_deg(v) == 1).expect("path end");
    let mut path = vec![start];
    while path.len() < k {
        let last = *path.last().expect("non-empty");
        let next = t
            .neighbors(last)
            .iter()
            .copied()
            .find(|&w| t.degree(w) > 1 && (path.len() < 2 || w != path[path.len() - 2]))
            .expect("path continues");
        path.push(next);
    }
    let leaf_of = |v: usize| -> usize {
        t.neighbors(v).iter().copied().filter(|&w| t.degree(w) == 1).min().expect("T' end has a leaf")
    };
    let has_leaf = |v: usize| t.neighbors(v).iter().any(|&w| t.degree(w) == 1);
    let u = &path;
    let pair = match k {
        2 => {
            let (l1, l2) = (leaf_of(u[0]), leaf_of(u[1]));
            (Edge::new(l1, u[1]), Edge::new(u[0], l2))
        }
        3 => {
            let l1 = leaf_of(u[0]);
            (Edge::new(l1, u[1]), Edge::new(u[0], u[2]))
        }
        4 => (Edge::new(u[0], u[2]), Edge::new(u[1], u[3])),
        5 => {
            if has_leaf(u[2]) {
                return Ok(None);
            }
            (Edge::new(u[0], u[3]), Edge::new(u[1], u[4]))
        }
        _ => {
            if has_leaf(u[2]) || has_leaf(u[3]) {
                return Ok(None);
            }
            (Edge::new(u[0], u[4]), Edge::new(u[1], u[5]))
        }
    };
    Ok(Some(pair))
}
