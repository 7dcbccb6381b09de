use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Graph};

/// A vertex or an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Element {
    Vertex(usize),
    Edge(Edge),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v {v}"),
            Element::Edge(e) => write!(f, "e {} {}", e.u, e.v),
        }
    }
}

/// Ordered collection of vertices and edges without repetitions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixedSet(Vec<Element>);

impl MixedSet {
    pub fn new() -> MixedSet {
        MixedSet(Vec::new())
    }

    pub fn from_vertices(vs: &[usize]) -> MixedSet {
        MixedSet(vs.iter().map(|&v| Element::Vertex(v)).collect())
    }

    pub fn from_edges(es: &[Edge]) -> MixedSet {
        MixedSet(es.iter().map(|&e| Element::Edge(e)).collect())
    }

    pub fn push(&mut self, x: Element) {
        self.0.push(x);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.0
    }

    pub fn append(&mut self, other: &mut MixedSet) {
        self.0.append(&mut other.0);
    }

    pub fn has_duplicates(&self) -> bool {
        let mut v = self.0.clone();
        v.sort_unstable();
        v.windows(2).any(|w| w[0] == w[1])
    }
}

impl FromIterator<Element> for MixedSet {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> MixedSet {
        MixedSet(iter.into_iter().collect())
    }
}

fn element_in_graph(g: &Graph, x: &Element) -> bool {
    match *x {
        Element::Vertex(v) => v < g.n(),
        Element::Edge(e) => g.has_edge(e.u, e.v),
    }
}

/// Is `x` contained in the closed neighborhood of `v`?
fn inside(g: &Graph, v: usize, x: &Element) -> bool {
    let close = |w: usize| w == v || g.has_edge(v, w);
    match *x {
        Element::Vertex(w) => close(w),
        Element::Edge(e) => close(e.u) && close(e.v),
    }
}

fn distinct(vs: &[usize]) -> bool {
    let mut s = vs.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

/// Every vertex and edge lies in G[v] for some v of `r`.
pub fn is_neighborhood_covering(g: &Graph, r: &[usize]) -> bool {
    if r.iter().any(|&v| v >= g.n()) || !distinct(r) {
        return false;
    }
    let mut near = vec![false; g.n()];
    for &v in r {
        near[v] = true;
        for &w in g.neighbors(v) {
            near[w] = true;
        }
    }
    if near.iter().any(|&b| !b) {
        return false;
    }
    let mut chosen = vec![false; g.n()];
    for &v in r {
        chosen[v] = true;
    }
    g.edges().all(|e| {
        chosen[e.u]
            || chosen[e.v]
            || common_neighbor_in(g, e.u, e.v, &chosen)
    })
}

fn common_neighbor_in(g: &Graph, a: usize, b: usize, chosen: &[bool]) -> bool {
    let (mut i, mut j) = (0, 0);
    let (na, nb) = (g.neighbors(a), g.neighbors(b));
    while i < na.len() && j < nb.len() {
        match na[i].cmp(&nb[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                if chosen[na[i]] {
                    return true;
                }
                i += 1;
                j += 1;
            }
        }
    }
    false
}

/// No closed neighborhood contains two elements of `a`.
pub fn is_neighborhood_independent(g: &Graph, a: &MixedSet) -> bool {
    if a.has_duplicates() || !a.elements().iter().all(|x| element_in_graph(g, x)) {
        return false;
    }
    let mut count = vec![0usize; g.n()];
    for x in a.elements() {
        let mut cands: Vec<usize> = match *x {
            Element::Vertex(v) => {
                let mut l = g.neighbors(v).to_vec();
                l.push(v);
                l
            }
            Element::Edge(e) => {
                let mut l: Vec<usize> = g
                    .neighbors(e.u)
                    .iter()
                    .copied()
                    .filter(|&w| g.has_edge(w, e.v))
                    .collect();
                l.push(e.u);
                l.push(e.v);
                l
            }
        };
        cands.sort_unstable();
        cands.dedup();
        for v in cands {
            debug_assert!(inside(g, v, x));
            count[v] += 1;
            if count[v] > 1 {
                return false;
            }
        }
    }
    true
}

/// Vertices pairwise at distance at least 3.
pub fn is_two_independent(g: &Graph, a: &[usize]) -> bool {
    if a.iter().any(|&v| v >= g.n()) || !distinct(a) {
        return false;
    }
    let mut owner = vec![usize::MAX; g.n()];
    for &v in a {
        for &w in g.neighbors(v).iter().chain(std::iter::once(&v)) {
            if owner[w] != usize::MAX {
                return false;
            }
            owner[w] = v;
        }
    }
    true
}

pub fn is_dominating(g: &Graph, d: &[usize]) -> bool {
    if d.iter().any(|&v| v >= g.n()) || !distinct(d) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in d {
        seen[v] = true;
        for &w in g.neighbors(v) {
            seen[w] = true;
        }
    }
    seen.iter().all(|&b| b)
}

pub fn is_total_dominating(g: &Graph, d: &[usize]) -> bool {
    if d.iter().any(|&v| v >= g.n()) || !distinct(d) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in d {
        for &w in g.neighbors(v) {
            seen[w] = true;
        }
    }
    seen.iter().all(|&b| b)
}

pub fn is_independent(g: &Graph, a: &[usize]) -> bool {
    a.iter().all(|&v| v < g.n())
        && distinct(a)
        && a.iter().enumerate().all(|(i, &u)| a[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

pub fn is_vertex_cover(g: &Graph, c: &[usize]) -> bool {
    if c.iter().any(|&v| v >= g.n()) || !distinct(c) {
        return false;
    }
    let mut inc = vec![false; g.n()];
    for &v in c {
        inc[v] = true;
    }
    g.edges().all(|e| inc[e.u] || inc[e.v])
}

pub fn is_matching(g: &Graph, es: &[Edge]) -> bool {
    let mut used = vec![false; g.n()];
    for e in es {
        if !g.has_edge(e.u, e.v) || used[e.u] || used[e.v] {
            return false;
        }
        used[e.u] = true;
        used[e.v] = true;
    }
    true
}

/// A matching no edge of `g` joins two of its edges.
pub fn is_induced_matching(g: &Graph, es: &[Edge]) -> bool {
    if !is_matching(g, es) {
        return false;
    }
    let mut owner = vec![usize::MAX; g.n()];
    for (i, e) in es.iter().enumerate() {
        owner[e.u] = i;
        owner[e.v] = i;
    }
    es.iter().enumerate().all(|(i, e)| {
        [e.u, e.v].iter().all(|&x| {
            g.neighbors(x).iter().all(|&w| owner[w] == usize::MAX || owner[w] == i)
        })
    })
}
