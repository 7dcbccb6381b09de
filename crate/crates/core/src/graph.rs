use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint out of range for n = {n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("loop edge ({v}, {v}) is not allowed")]
    Loop { v: usize },
    #[error("vertex {v} out of range for n = {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("vertex {v} listed twice")]
    DuplicateVertex { v: usize },
    #[error("operation needs at least one part")]
    NoParts,
}

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Panics if `a == b`.
    pub fn new(a: usize, b: usize) -> Edge {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    pub fn edgeless(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n).map(|v| (0..n).filter(|&w| w != v).collect()).collect();
        Graph { adj, m: n * n.saturating_sub(1) / 2 }
    }

    /// Builds a graph from an edge list; duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop { v: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Graph::from_raw_adjacency(adj))
    }

    /// Sorts and deduplicates the lists. Symmetry is the caller's job.
    pub(crate) fn from_raw_adjacency(mut adj: Vec<Vec<usize>>) -> Graph {
        let mut twice = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Graph { adj, m: twice / 2 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() || u == v {
            return false;
        }
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&w| w <= u);
            list[start..].iter().map(move |&v| Edge { u, v })
        })
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = Vec::with_capacity(n);
        for v in 0..n {
            let mut list = Vec::with_capacity(n - 1 - self.adj[v].len());
            let mut it = self.adj[v].iter().peekable();
            for w in 0..n {
                if w == v {
                    continue;
                }
                while it.peek().is_some_and(|&&x| x < w) {
                    it.next();
                }
                if it.peek() == Some(&&w) {
                    continue;
                }
                list.push(w);
            }
            adj.push(list);
        }
        let m = n * n.saturating_sub(1) / 2 - self.m;
        Graph { adj, m }
    }

    /// Subgraph induced by `verts`; vertex `i` of the result is `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Result<Graph, GraphError> {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            if v >= self.n() {
                return Err(GraphError::VertexOutOfRange { v, n: self.n() });
            }
            if pos[v] != usize::MAX {
                return Err(GraphError::DuplicateVertex { v });
            }
            pos[v] = i;
        }
        Ok(self.induced_with(verts, &mut pos))
    }

    /// `pos` must map every vertex of `verts` to its index and hold `usize::MAX`
    /// elsewhere; entries of `verts` are reset to `usize::MAX` on return.
    pub(crate) fn induced_with(&self, verts: &[usize], pos: &mut [usize]) -> Graph {
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut twice = 0;
        let mut adj = Vec::with_capacity(verts.len());
        for &v in verts {
            let mut list: Vec<usize> = self.adj[v]
                .iter()
                .filter_map(|&w| (pos[w] != usize::MAX).then_some(pos[w]))
                .collect();
            list.sort_unstable();
            twice += list.len();
            adj.push(list);
        }
        for &v in verts {
            pos[v] = usize::MAX;
        }
        Graph { adj, m: twice / 2 }
    }

    pub fn disjoint_union_all(parts: &[Graph]) -> Result<Graph, GraphError> {
        if parts.is_empty() {
            return Err(GraphError::NoParts);
        }
        let mut adj = Vec::new();
        let mut m = 0;
        for g in parts {
            let off = adj.len();
            adj.extend(g.adj.iter().map(|l| l.iter().map(|&w| w + off).collect::<Vec<_>>()));
            m += g.m;
        }
        Ok(Graph { adj, m })
    }

    pub fn join_all(parts: &[Graph]) -> Result<Graph, GraphError> {
        if parts.is_empty() {
            return Err(GraphError::NoParts);
        }
        let n: usize = parts.iter().map(Graph::n).sum();
        let mut adj = Vec::with_capacity(n);
        let mut off = 0;
        for g in parts {
            for list in &g.adj {
                let mut l: Vec<usize> = (0..off).collect();
                l.extend(list.iter().map(|&w| w + off));
                l.extend(off + g.n()..n);
                adj.push(l);
            }
            off += g.n();
        }
        Ok(Graph::from_raw_adjacency(adj))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Components of the complement in O(n + m), ordered by smallest vertex.
    pub fn anticomponents(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut remaining: Vec<usize> = (0..n).rev().collect();
        let mut mark = vec![usize::MAX; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        while let Some(s) = remaining.pop() {
            let mut comp = vec![s];
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    mark[w] = v;
                }
                let mut keep = Vec::with_capacity(remaining.len());
                for &w in &remaining {
                    if mark[w] == v {
                        keep.push(w);
                    } else {
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
                remaining = keep;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out.sort_by_key(|c| c[0]);
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// True when `set` (sorted or not) has no outside vertex seeing part of it.
    pub fn is_module(&self, set: &[usize]) -> bool {
        if set.len() <= 1 {
            return true;
        }
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        let mut hits = vec![0usize; self.n()];
        for &v in set {
            for &w in &self.adj[v] {
                if !inside[w] {
                    hits[w] += 1;
                }
            }
        }
        hits.iter().all(|&h| h == 0 || h == set.len())
    }
}

/// Parse error for the line-oriented graph format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `p <n> <m>` header")]
    MissingHeader,
    #[error("header announces {expected} edges but {found} were given")]
    EdgeCount { expected: usize, found: usize },
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("invalid JSON graph: {0}")]
    Json(String),
}

/// Canonical text form: header, then sorted `e u v` lines.
pub fn write_text(g: &Graph, comments: &[String]) -> String {
    let mut s = String::new();
    for c in comments {
        s.push_str("c ");
        s.push_str(c);
        s.push('\n');
    }
    s.push_str(&format!("p {} {}\n", g.n(), g.m()));
    for e in g.edges() {
        s.push_str(&format!("e {} {}\n", e.u, e.v));
    }
    s
}

pub fn parse_text(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut tok = raw.split_whitespace();
        let Some(tag) = tok.next() else { continue };
        let syntax = |msg: &str| ParseError::Syntax { line, msg: msg.to_string() };
        let mut num = |what: &str| -> Result<usize, ParseError> {
            tok.next()
                .ok_or_else(|| syntax(&format!("missing {what}")))?
                .parse::<usize>()
                .map_err(|_| syntax(&format!("{what} is not a non-negative integer")))
        };
        match tag {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(syntax("second header"));
                }
                let n = num("vertex count")?;
                let m = num("edge count")?;
                header = Some((n, m));
            }
            "e" => {
                if header.is_none() {
                    return Err(ParseError::MissingHeader);
                }
                let u = num("endpoint")?;
                let v = num("endpoint")?;
                edges.push((u, v));
            }
            other => return Err(syntax(&format!("unknown line tag `{other}`"))),
        }
        if tag != "c" && tok.next().is_some() {
            return Err(syntax("trailing tokens"));
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    let g = Graph::from_edges(n, edges.iter().copied())?;
    if g.m() != m || edges.len() != m {
        return Err(ParseError::EdgeCount { expected: m, found: edges.len() });
    }
    Ok(g)
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

pub fn write_json(g: &Graph) -> String {
    let jg = JsonGraph { n: g.n(), edges: g.edges().map(|e| (e.u, e.v)).collect() };
    serde_json::to_string(&jg).expect("graph serializes")
}

pub fn parse_json(text: &str) -> Result<Graph, ParseError> {
    let jg: JsonGraph = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    Ok(Graph::from_edges(jg.n, jg.edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn construction_examples() {
        let p4 = path(4);
        assert_eq!(p4.m(), 3);
        assert!(p4.has_edge(2, 1) && !p4.has_edge(0, 2));
        let e = Graph::from_edges(3, []).unwrap();
        assert_eq!((e.n(), e.m()), (3, 0));
        assert!((0..5).all(|v| cycle(5).degree(v) == 2));
        let dup = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.m(), 1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::EndpointOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::Loop { v: 1 }));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(3).complement(), Graph::edgeless(3));
        let c5 = cycle(5).complement();
        assert!((0..5).all(|v| c5.degree(v) == 2) && c5.is_connected());
        assert_eq!(path(4).complement().complement(), path(4));
    }

    #[test]
    fn induced_examples() {
        let g = cycle(5).induced(&[1, 2, 3]).unwrap();
        assert_eq!(g, path(3));
        assert_eq!(cycle(5).induced(&[0, 1, 2, 3, 4]).unwrap(), cycle(5));
        assert!(cycle(5).induced(&[7]).is_err());
        let r = cycle(5).induced(&[3, 0, 4]).unwrap();
        assert!(r.has_edge(0, 2) && r.has_edge(1, 2) && !r.has_edge(0, 1));
    }

    #[test]
    fn join_and_union() {
        let two = Graph::edgeless(2);
        assert_eq!(Graph::join_all(&[two.clone(), two.clone()]).unwrap(), cycle(4).relabel_c4());
        let k2 = Graph::complete(2);
        let u = Graph::disjoint_union_all(&[k2.clone(), k2]).unwrap();
        assert_eq!(u.m(), 2);
        assert_eq!(u.components(), vec![vec![0, 1], vec![2, 3]]);
        assert!(Graph::join_all(&[]).is_err());
    }

    impl Graph {
        // C4 as 0-2-1-3-0, the layout join_all produces.
        fn relabel_c4(&self) -> Graph {
            Graph::from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap()
        }
    }

    #[test]
    fn anticomponents_examples() {
        assert_eq!(cycle(4).anticomponents(), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(path(4).anticomponents().len(), 1);
        assert_eq!(Graph::complete(3).anticomponents().len(), 3);
    }

    #[test]
    fn text_round_trip() {
        let g = cycle(5);
        let s = write_text(&g, &["five cycle".into()]);
        assert_eq!(parse_text(&s).unwrap(), g);
        assert_eq!(write_text(&parse_text(&s).unwrap(), &["five cycle".into()]), s);
        assert_eq!(parse_json(&write_json(&g)).unwrap(), g);
    }

    #[test]
    fn text_errors() {
        assert_eq!(parse_text("e 0 1\n"), Err(ParseError::MissingHeader));
        assert!(matches!(parse_text("p 2 1\ne 0 x\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse_text("p 2 2\ne 0 1\n"), Err(ParseError::EdgeCount { .. })));
        assert!(matches!(parse_text("p 2 1\ne 0 5\n"), Err(ParseError::Graph(_))));
        assert!(parse_text("").is_err());
    }
}
