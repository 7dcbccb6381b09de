//! Reductions into co-bipartite graphs: independent set to αn, vertex
//! cover to ρn.

use thiserror::Error;

use crate::graph::{write_text, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HardnessError {
    #[error("the vertex-cover reduction needs a graph with at least one edge")]
    Edgeless,
}

/// A graph whose vertices split into two cliques `x` and `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoBipartite {
    pub graph: Graph,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl CoBipartite {
    /// Builds the graph from clique sizes and the cross edges `(i, j)`,
    /// meaning `x[i]` adjacent to `y[j]`.
    fn build(nx: usize, ny: usize, cross: impl IntoIterator<Item = (usize, usize)>) -> CoBipartite {
        let clique = |lo: usize, k: usize| {
            (lo..lo + k).flat_map(move |a| (a + 1..lo + k).map(move |b| (a, b)))
        };
        let edges = clique(0, nx)
            .chain(clique(nx, ny))
            .chain(cross.into_iter().map(|(i, j)| (i, nx + j)));
        CoBipartite {
            graph: Graph::from_edges(nx + ny, edges).expect("valid by construction"),
            x: (0..nx).collect(),
            y: (nx..nx + ny).collect(),
        }
    }

    /// `x` and `y` are cliques partitioning the vertex set.
    pub fn is_valid(&self) -> bool {
        let n = self.graph.n();
        let mut seen = vec![false; n];
        for &v in self.x.iter().chain(&self.y) {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        let clique = |s: &[usize]| {
            s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| self.graph.has_edge(a, b)))
        };
        seen.iter().all(|&b| b) && clique(&self.x) && clique(&self.y)
    }

    /// Graph text with `source` recorded as a comment line.
    pub fn to_text(&self, source: &str) -> String {
        let x: Vec<String> = self.x.iter().map(|v| v.to_string()).collect();
        write_text(&self.graph, &[format!("source {source}"), format!("X {}", x.join(" "))])
    }
}

/// X holds a copy of every vertex of `h`; Y holds the vertices and then
/// the edges of `h`. A copy is joined to its vertex and to its incident edges.
pub fn reduce_alpha_to_an(h: &Graph) -> CoBipartite {
    let n = h.n();
    let copies = (0..n).map(|v| (v, v));
    let incidences = h
        .edges()
        .enumerate()
        .flat_map(|(i, e)| [(e.u, n + i), (e.v, n + i)]);
    CoBipartite::build(n, n + h.m(), copies.chain(incidences))
}

/// X is the vertex set of `h`, Y its edge set, joined by incidence.
pub fn reduce_vc_to_pn(h: &Graph) -> Result<CoBipartite, HardnessError> {
    if h.m() == 0 {
        return Err(HardnessError::Edgeless);
    }
    let incidences = h.edges().enumerate().flat_map(|(i, e)| [(e.u, i), (e.v, i)]);
    Ok(CoBipartite::build(h.n(), h.m(), incidences))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_text;

    #[test]
    fn shapes() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let a = reduce_alpha_to_an(&p3);
        assert!(a.is_valid());
        assert_eq!((a.x.len(), a.y.len()), (3, 5));
        assert!(a.graph.has_edge(0, 3) && a.graph.has_edge(0, 6) && !a.graph.has_edge(0, 4));
        let v = reduce_vc_to_pn(&p3).unwrap();
        assert!(v.is_valid());
        assert_eq!(v.graph.n(), 5);
        assert!(v.graph.has_edge(1, 3) && v.graph.has_edge(1, 4) && !v.graph.has_edge(0, 4));
        assert_eq!(reduce_vc_to_pn(&Graph::edgeless(3)), Err(HardnessError::Edgeless));
    }

    #[test]
    fn text_export() {
        let k3 = Graph::complete(3);
        let r = reduce_vc_to_pn(&k3).unwrap();
        let text = r.to_text("K3");
        assert!(text.starts_with("c source K3\n"));
        assert_eq!(parse_text(&text).unwrap(), r.graph);
    }
}
