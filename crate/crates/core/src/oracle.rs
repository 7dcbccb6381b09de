//! Exponential ground truth for every parameter and predicate in the crate.
//! Vertex sets are `u64` masks, so no oracle accepts more than 64 vertices.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::family::FamilySpec;
use crate::graph::{Edge, Graph};
use crate::sets::{Element, MixedSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamKind {
    Pn,
    An,
    A2,
    Gamma,
    GammaT,
    Tau,
    Nu,
    Alpha,
}

impl ParamKind {
    pub const ALL: [ParamKind; 8] = [
        ParamKind::Pn,
        ParamKind::An,
        ParamKind::A2,
        ParamKind::Gamma,
        ParamKind::GammaT,
        ParamKind::Tau,
        ParamKind::Nu,
        ParamKind::Alpha,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ParamKind::Pn => "pn",
            ParamKind::An => "an",
            ParamKind::A2 => "a2",
            ParamKind::Gamma => "gamma",
            ParamKind::GammaT => "gamma_t",
            ParamKind::Tau => "tau",
            ParamKind::Nu => "nu",
            ParamKind::Alpha => "alpha",
        }
    }

    /// Largest vertex count accepted without an explicit override.
    pub fn default_limit(&self) -> usize {
        match self {
            ParamKind::Pn | ParamKind::GammaT => 12,
            ParamKind::An => 10,
            ParamKind::Gamma | ParamKind::Tau | ParamKind::Nu => 16,
            ParamKind::A2 | ParamKind::Alpha => 24,
        }
    }
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParamKind {
    type Err = OracleError;
    fn from_str(s: &str) -> Result<ParamKind, OracleError> {
        ParamKind::ALL
            .into_iter()
            .find(|k| k.name() == s.to_ascii_lowercase())
            .ok_or_else(|| OracleError::UnknownParam(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} refuses n = {n}: the limit is {limit} vertices")]
    SizeGuard { what: String, n: usize, limit: usize },
    #[error("{0} is undefined for a graph with an isolated vertex")]
    Undefined(ParamKind),
    #[error("unknown parameter `{0}`")]
    UnknownParam(String),
}

/// Hard ceiling imposed by the mask representation.
pub const MASK_LIMIT: usize = 64;

fn guard(what: impl Into<String>, n: usize, limit: usize) -> Result<(), OracleError> {
    let limit = limit.min(MASK_LIMIT);
    if n > limit {
        Err(OracleError::SizeGuard { what: what.into(), n, limit })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamValue {
    pub value: usize,
    pub certificate: MixedSet,
}

pub fn brute_param(g: &Graph, kind: ParamKind) -> Result<ParamValue, OracleError> {
    brute_param_with_limit(g, kind, kind.default_limit())
}

pub fn brute_param_with_limit(
    g: &Graph,
    kind: ParamKind,
    limit: usize,
) -> Result<ParamValue, OracleError> {
    guard(format!("oracle {kind}"), g.n(), limit)?;
    let m = Masks::new(g);
    let all = m.all();
    let verts = |mask: u64| MixedSet::from_vertices(&bits(mask));
    let cert = match kind {
        ParamKind::Pn => verts(m.pn(all)),
        ParamKind::Gamma => verts(m.gamma(all)),
        ParamKind::GammaT => verts(m.gamma_t(all).ok_or(OracleError::Undefined(kind))?),
        ParamKind::Tau => verts(m.tau(all)),
        ParamKind::Alpha => verts(m.alpha(all)),
        ParamKind::A2 => verts(m.a2(all)),
        ParamKind::Nu => MixedSet::from_edges(&m.nu(all)),
        ParamKind::An => m.an(all),
    };
    Ok(ParamValue { value: cert.len(), certificate: cert })
}

/// Vertex ids of the set bits, ascending.
pub fn bits(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// Adjacency masks of a graph with at most 64 vertices; every routine works
/// on the subgraph induced by a vertex mask.
#[derive(Debug, Clone)]
pub struct Masks {
    n: usize,
    adj: Vec<u64>,
}

impl Masks {
    pub fn new(g: &Graph) -> Masks {
        assert!(g.n() <= MASK_LIMIT, "mask oracles take at most 64 vertices");
        let adj = (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u64, |a, &w| a | 1 << w)).collect();
        Masks { n: g.n(), adj }
    }

    pub fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn closed(&self, v: usize) -> u64 {
        self.adj[v] | 1 << v
    }

    fn edges(&self, vm: u64) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in bits(vm) {
            for v in bits(self.adj[u] & vm & !((2u64 << u) - 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// For each vertex and edge of G[vm], the vertices whose closed
    /// neighbourhood in G[vm] contains it.
    fn element_hosts(&self, vm: u64) -> (Vec<Element>, Vec<u64>) {
        let mut elems = Vec::new();
        let mut hosts = Vec::new();
        for v in bits(vm) {
            elems.push(Element::Vertex(v));
            hosts.push(self.closed(v) & vm);
        }
        for (u, v) in self.edges(vm) {
            elems.push(Element::Edge(Edge::new(u, v)));
            hosts.push(self.closed(u) & self.closed(v) & vm);
        }
        (elems, hosts)
    }

    pub fn pn(&self, vm: u64) -> u64 {
        let (_, hosts) = self.element_hosts(vm);
        min_hitting_set(&hosts).expect("closed neighbourhoods always cover")
    }

    pub fn gamma(&self, vm: u64) -> u64 {
        let hosts: Vec<u64> = bits(vm).into_iter().map(|v| self.closed(v) & vm).collect();
        min_hitting_set(&hosts).expect("every vertex dominates itself")
    }

    pub fn gamma_t(&self, vm: u64) -> Option<u64> {
        let hosts: Vec<u64> = bits(vm).into_iter().map(|v| self.adj[v] & vm).collect();
        min_hitting_set(&hosts)
    }

    pub fn tau(&self, vm: u64) -> u64 {
        let hosts: Vec<u64> = self.edges(vm).into_iter().map(|(u, v)| 1 << u | 1 << v).collect();
        min_hitting_set(&hosts).expect("endpoints cover edges")
    }

    pub fn alpha(&self, vm: u64) -> u64 {
        let vs = bits(vm);
        let pick = max_clique(vs.len(), |i, j| self.adj[vs[i]] >> vs[j] & 1 == 0);
        pick.into_iter().fold(0, |a, i| a | 1 << vs[i])
    }

    pub fn a2(&self, vm: u64) -> u64 {
        let vs = bits(vm);
        let pick = max_clique(vs.len(), |i, j| {
            self.closed(vs[i]) & self.closed(vs[j]) & vm == 0
        });
        pick.into_iter().fold(0, |a, i| a | 1 << vs[i])
    }

    pub fn nu(&self, vm: u64) -> Vec<Edge> {
        let es = self.edges(vm);
        let pick = max_clique(es.len(), |i, j| {
            let (a, b) = (es[i], es[j]);
            a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
        });
        pick.into_iter().map(|i| Edge::new(es[i].0, es[i].1)).collect()
    }

    pub fn an(&self, vm: u64) -> MixedSet {
        let (elems, hosts) = self.element_hosts(vm);
        let pick = max_clique(elems.len(), |i, j| hosts[i] & hosts[j] == 0);
        pick.into_iter().map(|i| elems[i]).collect()
    }

    /// Neighborhood-perfectness of G[vm] for every sub-mask of `full`, as a
    /// table indexed by mask.
    fn np_table(&self, full: u64) -> Vec<bool> {
        let size = (full as usize) + 1;
        let mut np = vec![false; size];
        for mask in 0..size as u64 {
            if mask & !full != 0 {
                continue;
            }
            let subs_ok = bits(mask).into_iter().all(|v| np[(mask & !(1u64 << v)) as usize]);
            np[mask as usize] = subs_ok && self.pn(mask).count_ones() == self.an(mask).len() as u32;
        }
        np
    }
}

/// Smallest vertex set meeting every host mask, by iterative deepening.
/// `None` when some host mask is empty.
pub fn min_hitting_set(hosts: &[u64]) -> Option<u64> {
    if hosts.contains(&0) {
        return None;
    }
    let mut k = 0;
    loop {
        if let Some(r) = hit(hosts, 0, k) {
            return Some(r);
        }
        k += 1;
    }
}

fn hit(hosts: &[u64], chosen: u64, budget: usize) -> Option<u64> {
    let mut best: Option<u64> = None;
    for &h in hosts {
        if h & chosen == 0 && best.is_none_or(|b| h.count_ones() < b.count_ones()) {
            best = Some(h);
        }
    }
    let Some(h) = best else { return Some(chosen) };
    if budget == 0 {
        return None;
    }
    for v in bits(h) {
        if let Some(r) = hit(hosts, chosen | 1 << v, budget - 1) {
            return Some(r);
        }
    }
    None
}

/// Maximum clique of the compatibility graph on `0..k` given by `compat`,
/// using a greedy colouring bound.
pub fn max_clique(k: usize, compat: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let words = k.div_ceil(64).max(1);
    let mut rows = vec![vec![0u64; words]; k];
    for i in 0..k {
        for j in i + 1..k {
            if compat(i, j) {
                rows[i][j / 64] |= 1 << (j % 64);
                rows[j][i / 64] |= 1 << (i % 64);
            }
        }
    }
    let mut p = vec![0u64; words];
    for i in 0..k {
        p[i / 64] |= 1 << (i % 64);
    }
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand(&rows, &mut current, p, &mut best);
    best.sort_unstable();
    best
}

fn first_bit(s: &[u64]) -> Option<usize> {
    s.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn expand(rows: &[Vec<u64>], current: &mut Vec<usize>, mut p: Vec<u64>, best: &mut Vec<usize>) {
    let mut order = Vec::new();
    let mut uncolored = p.clone();
    let mut color = 0;
    while first_bit(&uncolored).is_some() {
        color += 1;
        let mut q = uncolored.clone();
        while let Some(v) = first_bit(&q) {
            uncolored[v / 64] &= !(1 << (v % 64));
            for (w, r) in q.iter_mut().zip(&rows[v]) {
                *w &= !r;
            }
            q[v / 64] &= !(1 << (v % 64));
            order.push((v, color));
        }
    }
    for &(v, c) in order.iter().rev() {
        if current.len() + c <= best.len() {
            return;
        }
        current.push(v);
        let next: Vec<u64> = p.iter().zip(&rows[v]).map(|(a, b)| a & b).collect();
        if first_bit(&next).is_none() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(rows, current, next, best);
        }
        current.pop();
        p[v / 64] &= !(1 << (v % 64));
    }
}

/// ρn = αn for every induced subgraph.
pub fn brute_is_np(g: &Graph) -> Result<bool, OracleError> {
    brute_is_np_with_limit(g, 8)
}

pub fn brute_is_np_with_limit(g: &Graph, limit: usize) -> Result<bool, OracleError> {
    guard("neighborhood-perfectness oracle", g.n(), limit.min(20))?;
    let m = Masks::new(g);
    Ok(m.np_table(m.all())[m.all() as usize])
}

/// Not neighborhood-perfect, while every proper induced subgraph is.
pub fn brute_is_mnnp(g: &Graph) -> Result<bool, OracleError> {
    brute_is_mnnp_with_limit(g, 8)
}

pub fn brute_is_mnnp_with_limit(g: &Graph, limit: usize) -> Result<bool, OracleError> {
    guard("minimality oracle", g.n(), limit.min(20))?;
    let m = Masks::new(g);
    let all = m.all();
    if m.pn(all).count_ones() == m.an(all).len() as u32 {
        return Ok(false);
    }
    if g.n() == 0 {
        return Ok(false);
    }
    let np = m.np_table(all);
    Ok(bits(all).into_iter().all(|v| np[(all & !(1u64 << v)) as usize]))
}

/// Hereditary equality of two parameters over every induced subgraph.
pub fn hereditary_equal(g: &Graph, a: ParamKind, b: ParamKind) -> Result<bool, OracleError> {
    guard("hereditary oracle", g.n(), 12)?;
    let m = Masks::new(g);
    let value = |k: ParamKind, vm: u64| -> usize {
        match k {
            ParamKind::Pn => m.pn(vm).count_ones() as usize,
            ParamKind::An => m.an(vm).len(),
            ParamKind::A2 => m.a2(vm).count_ones() as usize,
            ParamKind::Gamma => m.gamma(vm).count_ones() as usize,
            ParamKind::Tau => m.tau(vm).count_ones() as usize,
            ParamKind::Nu => m.nu(vm).len(),
            ParamKind::Alpha => m.alpha(vm).count_ones() as usize,
            ParamKind::GammaT => m.gamma_t(vm).map_or(usize::MAX, |s| s.count_ones() as usize),
        }
    };
    Ok((1..=m.all()).all(|vm| value(a, vm) == value(b, vm)))
}

/// An embedding of `h` as an induced subgraph of `g`: entry `i` is the image
/// of vertex `i` of `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let k = h.n();
    if k == 0 {
        return Some(Vec::new());
    }
    if k > g.n() {
        return None;
    }
    // Place vertices of h so each one after the first in its component has an
    // already-placed neighbour.
    let mut order = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    while order.len() < k {
        let start = (0..k).filter(|&v| !placed[v]).max_by_key(|&v| h.degree(v)).expect("left");
        placed[start] = true;
        let mut i = order.len();
        order.push(start);
        while i < order.len() {
            for &w in h.neighbors(order[i]) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; g.n()];
    if embed(g, h, &order, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

fn embed(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    let anchor = h.neighbors(x).iter().copied().find(|&w| image[w] != usize::MAX);
    let candidates: Vec<usize> = match anchor {
        Some(a) => g.neighbors(image[a]).to_vec(),
        None => (0..g.n()).collect(),
    };
    for c in candidates {
        if used[c] || g.degree(c) < h.degree(x) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&y| h.has_edge(x, y) == g.has_edge(c, image[y]));
        if !consistent {
            continue;
        }
        image[x] = c;
        used[c] = true;
        if embed(g, h, order, depth + 1, image, used) {
            return true;
        }
        used[c] = false;
        image[x] = usize::MAX;
    }
    false
}

/// Chordality by repeated removal of simplicial vertices.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut alive = vec![true; n];
    for _ in 0..n {
        let simplicial = (0..n).find(|&v| {
            if !alive[v] {
                return false;
            }
            let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
            nb.iter().enumerate().all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        });
        match simplicial {
            Some(v) => alive[v] = false,
            None => return false,
        }
    }
    true
}

/// An induced k-sun for odd k with 2k ≤ n: inner cycle u_1..u_k and
/// independent outer vertices w_i whose neighbours among the chosen vertices
/// are exactly u_i and u_{i+1}. Returns the inner vertices followed by the
/// outer ones.
pub fn find_odd_sun(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut k = 3;
    while 2 * k <= n {
        for start in 0..n {
            let mut inner = vec![start];
            if let Some(found) = sun_inner(g, k, &mut inner) {
                return Some(found);
            }
        }
        k += 2;
    }
    None
}

fn sun_inner(g: &Graph, k: usize, inner: &mut Vec<usize>) -> Option<Vec<usize>> {
    if inner.len() == k {
        if !g.has_edge(inner[k - 1], inner[0]) {
            return None;
        }
        let mut outer = Vec::new();
        return sun_outer(g, inner, &mut outer);
    }
    let last = *inner.last().expect("non-empty");
    for &w in g.neighbors(last) {
        // The first inner vertex is the smallest, which removes rotations.
        if w > inner[0] && !inner.contains(&w) {
            inner.push(w);
            if let Some(found) = sun_inner(g, k, inner) {
                return Some(found);
            }
            inner.pop();
        }
    }
    None
}

fn sun_outer(g: &Graph, inner: &[usize], outer: &mut Vec<usize>) -> Option<Vec<usize>> {
    let k = inner.len();
    let i = outer.len();
    if i == k {
        let mut all = inner.to_vec();
        all.extend_from_slice(outer);
        return Some(all);
    }
    let (a, b) = (inner[i], inner[(i + 1) % k]);
    for &w in g.neighbors(a) {
        if inner.contains(&w) || outer.contains(&w) || !g.has_edge(w, b) {
            continue;
        }
        let clean = inner.iter().all(|&u| u == a || u == b || !g.has_edge(w, u))
            && outer.iter().all(|&o| !g.has_edge(w, o));
        if clean {
            outer.push(w);
            if let Some(found) = sun_outer(g, inner, outer) {
                return Some(found);
            }
            outer.pop();
        }
    }
    None
}

/// Chordal, P6-free and without an induced odd sun.
pub fn is_strongly_np(g: &Graph) -> bool {
    let p6 = FamilySpec::Path(6).generate().expect("P6");
    is_chordal(g) && contains_induced(g, &p6).is_none() && find_odd_sun(g).is_none()
}

fn p4_count_in_five(g: &Graph, five: &[usize; 5]) -> usize {
    (0..5)
        .filter(|&skip| {
            let four: Vec<usize> = (0..5).filter(|&i| i != skip).map(|i| five[i]).collect();
            induces_p4(g, &four)
        })
        .count()
}

fn induces_p4(g: &Graph, four: &[usize]) -> bool {
    let mut deg = [0usize; 4];
    let mut m = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if g.has_edge(four[i], four[j]) {
                deg[i] += 1;
                deg[j] += 1;
                m += 1;
            }
        }
    }
    deg.sort_unstable();
    m == 3 && deg == [1, 1, 2, 2]
}

/// The defining check: each induced P4 has at most one partner vertex, i.e. a
/// vertex that together with it induces at least two P4s.
pub fn is_p4_tidy_by_definition(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [a, b, c, d];
                    if !induces_p4(g, &quad) {
                        continue;
                    }
                    let partners = (0..n)
                        .filter(|v| !quad.contains(v))
                        .filter(|&v| p4_count_in_five(g, &[a, b, c, d, v]) >= 2)
                        .count();
                    if partners > 1 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Recursive tree-cograph check: split into components or anticomponents,
/// otherwise require a tree or the complement of a tree.
pub fn is_tree_cograph_by_definition(g: &Graph) -> bool {
    if g.n() <= 1 {
        return true;
    }
    let comps = g.components();
    let parts = if comps.len() > 1 {
        comps
    } else {
        let anti = g.anticomponents();
        if anti.len() > 1 {
            anti
        } else {
            let is_tree = |x: &Graph| x.m() + 1 == x.n() && x.is_connected();
            return is_tree(g) || is_tree(&g.complement());
        }
    };
    parts.iter().all(|p| is_tree_cograph_by_definition(&g.induced(p).expect("part")))
}

/// Number of vertices on a longest path of a forest, by search from every vertex.
pub fn brute_longest_path(g: &Graph) -> usize {
    let n = g.n();
    let mut best = usize::from(n > 0);
    for s in 0..n {
        let mut stack = vec![(s, usize::MAX, 1usize)];
        while let Some((v, parent, len)) = stack.pop() {
            best = best.max(len);
            for &w in g.neighbors(v) {
                if w != parent {
                    stack.push((w, v, len + 1));
                }
            }
        }
    }
    best
}

pub fn brute_induced_matching(g: &Graph) -> Result<Vec<Edge>, OracleError> {
    guard("induced matching oracle", g.n(), 24)?;
    let es: Vec<Edge> = g.edges().collect();
    let pick = max_clique(es.len(), |i, j| {
        let (a, b) = (es[i], es[j]);
        !(a.contains(b.u) || a.contains(b.v))
            && !g.has_edge(a.u, b.u)
            && !g.has_edge(a.u, b.v)
            && !g.has_edge(a.v, b.u)
            && !g.has_edge(a.v, b.v)
    });
    Ok(pick.into_iter().map(|i| es[i]).collect())
}

/// A pair whose open neighbourhoods cover every vertex.
pub fn brute_total_dom_pair(g: &Graph) -> Option<(usize, usize)> {
    let n = g.n();
    let m = Masks::new(g);
    for x in 0..n {
        for y in x + 1..n {
            if m.adj[x] | m.adj[y] == m.all() {
                return Some((x, y));
            }
        }
    }
    None
}
