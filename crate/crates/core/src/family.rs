use std::fmt;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid family parameters: {0}")]
    Invalid(String),
    #[error("cannot parse family spec `{text}`: {msg}")]
    Parse { text: String, msg: String },
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, FamilyError> {
    Err(FamilyError::Invalid(msg.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum FatShape {
    K2,
    TwoK1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Named {
    ThreeK2Bar,
    C6Join3K1,
    P6Join3K1,
    ThreeSun,
}

/// Description of a graph family member. Spider layout: ends `0..t`, body
/// `t..2t`, head after that; a fat twin is appended as the last vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Edgeless(usize),
    Sun(usize),
    Starfish { t: usize, head: Option<Box<FamilySpec>> },
    Urchin { t: usize, head: Option<Box<FamilySpec>> },
    Fat { base: Box<FamilySpec>, vertex: usize, shape: FatShape },
    Named(Named),
    RandomTree { n: usize, seed: u64 },
    RandomP4Tidy { n: usize, seed: u64 },
    RandomTreeCograph { n: usize, seed: u64 },
}

impl FamilySpec {
    pub fn starfish(t: usize) -> FamilySpec {
        FamilySpec::Starfish { t, head: None }
    }

    pub fn urchin(t: usize) -> FamilySpec {
        FamilySpec::Urchin { t, head: None }
    }

    pub fn with_head(self, head: FamilySpec) -> FamilySpec {
        match self {
            FamilySpec::Starfish { t, .. } => FamilySpec::Starfish { t, head: Some(Box::new(head)) },
            FamilySpec::Urchin { t, .. } => FamilySpec::Urchin { t, head: Some(Box::new(head)) },
            other => other,
        }
    }

    pub fn fat(self, vertex: usize, shape: FatShape) -> FamilySpec {
        FamilySpec::Fat { base: Box::new(self), vertex, shape }
    }

    pub fn generate(&self) -> Result<Graph, FamilyError> {
        match self {
            FamilySpec::Path(k) => {
                Ok(Graph::from_edges(*k, (1..*k).map(|i| (i - 1, i))).expect("path"))
            }
            FamilySpec::Cycle(k) => {
                if *k < 3 {
                    return invalid("cycle needs k >= 3");
                }
                Ok(Graph::from_edges(*k, (0..*k).map(|i| (i, (i + 1) % k))).expect("cycle"))
            }
            FamilySpec::Complete(k) => Ok(Graph::complete(*k)),
            FamilySpec::Edgeless(k) => Ok(Graph::edgeless(*k)),
            FamilySpec::Sun(k) => {
                if *k < 3 || k % 2 == 0 {
                    return invalid("sun needs odd k >= 3");
                }
                Ok(sun(*k))
            }
            FamilySpec::Starfish { t, head } => spider(*t, head.as_deref(), true),
            FamilySpec::Urchin { t, head } => spider(*t, head.as_deref(), false),
            FamilySpec::Fat { base, vertex, shape } => {
                let t = match base.as_ref() {
                    FamilySpec::Starfish { t, .. } | FamilySpec::Urchin { t, .. } => *t,
                    _ => return invalid("fat variant needs a starfish or urchin base"),
                };
                if *vertex >= 2 * t {
                    return invalid(format!("fat vertex {vertex} is not an end or body vertex"));
                }
                let g = base.generate()?;
                Ok(add_twin(&g, *vertex, *shape))
            }
            FamilySpec::Named(named) => Ok(named_graph(*named)),
            FamilySpec::RandomTree { n, seed } => {
                if *n == 0 {
                    return invalid("random tree needs n >= 1");
                }
                Ok(random_tree(*n, *seed))
            }
            FamilySpec::RandomP4Tidy { n, seed } => {
                if *n == 0 {
                    return invalid("random graph needs n >= 1");
                }
                Ok(random_class(*n, *seed, Class::P4Tidy))
            }
            FamilySpec::RandomTreeCograph { n, seed } => {
                if *n == 0 {
                    return invalid("random graph needs n >= 1");
                }
                Ok(random_class(*n, *seed, Class::TreeCograph))
            }
        }
    }

    /// Parses the textual form produced by `Display`. Random families may omit
    /// the seed, in which case `seed` is used; without either the parse fails.
    pub fn parse(text: &str, seed: Option<u64>) -> Result<FamilySpec, FamilyError> {
        let mut p = SpecParser { s: text.as_bytes(), i: 0, text, seed };
        let spec = p.spec()?;
        p.skip_ws();
        if p.i != p.s.len() {
            return Err(p.err("trailing characters"));
        }
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(k) => write!(f, "path({k})"),
            FamilySpec::Cycle(k) => write!(f, "cycle({k})"),
            FamilySpec::Complete(k) => write!(f, "complete({k})"),
            FamilySpec::Edgeless(k) => write!(f, "edgeless({k})"),
            FamilySpec::Sun(k) => write!(f, "sun({k})"),
            FamilySpec::Starfish { t, head: None } => write!(f, "starfish({t})"),
            FamilySpec::Starfish { t, head: Some(h) } => write!(f, "starfish({t},{h})"),
            FamilySpec::Urchin { t, head: None } => write!(f, "urchin({t})"),
            FamilySpec::Urchin { t, head: Some(h) } => write!(f, "urchin({t},{h})"),
            FamilySpec::Fat { base, vertex, shape } => {
                let s = match shape {
                    FatShape::K2 => "k2",
                    FatShape::TwoK1 => "2k1",
                };
                write!(f, "fat({base},{vertex},{s})")
            }
            FamilySpec::Named(Named::ThreeK2Bar) => write!(f, "3k2bar"),
            FamilySpec::Named(Named::C6Join3K1) => write!(f, "c6+3k1"),
            FamilySpec::Named(Named::P6Join3K1) => write!(f, "p6+3k1"),
            FamilySpec::Named(Named::ThreeSun) => write!(f, "3sun"),
            FamilySpec::RandomTree { n, seed } => write!(f, "random_tree({n},{seed})"),
            FamilySpec::RandomP4Tidy { n, seed } => write!(f, "random_p4tidy({n},{seed})"),
            FamilySpec::RandomTreeCograph { n, seed } => {
                write!(f, "random_treecograph({n},{seed})")
            }
        }
    }
}

struct SpecParser<'a> {
    s: &'a [u8],
    i: usize,
    text: &'a str,
    seed: Option<u64>,
}

enum Arg {
    Num(u64),
    Spec(FamilySpec),
    Word(String),
}

impl SpecParser<'_> {
    fn err(&self, msg: &str) -> FamilyError {
        FamilyError::Parse { text: self.text.to_string(), msg: format!("{msg} at offset {}", self.i) }
    }

    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len()
            && (self.s[self.i].is_ascii_alphanumeric() || b"_+".contains(&self.s[self.i]))
        {
            self.i += 1;
        }
        self.text[start..self.i].to_ascii_lowercase()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.s.get(self.i) == Some(&c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn args(&mut self) -> Result<Vec<Arg>, FamilyError> {
        let mut out = Vec::new();
        if !self.eat(b'(') {
            return Ok(out);
        }
        if self.eat(b')') {
            return Ok(out);
        }
        loop {
            self.skip_ws();
            let save = self.i;
            let w = self.word();
            if w.is_empty() {
                return Err(self.err("expected an argument"));
            }
            self.skip_ws();
            if let Ok(n) = w.parse::<u64>() {
                if self.s.get(self.i) != Some(&b'(') {
                    out.push(Arg::Num(n));
                } else {
                    self.i = save;
                    out.push(Arg::Spec(self.spec()?));
                }
            } else if self.s.get(self.i) == Some(&b'(') || is_spec_word(&w) {
                self.i = save;
                out.push(Arg::Spec(self.spec()?));
            } else {
                out.push(Arg::Word(w));
            }
            if self.eat(b',') {
                continue;
            }
            if self.eat(b')') {
                return Ok(out);
            }
            return Err(self.err("expected `,` or `)`"));
        }
    }

    fn spec(&mut self) -> Result<FamilySpec, FamilyError> {
        let name = self.word();
        if name.is_empty() {
            return Err(self.err("expected a family name"));
        }
        let args = self.args()?;
        let num = |i: usize| -> Result<u64, FamilyError> {
            match args.get(i) {
                Some(Arg::Num(n)) => Ok(*n),
                _ => Err(self.err(&format!("`{name}` expects a number as argument {}", i + 1))),
            }
        };
        let usize_arg = |i: usize| num(i).map(|n| n as usize);
        let arity = |k: usize| -> Result<(), FamilyError> {
            if args.len() == k {
                Ok(())
            } else {
                Err(self.err(&format!("`{name}` takes {k} argument(s)")))
            }
        };
        let head = |i: usize| -> Result<Option<Box<FamilySpec>>, FamilyError> {
            match args.get(i) {
                None => Ok(None),
                Some(Arg::Spec(s)) => Ok(Some(Box::new(s.clone()))),
                Some(_) => Err(self.err("spider head must be a family")),
            }
        };
        let random = |make: fn(usize, u64) -> FamilySpec| -> Result<FamilySpec, FamilyError> {
            let n = usize_arg(0)?;
            let seed = match args.len() {
                1 => self.seed.ok_or_else(|| self.err("random family needs a seed"))?,
                2 => num(1)?,
                _ => return Err(self.err("random family takes (n) or (n, seed)")),
            };
            Ok(make(n, seed))
        };
        let spec = match name.as_str() {
            "path" => {
                arity(1)?;
                FamilySpec::Path(usize_arg(0)?)
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle(usize_arg(0)?)
            }
            "complete" => {
                arity(1)?;
                FamilySpec::Complete(usize_arg(0)?)
            }
            "edgeless" => {
                arity(1)?;
                FamilySpec::Edgeless(usize_arg(0)?)
            }
            "sun" => {
                arity(1)?;
                FamilySpec::Sun(usize_arg(0)?)
            }
            "starfish" | "urchin" => {
                if args.is_empty() || args.len() > 2 {
                    return Err(self.err("spiders take (t) or (t, head)"));
                }
                let t = usize_arg(0)?;
                let head = head(1)?;
                if name == "starfish" {
                    FamilySpec::Starfish { t, head }
                } else {
                    FamilySpec::Urchin { t, head }
                }
            }
            "fat" => {
                arity(3)?;
                let base = match &args[0] {
                    Arg::Spec(s) => s.clone(),
                    _ => return Err(self.err("fat expects a spider as first argument")),
                };
                let vertex = usize_arg(1)?;
                let shape = match &args[2] {
                    Arg::Word(w) if w == "k2" => FatShape::K2,
                    Arg::Word(w) if w == "2k1" => FatShape::TwoK1,
                    _ => return Err(self.err("fat shape must be k2 or 2k1")),
                };
                FamilySpec::Fat { base: Box::new(base), vertex, shape }
            }
            "3k2bar" => FamilySpec::Named(Named::ThreeK2Bar),
            "c6+3k1" | "c6v3k1" => FamilySpec::Named(Named::C6Join3K1),
            "p6+3k1" | "p6v3k1" => FamilySpec::Named(Named::P6Join3K1),
            "3sun" => FamilySpec::Named(Named::ThreeSun),
            "random_tree" => random(|n, seed| FamilySpec::RandomTree { n, seed })?,
            "random_p4tidy" => random(|n, seed| FamilySpec::RandomP4Tidy { n, seed })?,
            "random_treecograph" => random(|n, seed| FamilySpec::RandomTreeCograph { n, seed })?,
            other => return Err(self.err(&format!("unknown family `{other}`"))),
        };
        if matches!(spec, FamilySpec::Named(_)) && !args.is_empty() {
            return Err(self.err("named graphs take no arguments"));
        }
        Ok(spec)
    }
}

fn is_spec_word(w: &str) -> bool {
    matches!(w, "3k2bar" | "c6+3k1" | "c6v3k1" | "p6+3k1" | "p6v3k1" | "3sun")
}

fn sun(k: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            edges.push((i, j));
        }
        edges.push((k + i, i));
        edges.push((k + i, (i + 1) % k));
    }
    Graph::from_edges(2 * k, edges).expect("sun")
}

fn spider(t: usize, head: Option<&FamilySpec>, starfish: bool) -> Result<Graph, FamilyError> {
    if t < 2 {
        return invalid("spiders need t >= 2");
    }
    let h = match head {
        Some(spec) => spec.generate()?,
        None => Graph::edgeless(0),
    };
    let n = 2 * t + h.n();
    let mut edges = Vec::new();
    for i in 0..t {
        for j in 0..t {
            if (i == j) == starfish {
                edges.push((i, t + j));
            }
        }
        for j in i + 1..t {
            edges.push((t + i, t + j));
        }
        for r in 0..h.n() {
            edges.push((t + i, 2 * t + r));
        }
    }
    edges.extend(h.edges().map(|e| (2 * t + e.u, 2 * t + e.v)));
    Ok(Graph::from_edges(n, edges).expect("spider"))
}

fn add_twin(g: &Graph, v: usize, shape: FatShape) -> Graph {
    let x = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().map(|e| (e.u, e.v)).collect();
    edges.extend(g.neighbors(v).iter().map(|&w| (x, w)));
    if shape == FatShape::K2 {
        edges.push((v, x));
    }
    Graph::from_edges(x + 1, edges).expect("twin")
}

fn named_graph(named: Named) -> Graph {
    match named {
        Named::ThreeK2Bar => {
            let m = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).expect("3K2");
            m.complement()
        }
        Named::C6Join3K1 => {
            let c6 = FamilySpec::Cycle(6).generate().expect("C6");
            Graph::join_all(&[c6, Graph::edgeless(3)]).expect("join")
        }
        Named::P6Join3K1 => {
            let p6 = FamilySpec::Path(6).generate().expect("P6");
            Graph::join_all(&[p6, Graph::edgeless(3)]).expect("join")
        }
        Named::ThreeSun => sun(3),
    }
}

/// Random recursive tree with a random labelling.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = random_tree_edges(n, &mut rng);
    relabel(n, edges, &mut rng)
}

fn random_tree_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    (1..n).map(|i| (rng.random_range(0..i), i)).collect()
}

fn relabel(n: usize, edges: Vec<(usize, usize)>, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edges(n, edges.into_iter().map(|(a, b)| (perm[a], perm[b]))).expect("relabel")
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Class {
    P4Tidy,
    TreeCograph,
}

/// Modules larger than this only become P-nodes, spiders with a short body, or
/// trees, which keeps large random instances sparse.
const DENSE_CAP: usize = 24;
const MAX_LEGS: usize = 8;

fn random_class(n: usize, seed: u64, class: Class) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![(0..n).collect()];
    while let Some(ids) = stack.pop() {
        match class {
            Class::P4Tidy => p4tidy_node(ids, &mut rng, &mut edges, &mut stack),
            Class::TreeCograph => treecograph_node(ids, &mut rng, &mut edges, &mut stack),
        }
    }
    relabel(n, edges, &mut rng)
}

/// Splits `ids` into `k` non-empty consecutive chunks of random sizes.
fn random_split(ids: &[usize], k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    let s = ids.len();
    let mut cuts = Vec::with_capacity(k + 1);
    while cuts.len() < k - 1 {
        let c = rng.random_range(1..s);
        if !cuts.contains(&c) {
            cuts.push(c);
        }
    }
    cuts.push(0);
    cuts.push(s);
    cuts.sort_unstable();
    cuts.windows(2).map(|w| ids[w[0]..w[1]].to_vec()).collect()
}

fn split_node(
    ids: Vec<usize>,
    series: bool,
    rng: &mut ChaCha8Rng,
    edges: &mut Vec<(usize, usize)>,
    stack: &mut Vec<Vec<usize>>,
) {
    let k = rng.random_range(2..=ids.len().min(4));
    let parts = random_split(&ids, k, rng);
    if series {
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i + 1..] {
                for &x in a {
                    for &y in b {
                        edges.push((x, y));
                    }
                }
            }
        }
    }
    stack.extend(parts);
}

fn p4tidy_node(
    ids: Vec<usize>,
    rng: &mut ChaCha8Rng,
    edges: &mut Vec<(usize, usize)>,
    stack: &mut Vec<Vec<usize>>,
) {
    let s = ids.len();
    if s == 1 {
        return;
    }
    let dense_ok = s <= DENSE_CAP;
    let mut choices: Vec<u8> = vec![b'P'];
    if dense_ok {
        choices.push(b'S');
    }
    if s >= 4 {
        choices.extend(*b"XX");
    }
    if s == 5 {
        choices.extend(*b"55");
    }
    match *choices.choose(rng).expect("non-empty") {
        b'P' => split_node(ids, false, rng, edges, stack),
        b'S' => split_node(ids, true, rng, edges, stack),
        b'5' => {
            let v = &ids;
            match rng.random_range(0..3) {
                0 => edges.extend((0..5).map(|i| (v[i], v[(i + 1) % 5]))),
                1 => edges.extend((1..5).map(|i| (v[i - 1], v[i]))),
                _ => {
                    for i in 0..5 {
                        for j in i + 2..5 {
                            edges.push((v[i], v[j]));
                        }
                    }
                }
            }
        }
        _ => {
            let t = rng.random_range(2..=(s / 2).min(MAX_LEGS));
            let mut rest = s - 2 * t;
            let starfish = rng.random_bool(0.5);
            let (ends, tail) = ids.split_at(t);
            let (body, tail) = tail.split_at(t);
            for i in 0..t {
                for j in 0..t {
                    if (i == j) == starfish {
                        edges.push((ends[i], body[j]));
                    }
                }
                for j in i + 1..t {
                    edges.push((body[i], body[j]));
                }
            }
            let mut tail = tail;
            if rest >= 1 && rng.random_bool(0.5) {
                let pos = rng.random_range(0..2 * t);
                let v = if pos < t { ends[pos] } else { body[pos - t] };
                let twin = tail[0];
                tail = &tail[1..];
                rest -= 1;
                let shape_k2 = rng.random_bool(0.5);
                let nbrs: Vec<usize> = if pos < t {
                    (0..t).filter(|&j| (pos == j) == starfish).map(|j| body[j]).collect()
                } else {
                    let c = pos - t;
                    let mut l: Vec<usize> =
                        (0..t).filter(|&i| (i == c) == starfish).map(|i| ends[i]).collect();
                    l.extend((0..t).filter(|&j| j != c).map(|j| body[j]));
                    l.extend(tail.iter().copied());
                    l
                };
                edges.extend(nbrs.into_iter().map(|w| (twin, w)));
                if shape_k2 {
                    edges.push((twin, v));
                }
            }
            if rest >= 1 {
                for &c in body {
                    for &r in tail {
                        edges.push((c, r));
                    }
                }
                stack.push(tail.to_vec());
            }
        }
    }
}

fn treecograph_node(
    ids: Vec<usize>,
    rng: &mut ChaCha8Rng,
    edges: &mut Vec<(usize, usize)>,
    stack: &mut Vec<Vec<usize>>,
) {
    let s = ids.len();
    if s == 1 {
        return;
    }
    let dense_ok = s <= DENSE_CAP;
    let mut choices: Vec<u8> = vec![b'P'];
    if dense_ok {
        choices.push(b'S');
    }
    if s >= 4 {
        choices.push(b'T');
        if dense_ok {
            choices.push(b'C');
        }
    }
    match *choices.choose(rng).expect("non-empty") {
        b'P' => split_node(ids, false, rng, edges, stack),
        b'S' => split_node(ids, true, rng, edges, stack),
        kind => {
            let tree = loop {
                let e = random_tree_edges(s, rng);
                if !is_star(s, &e) {
                    break e;
                }
            };
            if kind == b'T' {
                edges.extend(tree.into_iter().map(|(a, b)| (ids[a], ids[b])));
            } else {
                let t = Graph::from_edges(s, tree).expect("tree").complement();
                edges.extend(t.edges().map(|e| (ids[e.u], ids[e.v])));
            }
        }
    }
}

fn is_star(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut deg = vec![0usize; n];
    for &(a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    deg.iter().any(|&d| d == n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sun_shape() {
        let g = FamilySpec::Sun(3).generate().unwrap();
        assert_eq!((g.n(), g.m()), (6, 9));
        assert!((3..6).all(|w| g.degree(w) == 2));
        assert_eq!(g.induced(&[0, 1, 2]).unwrap(), Graph::complete(3));
        assert!(FamilySpec::Sun(4).generate().is_err());
    }

    #[test]
    fn urchin_is_starfish_complement() {
        for t in 2..7 {
            let s = FamilySpec::starfish(t).generate().unwrap();
            let u = FamilySpec::urchin(t).generate().unwrap();
            assert_eq!(s.complement(), relabel_swap(&u, t));
        }
    }

    // Complementing a starfish turns the ends into a clique; swap the two halves
    // so the urchin layout lines up.
    fn relabel_swap(g: &Graph, t: usize) -> Graph {
        let map = |v: usize| if v < t { v + t } else { v - t };
        Graph::from_edges(g.n(), g.edges().map(|e| (map(e.u), map(e.v)))).unwrap()
    }

    #[test]
    fn named_sizes() {
        let g = FamilySpec::Named(Named::ThreeK2Bar).generate().unwrap();
        assert_eq!((g.n(), g.m()), (6, 12));
        let g = FamilySpec::Named(Named::C6Join3K1).generate().unwrap();
        assert_eq!((g.n(), g.m()), (9, 6 + 18));
        let g = FamilySpec::Named(Named::P6Join3K1).generate().unwrap();
        assert_eq!((g.n(), g.m()), (9, 5 + 18));
    }

    #[test]
    fn fat_variants() {
        let g = FamilySpec::starfish(3).fat(4, FatShape::TwoK1).generate().unwrap();
        assert_eq!(g.n(), 7);
        assert!(!g.has_edge(4, 6));
        assert_eq!(g.neighbors(6), &[1, 3, 5]);
        let g = FamilySpec::starfish(3).fat(0, FatShape::K2).generate().unwrap();
        assert_eq!(g.neighbors(6), &[0, 3]);
        assert!(FamilySpec::starfish(3).fat(6, FatShape::K2).generate().is_err());
        assert!(FamilySpec::Path(4).fat(0, FatShape::K2).generate().is_err());
    }

    #[test]
    fn spec_text_round_trip() {
        let specs = [
            FamilySpec::Path(4),
            FamilySpec::starfish(3).with_head(FamilySpec::Path(4)),
            FamilySpec::urchin(5).with_head(FamilySpec::Named(Named::ThreeK2Bar)),
            FamilySpec::starfish(3).with_head(FamilySpec::Complete(3)).fat(2, FatShape::TwoK1),
            FamilySpec::Named(Named::P6Join3K1),
            FamilySpec::RandomTreeCograph { n: 30, seed: 9 },
        ];
        for s in specs {
            assert_eq!(FamilySpec::parse(&s.to_string(), None).unwrap(), s);
        }
        assert_eq!(
            FamilySpec::parse("random_tree(10)", Some(4)).unwrap(),
            FamilySpec::RandomTree { n: 10, seed: 4 }
        );
        assert!(FamilySpec::parse("random_tree(10)", None).is_err());
        assert!(FamilySpec::parse("blob(3)", None).is_err());
        assert!(FamilySpec::parse("path(3", None).is_err());
    }

    #[test]
    fn random_generators_are_reproducible() {
        for n in [1, 2, 7, 40] {
            let a = FamilySpec::RandomP4Tidy { n, seed: 3 }.generate().unwrap();
            let b = FamilySpec::RandomP4Tidy { n, seed: 3 }.generate().unwrap();
            assert_eq!(a, b);
            assert_eq!(a.n(), n);
            let t = FamilySpec::RandomTree { n, seed: 5 }.generate().unwrap();
            assert_eq!(t.m(), n - 1);
            assert!(t.is_connected());
        }
    }
}
