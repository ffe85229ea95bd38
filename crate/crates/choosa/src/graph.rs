//! Simple undirected graphs: DIMACS I/O, family generators, degeneracy
//! ordering and exhaustive small-graph enumeration.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Simple undirected graph on vertices `0..n`.
///
/// No self-loops, no parallel edges; adjacency is kept symmetric.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BTreeSet::new(); n],
            edges: BTreeSet::new(),
        }
    }

    pub fn with_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Inserts the undirected edge `{u, v}`. Duplicate inserts are no-ops.
    ///
    /// Panics on self-loops or endpoints `>= n`.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop {u}");
        assert!(u < self.n && v < self.n, "endpoint out of range");
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges.insert((a, b));
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges.remove(&(a, b));
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges.contains(&(a, b))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, {:?})", self.n, self.edges.len(), self.edges)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DimacsError {
    #[error("line {line}: missing problem line before edge")]
    MissingProblemLine { line: usize },
    #[error("line {line}: duplicate problem line")]
    DuplicateProblemLine { line: usize },
    #[error("line {line}: endpoint {v} out of range 1..={n}")]
    EndpointOutOfRange { line: usize, v: usize, n: usize },
    #[error("line {line}: self-loop on vertex {v}")]
    SelfLoop { line: usize, v: usize },
    #[error("line {line}: malformed token in {kind:?} line")]
    Malformed { line: usize, kind: String },
    #[error("no problem line found")]
    NoProblemLine,
}

/// Parses DIMACS `.col` text: `c` comments, one `p edge n m` line,
/// `e u v` lines with 1-indexed endpoints. Duplicate edges collapse.
pub fn parse_dimacs(text: &str) -> Result<Graph, DimacsError> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        let mut tok = l.split_ascii_whitespace();
        match tok.next() {
            Some("p") => {
                if graph.is_some() {
                    return Err(DimacsError::DuplicateProblemLine { line });
                }
                let fmt_ok = tok.next() == Some("edge");
                let n = tok.next().and_then(|t| t.parse::<usize>().ok());
                let m = tok.next().and_then(|t| t.parse::<usize>().ok());
                match (fmt_ok, n, m, tok.next()) {
                    (true, Some(n), Some(_), None) => graph = Some(Graph::new(n)),
                    _ => {
                        return Err(DimacsError::Malformed {
                            line,
                            kind: "p".into(),
                        })
                    }
                }
            }
            Some("e") => {
                let g = graph
                    .as_mut()
                    .ok_or(DimacsError::MissingProblemLine { line })?;
                let u = tok.next().and_then(|t| t.parse::<usize>().ok());
                let v = tok.next().and_then(|t| t.parse::<usize>().ok());
                let (u, v) = match (u, v, tok.next()) {
                    (Some(u), Some(v), None) => (u, v),
                    _ => {
                        return Err(DimacsError::Malformed {
                            line,
                            kind: "e".into(),
                        })
                    }
                };
                let n = g.n();
                for &w in &[u, v] {
                    if w < 1 || w > n {
                        return Err(DimacsError::EndpointOutOfRange { line, v: w, n });
                    }
                }
                if u == v {
                    return Err(DimacsError::SelfLoop { line, v: u });
                }
                g.add_edge(u - 1, v - 1);
            }
            _ => {
                return Err(DimacsError::Malformed {
                    line,
                    kind: l.split_ascii_whitespace().next().unwrap_or("").into(),
                })
            }
        }
    }
    graph.ok_or(DimacsError::NoProblemLine)
}

/// Emits `p edge n m` followed by sorted 1-indexed `e u v` lines.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// K_{a,b}: first `a` vertices form one side, last `b` the other.
pub fn gen_complete_bipartite(a: usize, b: usize) -> Graph {
    assert!(a >= 1 && b >= 1, "both sides must be nonempty");
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in 0..b {
            g.add_edge(u, a + v);
        }
    }
    g
}

pub fn gen_cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = Graph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    g
}

pub fn gen_complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// Random labeled tree from a seeded uniform Pruefer sequence.
pub fn gen_random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "tree needs at least one vertex");
    if n == 1 {
        return Graph::new(1);
    }
    if n == 2 {
        return Graph::with_edges(2, [(0, 1)]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pruefer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    pruefer_decode(n, &pruefer)
}

/// Decodes a Pruefer sequence of length n-2 into the labeled tree it encodes.
pub fn pruefer_decode(n: usize, seq: &[usize]) -> Graph {
    assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut g = Graph::new(n);
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &v in seq {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        g.add_edge(leaf, v);
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let mut it = leaves.iter();
    let (a, b) = (*it.next().unwrap(), *it.next().unwrap());
    g.add_edge(a, b);
    g
}

/// All labeled trees on `n` vertices, via exhaustive Pruefer sequences.
pub fn enumerate_trees(n: usize) -> Box<dyn Iterator<Item = Graph>> {
    assert!((1..=8).contains(&n), "tree enumeration supported for n <= 8");
    if n == 1 {
        return Box::new(std::iter::once(Graph::new(1)));
    }
    if n == 2 {
        return Box::new(std::iter::once(Graph::with_edges(2, [(0, 1)])));
    }
    let len = n - 2;
    let total = (n as u64).pow(len as u32);
    Box::new((0..total).map(move |mut code| {
        let mut seq = vec![0usize; len];
        for s in seq.iter_mut() {
            *s = (code % n as u64) as usize;
            code /= n as u64;
        }
        pruefer_decode(n, &seq)
    }))
}

/// Maximal outerplanar graph: the n-gon `0..n` triangulated by a seeded
/// random ear decomposition (n-3 non-crossing chords, 2n-3 edges total).
pub fn gen_maximal_outerplanar(n: usize, seed: u64) -> Graph {
    assert!(n >= 3, "outerplanar generator needs n >= 3");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = gen_cycle(n);
    // cut random ears off the polygon until a triangle remains
    let mut poly: Vec<usize> = (0..n).collect();
    while poly.len() > 3 {
        let i = rng.gen_range(0..poly.len());
        let prev = poly[(i + poly.len() - 1) % poly.len()];
        let next = poly[(i + 1) % poly.len()];
        g.add_edge(prev, next);
        poly.remove(i);
    }
    g
}

/// Sub-maximal variant: triangulate, then delete a seeded random subset of
/// the chords (cycle edges are kept, so the result stays outerplanar).
pub fn gen_outerplanar(n: usize, seed: u64, maximal: bool) -> Graph {
    let g = gen_maximal_outerplanar(n, seed);
    if maximal {
        return g;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x9e3779b97f4a7c15));
    let cycle: BTreeSet<(usize, usize)> = gen_cycle(n).edges().collect();
    let chords: Vec<(usize, usize)> = g.edges().filter(|e| !cycle.contains(e)).collect();
    let keep = if chords.is_empty() {
        0
    } else {
        rng.gen_range(0..chords.len())
    };
    let mut kept: Vec<(usize, usize)> = chords;
    kept.shuffle(&mut rng);
    kept.truncate(keep);
    let mut out = gen_cycle(n);
    for (u, v) in kept {
        out.add_edge(u, v);
    }
    out
}

/// Seeded Erdos-Renyi style random graph: each pair kept with probability p.
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyResult {
    pub degeneracy: usize,
    /// Elimination ordering: each vertex has at most `degeneracy` neighbors
    /// occurring later in the ordering.
    pub ordering: Vec<usize>,
}

/// Minimum-degree peeling; ties broken by smallest vertex index.
pub fn degeneracy_ordering(g: &Graph) -> DegeneracyResult {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut ordering = Vec::with_capacity(n);
    let mut d = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        d = d.max(deg[v]);
        removed[v] = true;
        ordering.push(v);
        for u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    DegeneracyResult {
        degeneracy: d,
        ordering,
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("enumeration of graphs on {n} vertices refused (limit {limit}); use force to override")]
pub struct EnumerationGuard {
    pub n: usize,
    pub limit: usize,
}

const ENUM_VERTEX_LIMIT: usize = 6;

/// All `2^(n(n-1)/2)` labeled simple graphs on `n` vertices, in
/// lexicographic edge-mask order. Guarded at n > 6 unless forced.
pub fn enumerate_graphs(
    n: usize,
    force: bool,
) -> Result<impl Iterator<Item = Graph>, EnumerationGuard> {
    if n > ENUM_VERTEX_LIMIT && !force {
        return Err(EnumerationGuard {
            n,
            limit: ENUM_VERTEX_LIMIT,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let m = pairs.len();
    Ok((0u64..(1u64 << m)).map(move |mask| {
        let mut g = Graph::new(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    }))
}
