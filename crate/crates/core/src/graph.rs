//! Simple undirected graphs with 0-based contiguous vertex ids, plus the
//! named instances and operators the rest of the crate is tested against.
//!
//! Invariants: no self-loops, no duplicate edges, every endpoint in range.
//! Graphs are immutable after construction.

use crate::error::{input_err, Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    edges: Vec<(usize, usize)>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.edges.len(), self.edges)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { n, adj: vec![false; n * n], edges: Vec::new() }
    }

    /// Builds a graph from an edge list. Rejects self-loops, out-of-range
    /// endpoints and duplicate edges (in either orientation).
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return input_err(format!("edge ({u}, {v}) out of range for n = {n}"));
            }
            if u == v {
                return input_err(format!("self-loop at vertex {u}"));
            }
            if g.adj[u * n + v] {
                return input_err(format!("duplicate edge ({u}, {v})"));
            }
            g.adj[u * n + v] = true;
            g.adj[v * n + u] = true;
        }
        let mut sorted: Vec<(usize, usize)> =
            edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        sorted.sort_unstable();
        g.edges = sorted;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        debug_assert!(v < self.n);
        (0..self.n).filter(move |&u| self.adj[v * self.n + u])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Induced subgraph; vertex `set[i]` becomes vertex `i`.
    pub fn induced(&self, set: &VertexSet) -> Result<Graph> {
        for &v in set.iter() {
            if v >= self.n {
                return input_err(format!("vertex {v} out of range for n = {}", self.n));
            }
        }
        let ids = set.as_slice();
        let mut edges = Vec::new();
        for i in 0..ids.len() {
            for j in i + 1..ids.len() {
                if self.has_edge(ids[i], ids[j]) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(ids.len(), &edges)
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n, &edges).expect("complement edges are valid")
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = vec![s];
            while let Some(v) = queue.pop() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Girth (length of a shortest cycle), or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        // BFS from every vertex; a non-tree edge at depths (d1, d2) closes a
        // cycle of length d1 + d2 + 1 through the root.
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        queue.push_back(u);
                    } else if parent[v] != u {
                        let len = dist[v] + dist[u] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }
}

/// Strictly increasing vertex ids inside a host graph of known size.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Validates strict order and range.
    pub fn new(ids: Vec<usize>, n: usize) -> Result<Self> {
        for w in ids.windows(2) {
            if w[0] >= w[1] {
                return input_err(format!("vertex set not strictly increasing: {ids:?}"));
            }
        }
        if let Some(&last) = ids.last() {
            if last >= n {
                return input_err(format!("vertex {last} out of range for n = {n}"));
            }
        }
        Ok(VertexSet(ids))
    }

    /// Sorts and validates; duplicates are rejected.
    pub fn from_unsorted(mut ids: Vec<usize>, n: usize) -> Result<Self> {
        ids.sort_unstable();
        VertexSet::new(ids, n)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_independent_in(&self, g: &Graph) -> bool {
        let ids = self.as_slice();
        ids.iter().enumerate().all(|(i, &u)| ids[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
    }

    pub fn is_clique_in(&self, g: &Graph) -> bool {
        let ids = self.as_slice();
        ids.iter().enumerate().all(|(i, &u)| ids[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }
}

/// A partition of the host's vertices into cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCover {
    pub cliques: Vec<VertexSet>,
}

impl CliqueCover {
    pub fn size(&self) -> usize {
        self.cliques.len()
    }

    /// Checks disjointness, full coverage, and cliqueness of every part.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = vec![false; g.n()];
        for c in &self.cliques {
            if !c.is_clique_in(g) {
                return input_err(format!("set {:?} is not a clique", c.as_slice()));
            }
            for &v in c.iter() {
                if seen[v] {
                    return input_err(format!("vertex {v} covered twice"));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return input_err(format!("vertex {v} not covered"));
        }
        Ok(())
    }
}

/// A proper coloring: `colors[v]` in `0..count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub count: usize,
}

impl Coloring {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.n() {
            return input_err("coloring length does not match graph");
        }
        if let Some(&c) = self.colors.iter().find(|&&c| c >= self.count) {
            return input_err(format!("color {c} out of range"));
        }
        for &(u, v) in g.edges() {
            if self.colors[u] == self.colors[v] {
                return input_err(format!("edge ({u}, {v}) is monochromatic"));
            }
        }
        Ok(())
    }
}

/// New vertex per edge, adjacent to that edge's endpoints; original edges
/// dropped. Edge `edges()[i]` gets vertex `n + i`.
pub fn full_subdivision(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, n + i));
        edges.push((v, n + i));
    }
    Graph::new(n + g.edge_count(), &edges).expect("subdivision edges are valid")
}

/// Adds two new non-adjacent vertices `n` and `n + 1`, each adjacent to all
/// original vertices.
pub fn universal_extension(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = g.edges().to_vec();
    for v in 0..n {
        edges.push((v, n));
        edges.push((v, n + 1));
    }
    Graph::new(n + 2, &edges).expect("extension edges are valid")
}

/// Triangle {1, 3, 5} with pendant vertices 0, 2, 4 attached to 1, 3, 5
/// respectively. The smallest graph in this crate's class that is not an
/// interval graph.
pub fn net() -> Graph {
    Graph::new(6, &[(0, 1), (1, 3), (1, 5), (3, 5), (2, 3), (4, 5)]).unwrap()
}

/// The octahedron K_{2,2,2}: a 4-cycle plus two non-adjacent vertices
/// adjacent to everything on the cycle.
pub fn k222() -> Graph {
    universal_extension(&cycle(4).unwrap())
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return input_err(format!("cycle needs n >= 3, got {n}"));
    }
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn complement_cycle(n: usize) -> Result<Graph> {
    Ok(cycle(n)?.complement())
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::new(a + b, &edges).unwrap()
}

/// Builds a named instance. Parameterized names take the count either as
/// the `n` argument ("cycle" with n = 7) or inline ("cycle(7)",
/// "complete-bipartite(2,3)").
pub fn family(name: &str, n: Option<usize>) -> Result<Graph> {
    let (base, args) = split_family_name(name)?;
    let arg1 = |what: &str| -> Result<usize> {
        match (args.first().copied(), n) {
            (Some(a), _) => Ok(a),
            (None, Some(v)) => Ok(v),
            (None, None) => input_err(format!("family '{base}' needs {what}")),
        }
    };
    match base {
        "net" => Ok(net()),
        "k222" => Ok(k222()),
        "path" => Ok(path(arg1("a vertex count")?)),
        "cycle" => cycle(arg1("a vertex count")?),
        "complete" => Ok(complete(arg1("a vertex count")?)),
        "complement-cycle" => complement_cycle(arg1("a vertex count")?),
        "complete-bipartite" => {
            if args.len() == 2 {
                Ok(complete_bipartite(args[0], args[1]))
            } else {
                input_err("complete-bipartite needs two part sizes, e.g. complete-bipartite(2,3)")
            }
        }
        _ => input_err(format!("unknown family '{base}'")),
    }
}

fn split_family_name(name: &str) -> Result<(&str, Vec<usize>)> {
    match name.split_once('(') {
        None => Ok((name, Vec::new())),
        Some((base, rest)) => {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Input(format!("unbalanced parentheses in '{name}'")))?;
            let mut args = Vec::new();
            for part in inner.split(',') {
                let v: usize = part
                    .trim()
                    .parse()
                    .map_err(|_| Error::Input(format!("bad family argument '{part}'")))?;
                args.push(v);
            }
            Ok((base, args))
        }
    }
}
