//! Interval recognition with refutation witnesses, and certificate-based
//! non-membership checks built on the common-neighborhood obstruction.

use std::collections::HashSet;
use std::fmt;

use crate::error::{input_err, Error, Result};
use crate::graph::{self, Graph, VertexSet};
use crate::oracle::{check_limit, limits};
use crate::order::{brute_force_mpt_order, verify_i_order, VertexOrder};
use crate::rep::MptRepresentation;

/// Reason a graph fails interval recognition. Both forms are checkable
/// against the graph without rerunning the recognizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntervalObstruction {
    /// Vertices of an induced cycle of length at least four, in cycle order.
    ChordlessCycle(Vec<usize>),
    /// Independent triple pairwise joined by paths avoiding the closed
    /// neighborhood of the third vertex.
    AsteroidalTriple(usize, usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalVerdict {
    pub is_interval: bool,
    pub witness: Option<IntervalObstruction>,
    pub i_order: Option<VertexOrder>,
}

/// Decides interval membership. A negative verdict carries a chordless
/// cycle or an asteroidal triple; a positive one carries an I-order that
/// has already passed verification.
pub fn is_interval_graph(g: &Graph) -> IntervalVerdict {
    let elim = mcs_elimination(g);
    if !is_perfect_elimination(g, &elim) {
        let cycle = find_chordless_cycle(g);
        return IntervalVerdict {
            is_interval: false,
            witness: Some(IntervalObstruction::ChordlessCycle(cycle)),
            i_order: None,
        };
    }
    if let Some((a, b, c)) = find_asteroidal_triple(g) {
        return IntervalVerdict {
            is_interval: false,
            witness: Some(IntervalObstruction::AsteroidalTriple(a, b, c)),
            i_order: None,
        };
    }
    let order = i_order_from_cliques(g, &elim);
    assert!(
        verify_i_order(g, &order).is_none(),
        "order extracted from a clique path is an I-order"
    );
    IntervalVerdict {
        is_interval: true,
        witness: None,
        i_order: Some(order),
    }
}

/// Maximum-cardinality search. Returns the vertices in elimination order,
/// which is perfect exactly when the graph is chordal.
fn mcs_elimination(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut picked = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !picked[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("an unpicked vertex remains");
        picked[v] = true;
        visit.push(v);
        for u in g.neighbors(v) {
            if !picked[u] {
                weight[u] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

fn is_perfect_elimination(g: &Graph, elim: &[usize]) -> bool {
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in elim.iter().enumerate() {
        pos[v] = i;
    }
    for &v in elim {
        let later: Vec<usize> = g.neighbors(v).filter(|&u| pos[u] > pos[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&u| pos[u]) else {
            continue;
        };
        if later.iter().any(|&u| u != parent && !g.has_edge(parent, u)) {
            return false;
        }
    }
    true
}

/// Locates an induced cycle of length at least four in a non-chordal graph:
/// some vertex has non-adjacent neighbors joined by a path that avoids the
/// rest of its closed neighborhood, and the shortest such path is induced.
fn find_chordless_cycle(g: &Graph) -> Vec<usize> {
    for v in 0..g.n() {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut allowed = vec![true; g.n()];
                allowed[v] = false;
                for &u in &nbrs {
                    allowed[u] = u == a || u == b;
                }
                if let Some(path) = shortest_path(g, a, b, &allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return cycle;
                }
            }
        }
    }
    unreachable!("the caller established the graph is not chordal")
}

fn shortest_path(g: &Graph, from: usize, to: usize, allowed: &[bool]) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n()];
    let mut queue = std::collections::VecDeque::from([from]);
    prev[from] = from;
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in g.neighbors(x) {
            if allowed[y] && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// First independent triple, in lexicographic order, whose members pairwise
/// stay connected after deleting the closed neighborhood of the third.
fn find_asteroidal_triple(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.n();
    let comp: Vec<Vec<usize>> = (0..n).map(|c| components_avoiding(g, c)).collect();
    let linked = |x: usize, y: usize, avoid: usize| comp[avoid][x] == comp[avoid][y];
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                if linked(a, b, c) && linked(a, c, b) && linked(b, c, a) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// Component labels of the graph with N[c] deleted; deleted vertices get
/// `usize::MAX`, which never compares equal to a live label.
fn components_avoiding(g: &Graph, c: usize) -> Vec<usize> {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let removed = |x: usize| x == c || g.has_edge(x, c);
    let mut next = 0;
    for start in 0..n {
        if label[start] != usize::MAX || removed(start) {
            continue;
        }
        let mut stack = vec![start];
        label[start] = next;
        while let Some(x) = stack.pop() {
            for y in g.neighbors(x) {
                if label[y] == usize::MAX && !removed(y) {
                    label[y] = next;
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    label
}

/// Maximal cliques of a chordal graph, read off the elimination order and
/// pruned of subsets. Sorted for deterministic search.
fn chordal_maximal_cliques(g: &Graph, elim: &[usize]) -> Vec<Vec<usize>> {
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in elim.iter().enumerate() {
        pos[v] = i;
    }
    let mut cliques: Vec<Vec<usize>> = elim
        .iter()
        .map(|&v| {
            let mut c: Vec<usize> = g.neighbors(v).filter(|&u| pos[u] > pos[v]).collect();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    cliques.sort();
    cliques.dedup();
    let subset = |small: &[usize], big: &[usize]| small.iter().all(|v| big.binary_search(v).is_ok());
    (0..cliques.len())
        .filter(|&i| {
            !(0..cliques.len())
                .any(|j| j != i && cliques[j].len() > cliques[i].len() && subset(&cliques[i], &cliques[j]))
        })
        .map(|i| cliques[i].clone())
        .collect()
}

/// Arranges the maximal cliques consecutively and orders vertices by first
/// clique. Backtracking over clique choices with a failed-state memo; a
/// consecutive arrangement exists because the graph is chordal and
/// asteroidal-triple-free.
fn i_order_from_cliques(g: &Graph, elim: &[usize]) -> VertexOrder {
    let n = g.n();
    if n == 0 {
        return VertexOrder::identity(0);
    }
    let cliques = chordal_maximal_cliques(g, elim);
    let k = cliques.len();
    let mut total = vec![0usize; n];
    for c in &cliques {
        for &v in c {
            total[v] += 1;
        }
    }

    struct Search<'a> {
        cliques: &'a [Vec<usize>],
        total: &'a [usize],
        placed_cnt: Vec<usize>,
        placed: Vec<bool>,
        arrangement: Vec<usize>,
        failed: HashSet<Vec<u64>>,
    }
    impl Search<'_> {
        fn placed_key(&self) -> Vec<u64> {
            let mut key = vec![0u64; self.placed.len().div_ceil(64)];
            for (i, &p) in self.placed.iter().enumerate() {
                if p {
                    key[i / 64] |= 1 << (i % 64);
                }
            }
            key
        }
        fn open_vertices(&self) -> Vec<usize> {
            (0..self.placed_cnt.len())
                .filter(|&v| self.placed_cnt[v] >= 1 && self.placed_cnt[v] < self.total[v])
                .collect()
        }
        fn run(&mut self) -> bool {
            if self.arrangement.len() == self.cliques.len() {
                return true;
            }
            let key = self.placed_key();
            if self.failed.contains(&key) {
                return false;
            }
            let open = self.open_vertices();
            for i in 0..self.cliques.len() {
                if self.placed[i] || !open.iter().all(|v| self.cliques[i].binary_search(v).is_ok()) {
                    continue;
                }
                self.placed[i] = true;
                self.arrangement.push(i);
                for &v in &self.cliques[i] {
                    self.placed_cnt[v] += 1;
                }
                if self.run() {
                    return true;
                }
                for &v in &self.cliques[i] {
                    self.placed_cnt[v] -= 1;
                }
                self.arrangement.pop();
                self.placed[i] = false;
            }
            self.failed.insert(key);
            false
        }
    }

    let mut search = Search {
        cliques: &cliques,
        total: &total,
        placed_cnt: vec![0; n],
        placed: vec![false; k],
        arrangement: Vec::with_capacity(k),
        failed: HashSet::new(),
    };
    let found = search.run();
    assert!(found, "chordal AT-free graphs admit a consecutive clique arrangement");

    let mut first = vec![usize::MAX; n];
    for (slot, &i) in search.arrangement.iter().enumerate() {
        for &v in &cliques[i] {
            first[v] = first[v].min(slot);
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (first[v], v));
    VertexOrder::new(order).expect("sorting a range yields a permutation")
}

/// Certificate produced while deciding MPT membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MptCertificate {
    /// Non-adjacent pair whose common neighborhood fails interval
    /// recognition; no MPT representation of the host graph can exist.
    CommonNeighborhood {
        pair: (usize, usize),
        verdict: IntervalVerdict,
    },
    /// A verified MPT-order for the whole graph.
    OrderFound(VertexOrder),
    /// Exhaustive search over vertex orders found none.
    OrderExhausted,
}

impl fmt::Display for MptCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MptCertificate::CommonNeighborhood { pair: (u, v), verdict } => {
                let ids: Vec<String> = match &verdict.witness {
                    Some(IntervalObstruction::ChordlessCycle(c)) => {
                        c.iter().map(|x| x.to_string()).collect()
                    }
                    Some(IntervalObstruction::AsteroidalTriple(a, b, c)) => {
                        vec![a.to_string(), b.to_string(), c.to_string()]
                    }
                    None => Vec::new(),
                };
                write!(f, "PAIR {u} {v} : NOT-INTERVAL witness={}", ids.join(","))
            }
            MptCertificate::OrderFound(ord) => write!(f, "ORDER {ord}"),
            MptCertificate::OrderExhausted => write!(f, "ORDER-EXHAUSTED"),
        }
    }
}

/// Checks every non-adjacent pair's common neighborhood and reports each
/// failure, in lexicographic pair order, with the witness relabeled back to
/// the host graph's vertices.
pub fn common_neighborhood_certificates(g: &Graph) -> Vec<MptCertificate> {
    let mut certs = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                continue;
            }
            let common: Vec<usize> = g.neighbors(u).filter(|&w| g.has_edge(w, v)).collect();
            let set = VertexSet::new(common, g.n()).expect("neighbors are sorted and in range");
            let sub = g.induced(&set).expect("the set was built from this graph");
            let mut verdict = is_interval_graph(&sub);
            if verdict.is_interval {
                continue;
            }
            verdict.witness = verdict.witness.map(|w| relabel(w, set.as_slice()));
            certs.push(MptCertificate::CommonNeighborhood { pair: (u, v), verdict });
        }
    }
    certs
}

fn relabel(witness: IntervalObstruction, ids: &[usize]) -> IntervalObstruction {
    match witness {
        IntervalObstruction::ChordlessCycle(c) => {
            IntervalObstruction::ChordlessCycle(c.into_iter().map(|i| ids[i]).collect())
        }
        IntervalObstruction::AsteroidalTriple(a, b, c) => {
            IntervalObstruction::AsteroidalTriple(ids[a], ids[b], ids[c])
        }
    }
}

/// Neighborhood of `v` split at its point. Both sides induce interval
/// graphs; the edges between the sides are returned for inspection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodPartition {
    pub left: VertexSet,
    pub right: VertexSet,
    pub cross_edges: Vec<(usize, usize)>,
}

pub fn neighborhood_partition(rep: &MptRepresentation, v: usize) -> Result<NeighborhoodPartition> {
    if v >= rep.n() {
        return input_err(format!("vertex {v} out of range for n = {}", rep.n()));
    }
    let g = rep.adjacency();
    let pv = rep.item(v).p();
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for u in g.neighbors(v) {
        if rep.item(u).p() < pv {
            left.push(u);
        } else {
            right.push(u);
        }
    }
    let left = VertexSet::new(left, g.n()).expect("neighbors are sorted and in range");
    let right = VertexSet::new(right, g.n()).expect("neighbors are sorted and in range");
    for side in [&left, &right] {
        let sub = g.induced(side).expect("the set was built from this graph");
        assert!(
            is_interval_graph(&sub).is_interval,
            "each side of a split neighborhood induces an interval graph"
        );
    }
    let mut cross_edges = Vec::new();
    for &l in left.iter() {
        for &r in right.iter() {
            if g.has_edge(l, r) {
                cross_edges.push((l, r));
            }
        }
    }
    cross_edges.sort_unstable();
    Ok(NeighborhoodPartition { left, right, cross_edges })
}

/// Outerplanarity by edge count plus a targeted search for K4 and K_{2,3}
/// subdivisions. Refuses graphs past the documented limit so the search
/// cannot silently blow up.
pub fn is_outerplanar(g: &Graph) -> Result<bool> {
    check_limit(g.n(), limits::OUTERPLANAR)?;
    let n = g.n();
    if n < 4 {
        return Ok(true);
    }
    if g.edge_count() > 2 * n - 3 {
        return Ok(false);
    }
    Ok(!has_k4_minor(g) && !has_k23_subdivision(g))
}

/// K4 minors coincide with K4 subdivisions since every K4 branch vertex
/// has degree three, and both are absent exactly when eliminating vertices
/// of degree at most two, smoothing the degree-two ones, empties the graph.
fn has_k4_minor(g: &Graph) -> bool {
    let n = g.n();
    let mut adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let mut alive: Vec<usize> = (0..n).collect();
    loop {
        let Some(i) = alive.iter().position(|&v| adj[v].count_ones() <= 2) else {
            return !alive.is_empty();
        };
        let v = alive.swap_remove(i);
        if adj[v].count_ones() == 2 {
            let a = adj[v].trailing_zeros() as usize;
            let b = (adj[v] & (adj[v] - 1)).trailing_zeros() as usize;
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        let mut nbrs = adj[v];
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            adj[u] &= !(1 << v);
        }
        adj[v] = 0;
    }
}

/// K_{2,3} minors also coincide with K_{2,3} subdivisions, and one is
/// present exactly when some vertex pair is joined by three internally
/// disjoint paths that avoid any direct edge between the two.
fn has_k23_subdivision(g: &Graph) -> bool {
    let candidates: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
    for (i, &a) in candidates.iter().enumerate() {
        for &b in candidates.iter().skip(i + 1) {
            if three_disjoint_paths(g, a, b) {
                return true;
            }
        }
    }
    false
}

/// Unit-vertex-capacity flow between `a` and `b` with the direct edge
/// dropped, so every augmenting path picks up an interior vertex. Vertex
/// `x` splits into nodes 2x (in) and 2x + 1 (out).
fn three_disjoint_paths(g: &Graph, a: usize, b: usize) -> bool {
    let n = g.n();
    let mut cap = vec![vec![0i8; 2 * n]; 2 * n];
    for x in 0..n {
        if x != a && x != b {
            cap[2 * x][2 * x + 1] = 1;
        }
    }
    for &(x, y) in g.edges() {
        if (x, y) == (a.min(b), a.max(b)) {
            continue;
        }
        cap[2 * x + 1][2 * y] = 1;
        cap[2 * y + 1][2 * x] = 1;
    }
    let (s, t) = (2 * a + 1, 2 * b);
    for _ in 0..3 {
        let mut prev = vec![usize::MAX; 2 * n];
        prev[s] = s;
        let mut queue = std::collections::VecDeque::from([s]);
        'bfs: while let Some(x) = queue.pop_front() {
            for y in 0..2 * n {
                if prev[y] == usize::MAX && cap[x][y] > 0 {
                    prev[y] = x;
                    if y == t {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
        if prev[t] == usize::MAX {
            return false;
        }
        let mut cur = t;
        while cur != s {
            let p = prev[cur];
            cap[p][cur] -= 1;
            cap[cur][p] += 1;
            cur = p;
        }
    }
    true
}

/// Builds a member of one of the known non-MPT families. Base graphs are
/// named with a colon, e.g. "full-subdivision-of:complete(4)" or
/// "universal-extension-of:cycle(5)", and the count parameter feeds the
/// base family. The base assumptions are checked before emitting.
pub fn non_mpt_family(name: &str, parameter: Option<usize>) -> Result<Graph> {
    let (kind, base) = match name.split_once(':') {
        Some((kind, base)) => (kind, Some(base)),
        None => (name, None),
    };
    let no_base = |kind: &str| -> Result<()> {
        match base {
            Some(_) => input_err(format!("family '{kind}' takes no base graph")),
            None => Ok(()),
        }
    };
    match kind {
        "k222" => {
            no_base(kind)?;
            if parameter.is_some() {
                return input_err("family 'k222' takes no count");
            }
            Ok(graph::k222())
        }
        "complement-cycle" => {
            no_base(kind)?;
            match parameter.unwrap_or(7) {
                7 => graph::complement_cycle(7),
                other => input_err(format!(
                    "only the 7-vertex complement cycle is certified non-MPT, got {other}"
                )),
            }
        }
        "universal-extension-of" => {
            let base = base.ok_or_else(|| {
                Error::Input("universal-extension-of needs a base graph after ':'".into())
            })?;
            let h = graph::family(base, parameter)?;
            if is_interval_graph(&h).is_interval {
                return input_err(format!(
                    "base '{base}' is an interval graph; its universal extension is MPT"
                ));
            }
            Ok(graph::universal_extension(&h))
        }
        "full-subdivision-of" => {
            let base = base.ok_or_else(|| {
                Error::Input("full-subdivision-of needs a base graph after ':'".into())
            })?;
            let h = graph::family(base, parameter)?;
            if is_outerplanar(&h)? {
                return input_err(format!(
                    "base '{base}' is outerplanar; its full subdivision is MPT"
                ));
            }
            Ok(graph::full_subdivision(&h))
        }
        _ => input_err(format!("unknown non-MPT family '{kind}'")),
    }
}

/// Outcome of the recognition pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    /// An MPT-order was found; the graph is MPT.
    Mpt(VertexOrder),
    /// A refutation certificate; the graph is not MPT.
    NotMpt(MptCertificate),
    /// No certificate fired and the graph is too large for the order search.
    Unknown,
}

/// Runs the cheap certificates first and falls back to the exhaustive
/// order search only within the oracle limit.
pub fn recognize(g: &Graph) -> Recognition {
    if let Some(cert) = common_neighborhood_certificates(g).into_iter().next() {
        return Recognition::NotMpt(cert);
    }
    if g.n() > limits::ORDER_SEARCH {
        return Recognition::Unknown;
    }
    match brute_force_mpt_order(g).expect("size was checked against the limit") {
        Some(ord) => Recognition::Mpt(ord),
        None => Recognition::NotMpt(MptCertificate::OrderExhausted),
    }
}
