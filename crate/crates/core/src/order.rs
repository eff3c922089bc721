//! Vertex orders and their forbidden patterns.
//!
//! An order is valid for this graph class when no four positions
//! u < v < w < x have uw and vx as edges while vw is a non-edge. The
//! interval analogue forbids u < v < w with uw an edge and uv a non-edge.
//! Orders certify membership: a valid order converts to a representation
//! and back.

use std::fmt;

use crate::error::{input_err, Error, Result};
use crate::graph::Graph;
use crate::oracle::{check_limit, limits};
use crate::rep::{IntervalRepresentation, MptRepresentation, PointedInterval};
use crate::rational::q_usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrder {
    seq: Vec<usize>,
}

impl VertexOrder {
    /// `seq[i]` is the vertex at position i; must be a permutation of 0..n.
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        let mut seen = vec![false; n];
        for &v in &seq {
            if v >= n || seen[v] {
                return input_err(format!("order is not a permutation of 0..{n}"));
            }
            seen[v] = true;
        }
        Ok(VertexOrder { seq })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrder {
            seq: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.seq.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.seq
    }

    pub fn reversed(&self) -> Self {
        let mut seq = self.seq.clone();
        seq.reverse();
        VertexOrder { seq }
    }

    /// Inverse permutation: `position_of()[v]` is the position of vertex v.
    pub fn position_of(&self) -> Vec<usize> {
        let mut pos = vec![0; self.seq.len()];
        for (i, &v) in self.seq.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

impl fmt::Display for VertexOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.seq.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// Positions u < v < w < x with uw, vx edges and vw a non-edge.
    Quadruple,
    /// Positions u < v < w with uw an edge and uv a non-edge.
    Triple,
}

/// The lexicographically first forbidden pattern, reported both as
/// positions in the order and as the vertices sitting there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderViolation {
    pub kind: ViolationKind,
    pub positions: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl fmt::Display for OrderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", verts.join(","))
    }
}

struct PosAdj {
    n: usize,
    adj: Vec<bool>,
}

impl PosAdj {
    fn new(g: &Graph, ord: &VertexOrder) -> PosAdj {
        let n = g.n();
        let mut adj = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                adj[i * n + j] = g.has_edge(ord.seq[i], ord.seq[j]);
            }
        }
        PosAdj { n, adj }
    }

    fn edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }
}

/// None when the order is valid, otherwise the first violating quadruple.
/// The decision runs in O(n^2); the quadruple scan only happens on failure.
#[allow(clippy::needless_range_loop)]
pub fn verify_mpt_order(g: &Graph, ord: &VertexOrder) -> Option<OrderViolation> {
    assert_eq!(g.n(), ord.n(), "order and graph sizes differ");
    let n = g.n();
    let pa = PosAdj::new(g, ord);
    // min_left[w]: smallest position of a neighbor before w (n if none).
    // max_right[v]: largest position of a neighbor after v (0 if none).
    let mut min_left = vec![n; n];
    let mut max_right = vec![0usize; n];
    for i in 0..n {
        for j in i + 1..n {
            if pa.edge(i, j) {
                if min_left[j] == n {
                    min_left[j] = i;
                }
                max_right[i] = j;
            }
        }
    }
    let mut found = false;
    'decide: for v in 0..n {
        for w in v + 1..n {
            if !pa.edge(v, w) && min_left[w] < v && max_right[v] > w {
                found = true;
                break 'decide;
            }
        }
    }
    if !found {
        return None;
    }
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                if !pa.edge(u, w) || pa.edge(v, w) {
                    continue;
                }
                for x in w + 1..n {
                    if pa.edge(v, x) {
                        return Some(OrderViolation {
                            kind: ViolationKind::Quadruple,
                            positions: vec![u, v, w, x],
                            vertices: vec![ord.seq[u], ord.seq[v], ord.seq[w], ord.seq[x]],
                        });
                    }
                }
            }
        }
    }
    unreachable!("decision and witness scan disagree")
}

/// Interval variant: None when valid, otherwise the first violating triple.
pub fn verify_i_order(g: &Graph, ord: &VertexOrder) -> Option<OrderViolation> {
    assert_eq!(g.n(), ord.n(), "order and graph sizes differ");
    let n = g.n();
    let pa = PosAdj::new(g, ord);
    // next_non[u]: smallest position v > u with uv a non-edge (n if none).
    let mut found = false;
    'decide: for u in 0..n {
        let mut next_non = n;
        for v in u + 1..n {
            if !pa.edge(u, v) {
                next_non = v;
                break;
            }
        }
        for w in next_non + 1..n {
            if pa.edge(u, w) {
                found = true;
                break 'decide;
            }
        }
    }
    if !found {
        return None;
    }
    for u in 0..n {
        for v in u + 1..n {
            if pa.edge(u, v) {
                continue;
            }
            for w in v + 1..n {
                if pa.edge(u, w) {
                    return Some(OrderViolation {
                        kind: ViolationKind::Triple,
                        positions: vec![u, v, w],
                        vertices: vec![ord.seq[u], ord.seq[v], ord.seq[w]],
                    });
                }
            }
        }
    }
    unreachable!("decision and witness scan disagree")
}

/// Builds the representation induced by a valid order: vertex at position i
/// (1-based) gets point i, start at its leftmost neighbor position and end
/// at its rightmost. Fails with the violating pattern on an invalid order.
pub fn rep_from_order(g: &Graph, ord: &VertexOrder) -> Result<MptRepresentation> {
    if let Some(viol) = verify_mpt_order(g, ord) {
        return Err(Error::NotMptOrder(viol));
    }
    let n = g.n();
    let pos = ord.position_of();
    let mut items = vec![None; n];
    for (i, &v) in ord.seq.iter().enumerate() {
        let mut lo = i;
        let mut hi = i;
        for u in g.neighbors(v) {
            lo = lo.min(pos[u]);
            hi = hi.max(pos[u]);
        }
        items[v] = Some(
            PointedInterval::new(q_usize(lo + 1), q_usize(i + 1), q_usize(hi + 1))
                .expect("neighbor span contains the point"),
        );
    }
    let rep = MptRepresentation::new(items.into_iter().map(Option::unwrap).collect());
    debug_assert_eq!(&rep.adjacency(), g);
    Ok(rep)
}

/// Reads an order back off a representation by sorting on (point, vertex).
/// Always valid for the represented graph, ties included.
pub fn order_from_rep(rep: &MptRepresentation) -> VertexOrder {
    let mut seq: Vec<usize> = (0..rep.n()).collect();
    seq.sort_by(|&a, &b| rep.item(a).p().cmp(rep.item(b).p()).then(a.cmp(&b)));
    VertexOrder { seq }
}

/// Splits a representation into the two interval systems whose intersection
/// graphs cut out the represented graph: ends `[p, e]` and starts `[s, p]`.
pub fn two_interval_decomposition(
    rep: &MptRepresentation,
) -> (IntervalRepresentation, IntervalRepresentation) {
    let ends = IntervalRepresentation::new(
        rep.items()
            .iter()
            .map(|it| (it.p().clone(), it.e().clone()))
            .collect(),
    )
    .expect("p <= e in every item");
    let starts = IntervalRepresentation::new(
        rep.items()
            .iter()
            .map(|it| (it.s().clone(), it.p().clone()))
            .collect(),
    )
    .expect("s <= p in every item");
    (ends, starts)
}

struct OrderSearch<'a> {
    g: &'a Graph,
    used: Vec<bool>,
    seq: Vec<usize>,
    // min_left[q]: smallest prefix position adjacent to seq[q] (q if none).
    min_left: Vec<usize>,
    interval: bool,
}

impl OrderSearch<'_> {
    /// Placing y at the end can only create patterns whose last position is
    /// the new one; earlier patterns were excluded when the prefix grew.
    fn placeable(&self, y: usize) -> bool {
        let q = self.seq.len();
        if self.interval {
            // forbidden: u < v < q, uq edge, uv non-edge
            for u in 0..q {
                if !self.g.has_edge(self.seq[u], y) {
                    continue;
                }
                for v in u + 1..q {
                    if !self.g.has_edge(self.seq[u], self.seq[v]) {
                        return false;
                    }
                }
            }
        } else {
            // forbidden: u < v < w < q, uw edge, vw non-edge, vq edge
            for v in 0..q {
                if !self.g.has_edge(self.seq[v], y) {
                    continue;
                }
                for w in v + 1..q {
                    if self.min_left[w] < v && !self.g.has_edge(self.seq[v], self.seq[w]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn dfs(&mut self) -> bool {
        if self.seq.len() == self.g.n() {
            return true;
        }
        for y in 0..self.g.n() {
            if self.used[y] || !self.placeable(y) {
                continue;
            }
            let q = self.seq.len();
            let ml = (0..q)
                .find(|&i| self.g.has_edge(self.seq[i], y))
                .unwrap_or(q);
            self.used[y] = true;
            self.seq.push(y);
            self.min_left.push(ml);
            if self.dfs() {
                return true;
            }
            self.min_left.pop();
            self.seq.pop();
            self.used[y] = false;
        }
        false
    }
}

fn order_search(g: &Graph, interval: bool, limit: usize) -> Result<Option<VertexOrder>> {
    check_limit(g.n(), limit)?;
    let mut s = OrderSearch {
        g,
        used: vec![false; g.n()],
        seq: Vec::new(),
        min_left: Vec::new(),
        interval,
    };
    if s.dfs() {
        let ord = VertexOrder { seq: s.seq };
        debug_assert!(if interval {
            verify_i_order(g, &ord).is_none()
        } else {
            verify_mpt_order(g, &ord).is_none()
        });
        Ok(Some(ord))
    } else {
        Ok(None)
    }
}

/// Exhaustive search returning the lexicographically least valid order;
/// None is a proof that no order exists. Vertices are tried in index order
/// at every position, so depth-first success is the lex minimum. Refuses
/// graphs past the small-instance limit.
pub fn brute_force_mpt_order(g: &Graph) -> Result<Option<VertexOrder>> {
    order_search(g, false, limits::ORDER_SEARCH)
}

pub fn brute_force_mpt_order_with_limit(g: &Graph, limit: usize) -> Result<Option<VertexOrder>> {
    order_search(g, false, limit)
}

/// Exhaustive I-order search, the oracle face of interval recognition.
pub fn brute_force_i_order(g: &Graph) -> Result<Option<VertexOrder>> {
    order_search(g, true, limits::ORDER_SEARCH)
}

pub fn brute_force_i_order_with_limit(g: &Graph, limit: usize) -> Result<Option<VertexOrder>> {
    order_search(g, true, limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, net, path};
    use crate::rational::q;

    #[test]
    fn order_must_be_permutation() {
        assert!(VertexOrder::new(vec![0, 2, 2]).is_err());
        assert!(VertexOrder::new(vec![0, 3, 1]).is_err());
        assert!(VertexOrder::new(vec![2, 0, 1]).is_ok());
        assert!(VertexOrder::new(vec![]).is_ok());
    }

    #[test]
    fn position_of_inverts() {
        let ord = VertexOrder::new(vec![2, 0, 3, 1]).unwrap();
        assert_eq!(ord.position_of(), vec![1, 3, 0, 2]);
    }

    #[test]
    fn path_identity_is_valid_both_ways() {
        let g = path(5);
        let ord = VertexOrder::identity(5);
        assert_eq!(verify_mpt_order(&g, &ord), None);
        assert_eq!(verify_i_order(&g, &ord), None);
    }

    #[test]
    fn triple_violation_on_path_ordering() {
        // path 0-1-2 ordered 0, 2, 1: edge 0-1 jumps over non-neighbor 2
        let g = path(3);
        let ord = VertexOrder::new(vec![0, 2, 1]).unwrap();
        let viol = verify_i_order(&g, &ord).unwrap();
        assert_eq!(viol.kind, ViolationKind::Triple);
        assert_eq!(viol.positions, vec![0, 1, 2]);
        assert_eq!(viol.vertices, vec![0, 2, 1]);
        assert_eq!(viol.to_string(), "(0,2,1)");
        // same placement is fine in the coarser order
        assert_eq!(verify_mpt_order(&g, &ord), None);
    }

    #[test]
    fn c4_identity_is_valid() {
        // the lone quadruple would need edges 02 and 13, both absent
        let g = cycle(4).unwrap();
        assert_eq!(verify_mpt_order(&g, &VertexOrder::identity(4)), None);
    }

    #[test]
    fn quadruple_violation_on_crossing_pairs() {
        let g = Graph::new(4, &[(0, 2), (1, 3)]).unwrap();
        let ord = VertexOrder::identity(4);
        let viol = verify_mpt_order(&g, &ord).unwrap();
        assert_eq!(viol.kind, ViolationKind::Quadruple);
        assert_eq!(viol.positions, vec![0, 1, 2, 3]);
        assert_eq!(viol.to_string(), "(0,1,2,3)");
    }

    #[test]
    fn c4_alternating_order_also_valid() {
        let g = cycle(4).unwrap();
        let ord = VertexOrder::new(vec![0, 2, 1, 3]).unwrap();
        assert_eq!(verify_mpt_order(&g, &ord), None);
        assert!(verify_i_order(&g, &ord).is_some());
    }

    #[test]
    fn rep_from_order_round_trip() {
        let g = net();
        let ord = brute_force_mpt_order(&g).unwrap().expect("net has an order");
        let rep = rep_from_order(&g, &ord).unwrap();
        assert_eq!(rep.adjacency(), g);
        assert!(rep.is_canonical());
    }

    #[test]
    fn rep_from_order_rejects_invalid() {
        let g = Graph::new(4, &[(0, 2), (1, 3)]).unwrap();
        match rep_from_order(&g, &VertexOrder::identity(4)) {
            Err(Error::NotMptOrder(v)) => assert_eq!(v.positions, vec![0, 1, 2, 3]),
            other => panic!("expected order rejection, got {other:?}"),
        }
    }

    #[test]
    fn order_from_rep_breaks_point_ties() {
        let rep = MptRepresentation::new(vec![
            PointedInterval::new(q(1), q(2), q(3)).unwrap(),
            PointedInterval::new(q(1), q(2), q(2)).unwrap(),
            PointedInterval::new(q(1), q(1), q(3)).unwrap(),
        ]);
        let ord = order_from_rep(&rep);
        assert_eq!(ord.as_slice(), &[2, 0, 1]);
        assert_eq!(verify_mpt_order(&rep.adjacency(), &ord), None);
    }

    #[test]
    fn two_interval_cuts_out_the_graph() {
        let rep = MptRepresentation::new(vec![
            PointedInterval::new(q(1), q(1), q(3)).unwrap(),
            PointedInterval::new(q(2), q(2), q(2)).unwrap(),
            PointedInterval::new(q(1), q(3), q(3)).unwrap(),
        ]);
        let (ends, starts) = two_interval_decomposition(&rep);
        assert_eq!(ends.adjacency().edges(), &[(0, 1), (0, 2)]);
        assert_eq!(starts.adjacency().edges(), &[(0, 2), (1, 2)]);
        let mut both: Vec<(usize, usize)> = ends
            .adjacency()
            .edges()
            .iter()
            .filter(|e| starts.adjacency().edges().contains(e))
            .copied()
            .collect();
        both.sort();
        assert_eq!(both, rep.adjacency().edges());
    }

    #[test]
    fn search_finds_orders_for_small_members() {
        for g in [path(6), cycle(6).unwrap(), complete(5), net()] {
            let ord = brute_force_mpt_order(&g).unwrap();
            assert!(ord.is_some(), "no order found for {g:?}");
        }
    }

    #[test]
    fn search_refutes_k222() {
        let g = crate::graph::k222();
        assert_eq!(brute_force_mpt_order(&g).unwrap(), None);
    }

    #[test]
    fn i_order_search_matches_class() {
        assert!(brute_force_i_order(&path(6)).unwrap().is_some());
        assert!(brute_force_i_order(&complete(4)).unwrap().is_some());
        assert_eq!(brute_force_i_order(&cycle(4).unwrap()).unwrap(), None);
        assert_eq!(brute_force_i_order(&cycle(5).unwrap()).unwrap(), None);
    }

    #[test]
    fn search_respects_limit() {
        let g = path(13);
        assert!(matches!(
            brute_force_mpt_order(&g),
            Err(Error::OracleLimit { n: 13, limit: 12 })
        ));
        assert!(brute_force_mpt_order_with_limit(&g, 13).unwrap().is_some());
    }
}
