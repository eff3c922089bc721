//! Exact plane geometry: vertex segments on tangent lines of the parabola
//! y = x^2, and equilateral L contact systems for maximal outerplanar graphs.

use std::collections::{HashMap, HashSet};

use num_traits::Signed;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{input_err, Error, Result};
use crate::graph::Graph;
use crate::lsystem::{LShape, LinearLSystem};
use crate::order::{verify_mpt_order, VertexOrder};
use crate::rational::{q, q_usize, Q};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RationalPoint {
    pub x: Q,
    pub y: Q,
}

impl RationalPoint {
    pub fn new(x: Q, y: Q) -> Self {
        Self { x, y }
    }
}

/// Closed segment. Zero-length inputs fail loudly; intentional points go
/// through `point` and carry a degenerate flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    a: RationalPoint,
    b: RationalPoint,
    degenerate: bool,
}

impl Segment {
    pub fn new(a: RationalPoint, b: RationalPoint) -> Result<Self> {
        if a == b {
            return input_err("zero-length segment; use Segment::point for a point");
        }
        Ok(Self { a, b, degenerate: false })
    }

    pub fn point(p: RationalPoint) -> Self {
        Self { a: p.clone(), b: p, degenerate: true }
    }

    pub fn a(&self) -> &RationalPoint {
        &self.a
    }

    pub fn b(&self) -> &RationalPoint {
        &self.b
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn contains_point(&self, p: &RationalPoint) -> bool {
        orient(&self.a, &self.b, p) == 0 && within_bbox(&self.a, &self.b, p)
    }

    pub fn intersects(&self, other: &Segment) -> bool {
        let (a, b, c, d) = (&self.a, &self.b, &other.a, &other.b);
        let o1 = orient(a, b, c);
        let o2 = orient(a, b, d);
        let o3 = orient(c, d, a);
        let o4 = orient(c, d, b);
        if o1 * o2 < 0 && o3 * o4 < 0 {
            return true;
        }
        (o1 == 0 && within_bbox(a, b, c))
            || (o2 == 0 && within_bbox(a, b, d))
            || (o3 == 0 && within_bbox(c, d, a))
            || (o4 == 0 && within_bbox(c, d, b))
    }
}

/// Sign of the cross product (b - a) x (c - a): counterclockwise positive.
fn orient(a: &RationalPoint, b: &RationalPoint, c: &RationalPoint) -> i8 {
    let cross = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    if cross.is_positive() {
        1
    } else if cross.is_negative() {
        -1
    } else {
        0
    }
}

fn within_bbox(a: &RationalPoint, b: &RationalPoint, p: &RationalPoint) -> bool {
    let inside = |lo: &Q, hi: &Q, v: &Q| {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        lo <= v && v <= hi
    };
    inside(&a.x, &b.x, &p.x) && inside(&a.y, &b.y, &p.y)
}

/// Edge iff the closed segments share at least one point.
pub fn segment_intersection_graph(segs: &[Segment]) -> Graph {
    let mut edges = Vec::new();
    for u in 0..segs.len() {
        for v in (u + 1)..segs.len() {
            if segs[u].intersects(&segs[v]) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(segs.len(), &edges).expect("pair scan stays in range")
}

/// Segments lying on tangent lines of the parabola y = x^2, one per vertex,
/// each covering its point of tangency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSegmentSystem {
    segments: Vec<Segment>,
    tangency_points: Vec<RationalPoint>,
}

impl CyclicSegmentSystem {
    pub fn new(segments: Vec<Segment>, tangency_points: Vec<RationalPoint>) -> Result<Self> {
        if segments.len() != tangency_points.len() {
            return input_err("one tangency point per segment");
        }
        for (i, (seg, tp)) in segments.iter().zip(&tangency_points).enumerate() {
            if tp.y != &tp.x * &tp.x {
                return input_err(format!("tangency point {i} is off the parabola"));
            }
            let on_tangent =
                |p: &RationalPoint| p.y == q(2) * &tp.x * &p.x - &tp.x * &tp.x;
            if !on_tangent(seg.a()) || !on_tangent(seg.b()) {
                return input_err(format!("segment {i} leaves its tangent line"));
            }
            if !seg.contains_point(tp) {
                return input_err(format!("segment {i} misses its tangency point"));
            }
        }
        Ok(Self { segments, tangency_points })
    }

    pub fn n(&self) -> usize {
        self.segments.len()
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn tangency_points(&self) -> &[RationalPoint] {
        &self.tangency_points
    }

    pub fn adjacency(&self) -> Graph {
        segment_intersection_graph(&self.segments)
    }
}

/// Where the tangents of y = x^2 at x = a and x = b meet. For a = b this is
/// the tangency point itself.
pub fn tangent_crossing(a: &Q, b: &Q) -> RationalPoint {
    RationalPoint::new((a + b) / q(2), a * b)
}

/// Realizes g by segments on parabola tangents: the vertex at position i
/// (1-based) gets the tangent at (i, i^2), clipped between the tangents of
/// the extreme positions among its closed neighborhood.
pub fn cyclic_segments_from_order(g: &Graph, ord: &VertexOrder) -> Result<CyclicSegmentSystem> {
    if let Some(viol) = verify_mpt_order(g, ord) {
        return Err(Error::NotMptOrder(viol));
    }
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in ord.as_slice().iter().enumerate() {
        pos[v] = i + 1;
    }
    let mut segments = Vec::with_capacity(n);
    let mut tangency = Vec::with_capacity(n);
    for v in 0..n {
        let here = pos[v];
        let lo = g.neighbors(v).map(|u| pos[u]).chain([here]).min().expect("nonempty");
        let hi = g.neighbors(v).map(|u| pos[u]).chain([here]).max().expect("nonempty");
        let pi = q_usize(here);
        let start = tangent_crossing(&pi, &q_usize(lo));
        let end = tangent_crossing(&pi, &q_usize(hi));
        segments.push(if lo == hi {
            Segment::point(start)
        } else {
            Segment::new(start, end).expect("crossings with distinct tangents differ")
        });
        tangency.push(RationalPoint::new(pi.clone(), &pi * &pi));
    }
    let sys = CyclicSegmentSystem::new(segments, tangency)
        .expect("construction stays on tangent lines");
    debug_assert_eq!(sys.adjacency(), *g);
    Ok(sys)
}

fn pair_key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn not_mop<T>(detail: impl std::fmt::Display) -> Result<T> {
    input_err(format!("not maximal outerplanar: {detail}"))
}

/// Orders the vertices so that each one after the second attaches to exactly
/// two earlier, mutually adjacent vertices whose edge is on the outer face
/// at that moment. Returns the order and the attachment edge per position
/// (first entry belongs to the third vertex).
pub fn outerplanar_order(g: &Graph) -> Result<(VertexOrder, Vec<(usize, usize)>)> {
    let n = g.n();
    if n == 0 {
        return input_err("graph is empty");
    }
    if n == 1 {
        return Ok((VertexOrder::identity(1), Vec::new()));
    }
    if n == 2 {
        if !g.has_edge(0, 1) {
            return not_mop("two vertices need their edge");
        }
        return Ok((VertexOrder::identity(2), Vec::new()));
    }
    if g.edge_count() != 2 * n - 3 {
        return not_mop(format!("expected {} edges, found {}", 2 * n - 3, g.edge_count()));
    }
    if !g.is_connected() {
        return not_mop("graph is disconnected");
    }

    // A boundary edge lies in exactly one triangle; chords lie in two.
    let triangles = |u: usize, v: usize| {
        (0..n).filter(|&w| w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w)).count()
    };
    let (v1, v2) = match g.edges().iter().find(|&&(u, v)| triangles(u, v) == 1) {
        Some(&(u, v)) => (u, v),
        None => return not_mop("no outer face edge"),
    };

    // Peel ears, keeping the chosen base edge for last.
    let mut alive = vec![true; n];
    let mut peeled: Vec<(usize, (usize, usize))> = Vec::new();
    for _ in 0..n - 2 {
        let ear = (0..n).find(|&w| {
            if !alive[w] || w == v1 || w == v2 {
                return false;
            }
            let nbrs: Vec<usize> = g.neighbors(w).filter(|&u| alive[u]).collect();
            nbrs.len() == 2 && g.has_edge(nbrs[0], nbrs[1])
        });
        let w = match ear {
            Some(w) => w,
            None => return not_mop("peeling stuck"),
        };
        let nbrs: Vec<usize> = g.neighbors(w).filter(|&u| alive[u]).collect();
        peeled.push((w, (nbrs[0], nbrs[1])));
        alive[w] = false;
    }

    // Replay forward, consuming one outer-face slot per attachment. Each
    // insertion retires its edge and opens the two new ones, which is what
    // separates maximal outerplanar graphs from other 2-trees.
    let mut seq = vec![v1, v2];
    let mut attachments = Vec::with_capacity(n - 2);
    let mut open: HashSet<(usize, usize)> = HashSet::new();
    open.insert(pair_key(v1, v2));
    for &(w, (u, v)) in peeled.iter().rev() {
        if !open.remove(&pair_key(u, v)) {
            return not_mop(format!("attachment edge ({u}, {v}) is not on the outer face"));
        }
        open.insert(pair_key(u, w));
        open.insert(pair_key(w, v));
        seq.push(w);
        attachments.push((u, v));
    }
    Ok((VertexOrder::new(seq)?, attachments))
}

/// L-system whose pairwise intersections are all single touching points.
#[derive(Clone, Debug)]
pub struct ContactLSystem {
    system: LinearLSystem,
    contacts: Vec<(usize, usize, RationalPoint)>,
}

impl ContactLSystem {
    /// Contact ids must name two distinct shapes; geometric soundness is
    /// `verify_contact`'s job.
    pub fn new(
        system: LinearLSystem,
        contacts: Vec<(usize, usize, RationalPoint)>,
    ) -> Result<Self> {
        for &(u, v, _) in &contacts {
            if u >= system.n() || v >= system.n() {
                return input_err(format!("contact ({u}, {v}) names a missing shape"));
            }
            if u == v {
                return input_err(format!("contact pairs shape {u} with itself"));
            }
        }
        Ok(Self { system, contacts })
    }

    pub fn n(&self) -> usize {
        self.system.n()
    }

    pub fn system(&self) -> &LinearLSystem {
        &self.system
    }

    pub fn shapes(&self) -> &[LShape] {
        self.system.shapes()
    }

    pub fn contacts(&self) -> &[(usize, usize, RationalPoint)] {
        &self.contacts
    }

    pub fn adjacency(&self) -> Graph {
        self.system.adjacency()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactReport {
    /// First pair (by index) that overlaps rather than touches.
    pub crossing: Option<(usize, usize)>,
    pub equilateral: bool,
}

impl ContactReport {
    pub fn is_contact(&self) -> bool {
        self.crossing.is_none()
    }
}

/// Checks that every intersecting pair merely touches: with c_u < c_v,
/// either the lower corner carries the other's vertical (c_u = t_v) or the
/// horizontal arm ends on it (r_u = c_v).
pub fn verify_contact(sys: &LinearLSystem) -> ContactReport {
    let mut crossing = None;
    'pairs: for u in 0..sys.n() {
        for v in (u + 1)..sys.n() {
            if !sys.intersects(u, v) {
                continue;
            }
            let (a, b) = if sys.shape(u).c() < sys.shape(v).c() { (u, v) } else { (v, u) };
            let touches = sys.shape(a).c() == sys.shape(b).t()
                || sys.shape(a).r() == sys.shape(b).c();
            if !touches {
                crossing = Some((u, v));
                break 'pairs;
            }
        }
    }
    let equilateral = sys
        .shapes()
        .iter()
        .all(|s| s.c() - s.t() == s.r() - s.c());
    ContactReport { crossing, equilateral }
}

/// Builds an equilateral contact system for a maximal outerplanar graph.
///
/// The first two vertices get (-1, 0, 1) and (0, 1, 2), touching at (1, 0).
/// Every attachment edge owns an empty semi-square hanging off its contact
/// point; the new shape halves it, touching one host arm at the square's
/// midpoint and ending on the other, and the two half squares pass to the
/// two new outer-face edges.
pub fn contact_lsystem_from_outerplanar(g: &Graph) -> Result<ContactLSystem> {
    let (ord, attachments) = outerplanar_order(g)?;
    let n = g.n();
    let seq = ord.as_slice();
    let mut shapes: Vec<Option<LShape>> = vec![None; n];
    let mut contacts = Vec::new();
    let mut squares: HashMap<(usize, usize), (Q, Q)> = HashMap::new();
    shapes[seq[0]] = Some(LShape::new(q(-1), q(0), q(1)).expect("ordered"));
    if n >= 2 {
        shapes[seq[1]] = Some(LShape::new(q(0), q(1), q(2)).expect("ordered"));
        contacts.push((seq[0], seq[1], RationalPoint::new(q(1), q(0))));
        squares.insert(pair_key(seq[0], seq[1]), (q(0), q(1)));
    }
    for (j, &(u, v)) in attachments.iter().enumerate() {
        let w = seq[j + 2];
        let (x, d) = squares
            .remove(&pair_key(u, v))
            .expect("order replay reserves a square per attachment");
        // The host whose corner sits at the square's left end owns its top
        // side; the other one's vertical arm is its right side.
        let u_corner = shapes[u].as_ref().expect("hosts precede w").c().clone();
        let (a, b) = if u_corner == x { (u, v) } else { (v, u) };
        debug_assert_eq!(*shapes[a].as_ref().expect("placed").c(), x);
        debug_assert_eq!(*shapes[b].as_ref().expect("placed").c(), &x + &d);
        let half = &d / q(2);
        let mid = &x + &half;
        let right = &x + &d;
        shapes[w] = Some(LShape::new(x.clone(), mid.clone(), right.clone()).expect("ordered"));
        contacts.push((a, w, RationalPoint::new(mid.clone(), -x.clone())));
        contacts.push((w, b, RationalPoint::new(right.clone(), -mid.clone())));
        squares.insert(pair_key(a, w), (x, half.clone()));
        squares.insert(pair_key(w, b), (mid, half));
    }
    let shapes: Vec<LShape> =
        shapes.into_iter().map(|s| s.expect("every vertex was placed")).collect();
    let system = LinearLSystem::new(shapes).expect("square midpoints never collide");
    assert_eq!(system.adjacency(), *g, "contact shapes realize the graph");
    ContactLSystem::new(system, contacts)
}

/// Keeps only the edges of `g`, erasing each unwanted contact by retracting
/// the arm that ends at it by a quarter of the arm's length. Every other
/// contact on the same arm sits at least half an arm from its end, so
/// nothing else moves.
pub fn retract_to_subgraph(sys: &ContactLSystem, g: &Graph) -> Result<ContactLSystem> {
    if g.n() != sys.n() {
        return input_err("vertex counts differ");
    }
    let full = sys.adjacency();
    for &(u, v) in g.edges() {
        if !full.has_edge(u, v) {
            return input_err(format!("edge ({u}, {v}) is not realized by the contact system"));
        }
    }
    let mut params: Vec<(Q, Q, Q)> = sys
        .shapes()
        .iter()
        .map(|s| (s.t().clone(), s.c().clone(), s.r().clone()))
        .collect();
    let mut kept = Vec::new();
    for (u, v, p) in sys.contacts() {
        if g.has_edge(*u, *v) {
            kept.push((*u, *v, p.clone()));
            continue;
        }
        let (a, b) = if params[*u].1 < params[*v].1 { (*u, *v) } else { (*v, *u) };
        if params[a].2 == params[b].1 {
            let len = &params[a].2 - &params[a].1;
            params[a].2 = &params[b].1 - len / q(4);
        } else {
            debug_assert_eq!(params[b].0, params[a].1);
            let len = &params[b].1 - &params[b].0;
            params[b].0 = &params[a].1 + len / q(4);
        }
    }
    let shapes = params
        .into_iter()
        .map(|(t, c, r)| LShape::new(t, c, r).expect("retraction keeps arms nonnegative"))
        .collect();
    let system = LinearLSystem::new(shapes).expect("corners are untouched");
    assert_eq!(system.adjacency(), *g, "retraction realizes exactly the subgraph");
    ContactLSystem::new(system, kept)
}

/// Grows a random maximal outerplanar graph: each new vertex attaches to a
/// uniformly chosen open outer-face edge. Needs n >= 2.
pub fn random_maximal_outerplanar(n: usize, seed: u64) -> Graph {
    assert!(n >= 2, "need at least an edge");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = vec![(0usize, 1usize)];
    let mut open = vec![(0usize, 1usize)];
    for w in 2..n {
        let slot = rng.random_range(0..open.len());
        let (u, v) = open.swap_remove(slot);
        edges.push((u, w));
        edges.push((v, w));
        open.push((u, w));
        open.push((v, w));
    }
    Graph::new(n, &edges).expect("every vertex attaches to older ones")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, net, path};
    use crate::order::brute_force_mpt_order;
    use crate::rational::q_ratio;
    use crate::rep::random_mpt_rep;
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn pt(x: i64, y: i64) -> RationalPoint {
        RationalPoint::new(q(x), q(y))
    }

    fn seg(ax: i64, ay: i64, bx: i64, by: i64) -> Segment {
        Segment::new(pt(ax, ay), pt(bx, by)).unwrap()
    }

    #[test]
    fn segment_predicate_cases() {
        // proper crossing
        assert!(seg(0, 0, 2, 2).intersects(&seg(0, 2, 2, 0)));
        // shared endpoint only
        assert!(seg(0, 0, 1, 1).intersects(&seg(1, 1, 2, 0)));
        // parallel disjoint
        assert!(!seg(0, 0, 2, 0).intersects(&seg(0, 1, 2, 1)));
        // collinear overlap and collinear disjoint
        assert!(seg(0, 0, 2, 0).intersects(&seg(1, 0, 3, 0)));
        assert!(!seg(0, 0, 1, 0).intersects(&seg(2, 0, 3, 0)));
        // T-junction
        assert!(seg(0, -1, 0, 1).intersects(&seg(0, 0, 5, 0)));
        // far apart
        assert!(!seg(0, 0, 1, 1).intersects(&seg(3, 3, 4, 5)));
    }

    #[test]
    fn degenerate_segments() {
        assert!(Segment::new(pt(1, 1), pt(1, 1)).is_err());
        let p = Segment::point(pt(1, 0));
        assert!(p.is_degenerate());
        assert!(p.intersects(&seg(0, 0, 2, 0)));
        assert!(!p.intersects(&seg(0, 1, 2, 1)));
        assert!(p.intersects(&Segment::point(pt(1, 0))));
        assert!(!p.intersects(&Segment::point(pt(2, 0))));
    }

    #[test]
    fn tangent_crossings_are_exact() {
        assert_eq!(tangent_crossing(&q(1), &q(2)), RationalPoint::new(q_ratio(3, 2), q(2)));
        for a in 1..=100i64 {
            for b in (a + 1)..=100i64 {
                let p = tangent_crossing(&q(a), &q(b));
                assert_eq!(p.x, q_ratio(a + b, 2));
                assert_eq!(p.y, q(a * b));
                for t in [a, b] {
                    assert_eq!(p.y, q(2 * t) * &p.x - q(t * t));
                }
            }
        }
    }

    #[test]
    fn isolated_vertex_gets_the_tangency_point() {
        let g = Graph::empty(3);
        let sys = cyclic_segments_from_order(&g, &VertexOrder::identity(3)).unwrap();
        for (i, s) in sys.segments().iter().enumerate() {
            let x = (i + 1) as i64;
            assert!(s.is_degenerate());
            assert_eq!(*s.a(), pt(x, x * x));
        }
        assert_eq!(sys.adjacency(), g);
    }

    #[test]
    fn net_segments_realize_the_net() {
        let g = net();
        let ord = brute_force_mpt_order(&g).unwrap().unwrap();
        let sys = cyclic_segments_from_order(&g, &ord).unwrap();
        assert_eq!(sys.n(), 6);
        assert_eq!(sys.adjacency(), g);
    }

    #[test]
    fn rejects_orders_that_fail_verification() {
        let g = Graph::new(4, &[(0, 2), (1, 3)]).unwrap();
        let err = cyclic_segments_from_order(&g, &VertexOrder::identity(4)).unwrap_err();
        assert!(matches!(err, Error::NotMptOrder(_)));
    }

    #[test]
    fn segment_system_validation() {
        let bad_tangency =
            CyclicSegmentSystem::new(vec![Segment::point(pt(1, 2))], vec![pt(1, 2)]);
        assert!(bad_tangency.is_err());
        let off_line = CyclicSegmentSystem::new(
            vec![seg(0, 0, 2, 2)],
            vec![pt(1, 1)],
        );
        assert!(off_line.is_err());
        let ok = CyclicSegmentSystem::new(vec![Segment::point(pt(1, 1))], vec![pt(1, 1)]);
        assert!(ok.is_ok());
    }

    #[test]
    fn random_reps_round_trip_through_segments() {
        for seed in 0..500u64 {
            let n = 3 + (seed as usize) % 38;
            let rep = random_mpt_rep(n, seed);
            let g = rep.adjacency();
            let ord = crate::order::order_from_rep(&rep);
            let sys = cyclic_segments_from_order(&g, &ord).unwrap();
            assert_eq!(sys.adjacency(), g, "seed {seed}");
        }
    }

    #[test]
    fn all_small_graphs_round_trip_through_segments() {
        for n in 1..=6usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
            let mut checked = 0usize;
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(n, &edges).unwrap();
                if let Some(ord) = brute_force_mpt_order(&g).unwrap() {
                    let sys = cyclic_segments_from_order(&g, &ord).unwrap();
                    assert_eq!(sys.adjacency(), g, "n {n} mask {mask}");
                    checked += 1;
                }
            }
            assert!(checked > 0);
        }
    }

    #[test]
    fn outerplanar_order_on_small_cases() {
        let (ord, att) = outerplanar_order(&complete(3)).unwrap();
        assert_eq!(ord.as_slice(), &[0, 1, 2]);
        assert_eq!(att, vec![(0, 1)]);

        // fan: a path plus an apex adjacent to all of it
        let fan = Graph::new(
            5,
            &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)],
        )
        .unwrap();
        let (ord, att) = outerplanar_order(&fan).unwrap();
        assert_eq!(ord.n(), 5);
        assert_eq!(att.len(), 3);

        let diamond = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(outerplanar_order(&diamond).is_ok());
    }

    #[test]
    fn outerplanar_order_rejects_non_instances() {
        let is_mop_err = |g: &Graph| {
            matches!(outerplanar_order(g), Err(Error::Input(m)) if m.contains("not maximal outerplanar"))
        };
        assert!(is_mop_err(&complete(4)));
        assert!(is_mop_err(&cycle(4).unwrap()));
        assert!(is_mop_err(&path(4)));

        // three triangles sharing an edge: a 2-tree with the right edge
        // count that no disc embedding accommodates
        let book = Graph::new(
            5,
            &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)],
        )
        .unwrap();
        assert!(is_mop_err(&book));

        // right edge count, two components
        let k5_plus_edge = Graph::new(
            7,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 4),
                (5, 6),
            ],
        )
        .unwrap();
        assert!(is_mop_err(&k5_plus_edge));
    }

    #[test]
    fn contact_base_cases() {
        let two = contact_lsystem_from_outerplanar(&complete(2)).unwrap();
        let params: Vec<(Q, Q, Q)> = two
            .shapes()
            .iter()
            .map(|s| (s.t().clone(), s.c().clone(), s.r().clone()))
            .collect();
        assert_eq!(params, vec![(q(-1), q(0), q(1)), (q(0), q(1), q(2))]);
        assert_eq!(two.contacts(), &[(0, 1, pt(1, 0))]);

        let tri = contact_lsystem_from_outerplanar(&complete(3)).unwrap();
        let third = tri.shapes()[2].clone();
        assert_eq!(
            (third.t().clone(), third.c().clone(), third.r().clone()),
            (q(0), q_ratio(1, 2), q(1))
        );
        assert_eq!(
            tri.contacts(),
            &[
                (0, 1, pt(1, 0)),
                (0, 2, RationalPoint::new(q_ratio(1, 2), q(0))),
                (2, 1, RationalPoint::new(q(1), q_ratio(-1, 2))),
            ]
        );
        assert_eq!(tri.adjacency(), complete(3));
    }

    fn is_power_of_two(v: &BigInt) -> bool {
        !v.is_zero() && (v & &(v - 1i32)).is_zero()
    }

    #[test]
    fn contact_systems_for_random_maximal_outerplanar() {
        for (seed, n) in [(1u64, 5usize), (2, 23), (3, 50), (4, 100)] {
            let g = random_maximal_outerplanar(n, seed);
            assert_eq!(g.edge_count(), 2 * n - 3);
            let sys = contact_lsystem_from_outerplanar(&g).unwrap();
            assert_eq!(sys.adjacency(), g, "n {n}");
            let report = verify_contact(sys.system());
            assert_eq!(report, ContactReport { crossing: None, equilateral: true });
            assert_eq!(sys.contacts().len(), g.edge_count());
            for (u, v, p) in sys.contacts() {
                let is_endpoint = |w: usize| {
                    let s = &sys.shapes()[w];
                    let top = RationalPoint::new(s.c().clone(), -s.t().clone());
                    let right = RationalPoint::new(s.r().clone(), -s.c().clone());
                    *p == top || *p == right
                };
                assert!(is_endpoint(*u) || is_endpoint(*v));
                assert!(g.has_edge(*u, *v));
            }
            for s in sys.shapes() {
                for value in [s.t(), s.c(), s.r()] {
                    assert!(is_power_of_two(value.denom()));
                }
            }
        }
    }

    #[test]
    fn figure_net_system_properly_crosses() {
        let shapes = [
            (2, 10, 28),
            (0, 18, 53),
            (20, 26, 38),
            (15, 34, 56),
            (36, 42, 54),
            (12, 50, 58),
        ]
        .iter()
        .map(|&(t, c, r)| LShape::new(q(t), q(c), q(r)).unwrap())
        .collect();
        let sys = LinearLSystem::new(shapes).unwrap();
        assert_eq!(sys.adjacency(), net());
        let report = verify_contact(&sys);
        assert_eq!(report.crossing, Some((0, 1)));
        assert!(!report.equilateral);
    }

    #[test]
    fn verify_contact_trivia() {
        let single =
            LinearLSystem::new(vec![LShape::new(q(0), q(1), q(3)).unwrap()]).unwrap();
        assert_eq!(
            verify_contact(&single),
            ContactReport { crossing: None, equilateral: false }
        );
        let square =
            LinearLSystem::new(vec![LShape::new(q(0), q(1), q(2)).unwrap()]).unwrap();
        assert!(verify_contact(&square).equilateral);
        let empty = LinearLSystem::new(Vec::new()).unwrap();
        assert!(verify_contact(&empty).is_contact());
    }

    fn boundary_cycle(g: &Graph) -> Graph {
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| {
                (0..g.n())
                    .filter(|&w| w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w))
                    .count()
                    == 1
            })
            .collect();
        Graph::new(g.n(), &edges).unwrap()
    }

    #[test]
    fn retraction_realizes_subgraphs() {
        let g = random_maximal_outerplanar(20, 7);
        let sys = contact_lsystem_from_outerplanar(&g).unwrap();

        let cycle_part = boundary_cycle(&g);
        assert_eq!(cycle_part.edge_count(), 20);
        let retracted = retract_to_subgraph(&sys, &cycle_part).unwrap();
        assert_eq!(retracted.adjacency(), cycle_part);
        assert!(verify_contact(retracted.system()).is_contact());
        assert_eq!(retracted.contacts().len(), 20);

        let bare = retract_to_subgraph(&sys, &Graph::empty(20)).unwrap();
        assert_eq!(bare.adjacency(), Graph::empty(20));
        assert!(bare.contacts().is_empty());

        let too_big = complete(20);
        assert!(retract_to_subgraph(&sys, &too_big).is_err());
    }

    #[test]
    fn random_maximal_outerplanar_is_deterministic() {
        let a = random_maximal_outerplanar(30, 11);
        let b = random_maximal_outerplanar(30, 11);
        assert_eq!(a, b);
        assert!(outerplanar_order(&a).is_ok());
        assert!(a.is_connected());
    }
}
