//! Circular arcs and the cut construction that turns a k-coloring question
//! about a circular-arc graph into one about a max point-tolerance graph.

use num_traits::{One, Signed, Zero};

use crate::error::{input_err, Result};
use crate::graph::{complete, Graph};
use crate::lsystem::{distinct_start_intervals, interval_to_anchored_lsystem, LShape, LinearLSystem};
use crate::order::{rep_from_order, VertexOrder};
use crate::rational::{q, q_ratio, Q};
use crate::rep::{IntervalRepresentation, MptRepresentation};

/// Closed arcs on the unit circle, parameterized by [0,1). An arc runs
/// forward from `start` to `end`, passing through 0 when `start > end`.
/// Single points and full circles are not arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularArcRepresentation {
    arcs: Vec<(Q, Q)>,
}

impl CircularArcRepresentation {
    pub fn new(arcs: Vec<(Q, Q)>) -> Result<Self> {
        let in_range = |x: &Q| !x.is_negative() && *x < Q::one();
        for (i, (s, e)) in arcs.iter().enumerate() {
            if !in_range(s) || !in_range(e) {
                return input_err(format!("arc {i} has an endpoint outside [0,1)"));
            }
            if s == e {
                return input_err(format!("arc {i} is a single point"));
            }
        }
        Ok(Self { arcs })
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(Q, Q)] {
        &self.arcs
    }

    /// Whether arc `v` covers the circle point `x`.
    pub fn covers(&self, v: usize, x: &Q) -> bool {
        let (s, e) = &self.arcs[v];
        if s <= e {
            s <= x && x <= e
        } else {
            x >= s || x <= e
        }
    }

    pub fn intersects(&self, u: usize, v: usize) -> bool {
        // Two arcs meet iff one covers the other's start.
        self.covers(u, &self.arcs[v].0) || self.covers(v, &self.arcs[u].0)
    }

    pub fn adjacency(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n() {
            for v in (u + 1)..self.n() {
                if self.intersects(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n(), &edges).expect("pair scan stays in range")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionCase {
    /// No arc covers the cut; the input is an interval graph as it stands.
    Interval,
    /// More than k arcs cover the cut; they pairwise meet there, so more
    /// than k colors are forced and a (k+1)-clique stands in for the input.
    CliqueExceeded,
    /// Between 1 and k arcs cover the cut and each is split in two.
    Split,
}

#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub case: ReductionCase,
    pub g_prime: Graph,
    pub rep: MptRepresentation,
    /// One entry per split arc: (original vertex, front half, back half).
    /// The front half keeps the original vertex id.
    pub split_map: Vec<(usize, usize, usize)>,
    /// The fresh clique, one vertex per color class, empty unless split.
    pub clique_vertices: Vec<usize>,
}

/// Maps a circle point into cut-relative coordinates: the cut goes to 0 and
/// distances are measured forward from it.
fn unroll(x: &Q, cut: &Q) -> Q {
    let d = x - cut;
    if d.is_negative() {
        d + Q::one()
    } else {
        d
    }
}

/// Half the smallest circular distance from the cut to any arc endpoint.
/// Offsetting the cut by less than this crosses no endpoint.
fn half_min_gap(arcs: &CircularArcRepresentation, cut: &Q) -> Q {
    let mut best: Option<Q> = None;
    for (s, e) in arcs.arcs() {
        for x in [s, e] {
            let fwd = unroll(x, cut);
            let d = fwd.clone().min(Q::one() - &fwd);
            if best.as_ref().is_none_or(|b| d < *b) {
                best = Some(d);
            }
        }
    }
    best.expect("some arc endpoint exists") / q(2)
}

/// Restates "is the arc graph k-colorable" as the same question about a max
/// point-tolerance graph `g_prime`, realized by `rep`.
///
/// Arcs covering the cut are split just shy of it on both sides; the halves
/// plus the untouched arcs form an interval graph, and a fresh k-clique wired
/// to the halves forces each pair of halves to share a color. Needs `k >= 3`
/// and a cut in [0,1) that avoids every arc endpoint.
pub fn coloring_hardness_reduction(
    arcs: &CircularArcRepresentation,
    k: usize,
    cut: &Q,
) -> Result<ReductionOutput> {
    if k <= 2 {
        return input_err("reduction needs k >= 3");
    }
    if cut.is_negative() || *cut >= Q::one() {
        return input_err("cut outside [0,1)");
    }
    for (i, (s, e)) in arcs.arcs().iter().enumerate() {
        if s == cut || e == cut {
            return input_err(format!("cut coincides with an endpoint of arc {i}"));
        }
    }

    let n = arcs.n();
    let crossing: Vec<usize> = (0..n).filter(|&v| arcs.covers(v, cut)).collect();
    let l = crossing.len();

    if l == 0 {
        let items: Vec<(Q, Q)> = arcs
            .arcs()
            .iter()
            .map(|(s, e)| (unroll(s, cut), unroll(e, cut)))
            .collect();
        let ir = IntervalRepresentation::new(items).expect("unrolled arcs keep their order");
        let g_prime = ir.adjacency();
        debug_assert_eq!(g_prime, arcs.adjacency());
        let rep = interval_to_anchored_lsystem(&ir).to_rep();
        return Ok(ReductionOutput {
            case: ReductionCase::Interval,
            g_prime,
            rep,
            split_map: Vec::new(),
            clique_vertices: Vec::new(),
        });
    }

    if l > k {
        let g_prime = complete(k + 1);
        let rep = rep_from_order(&g_prime, &VertexOrder::identity(k + 1))
            .expect("complete graphs admit every order");
        return Ok(ReductionOutput {
            case: ReductionCase::CliqueExceeded,
            g_prime,
            rep,
            split_map: Vec::new(),
            clique_vertices: (0..=k).collect(),
        });
    }

    // Split each crossing arc at cut +- eps. In cut-relative coordinates the
    // front half runs from the arc's start up to 1 - eps and the back half
    // from eps to the arc's end; both stay clear of every other endpoint.
    let eps = half_min_gap(arcs, cut);
    let mut rank_of = vec![None; n];
    for (idx, &v) in crossing.iter().enumerate() {
        rank_of[v] = Some(idx + 1);
    }
    let mut items: Vec<(Q, Q)> = Vec::with_capacity(n + l);
    for (v, (start, end)) in arcs.arcs().iter().enumerate() {
        let s = unroll(start, cut);
        if rank_of[v].is_some() {
            items.push((s, Q::one() - &eps));
        } else {
            items.push((s, unroll(end, cut)));
        }
    }
    for &v in &crossing {
        items.push((eps.clone(), unroll(&arcs.arcs()[v].1, cut)));
    }
    let ir = IntervalRepresentation::new(items).expect("split halves keep their order");
    let h = ir.adjacency();

    // Both halves of the arc ranked i get the tolerance line i - k, so they
    // meet exactly the clique vertices u_t with t > i; untouched arcs sit at
    // 0 and meet no clique vertex.
    let scaled = distinct_start_intervals(&ir);
    let top = scaled
        .iter()
        .map(|(_, e)| e.clone())
        .max()
        .expect("split case is nonempty");
    let mut shapes: Vec<LShape> = Vec::with_capacity(n + l + k);
    for (v, (s, e)) in scaled.into_iter().enumerate() {
        let rank = if v < n { rank_of[v] } else { Some(v - n + 1) };
        let t = match rank {
            Some(i) => q(i as i64 - k as i64),
            None => Q::zero(),
        };
        shapes.push(LShape::new(t, s, e).expect("rescaled intervals stay ordered"));
    }
    for t in 1..=k {
        let corner = q(t as i64 - k as i64 - 1);
        shapes.push(
            LShape::new(q(-(k as i64) - 1), corner, top.clone())
                .expect("clique corners sit below the interval band"),
        );
    }
    let sys = LinearLSystem::new(shapes).expect("corners are pairwise distinct");
    let rep = sys.to_rep();

    let mut edges: Vec<(usize, usize)> = h.edges().to_vec();
    for (idx, &v) in crossing.iter().enumerate() {
        let i = idx + 1;
        for t in (i + 1)..=k {
            let u_t = n + l + t - 1;
            edges.push((v, u_t));
            edges.push((n + idx, u_t));
        }
    }
    for a in 0..k {
        for b in (a + 1)..k {
            edges.push((n + l + a, n + l + b));
        }
    }
    let g_prime = Graph::new(n + l + k, &edges).expect("new vertex ids stay in range");
    assert_eq!(rep.adjacency(), g_prime, "shapes realize the constructed graph");

    Ok(ReductionOutput {
        case: ReductionCase::Split,
        g_prime,
        rep,
        split_map: crossing
            .iter()
            .enumerate()
            .map(|(idx, &v)| (v, v, n + idx))
            .collect(),
        clique_vertices: (n + l..n + l + k).collect(),
    })
}

/// Picks a cut that avoids every endpoint: the midpoint of some gap between
/// circularly consecutive distinct endpoints. Prefers a cut covered by 1..=k
/// arcs so the reduction exercises its split case, then one covered by none;
/// if every gap sits under more than k arcs any midpoint does.
pub fn suggest_cut(arcs: &CircularArcRepresentation, k: usize) -> Q {
    let mut points: Vec<Q> = arcs
        .arcs()
        .iter()
        .flat_map(|(s, e)| [s.clone(), e.clone()])
        .collect();
    points.sort();
    points.dedup();
    if points.is_empty() {
        return Q::zero();
    }
    let two = q(2);
    let mut mids: Vec<Q> = points.windows(2).map(|w| (&w[0] + &w[1]) / &two).collect();
    let wrap = (points.last().expect("nonempty") + points.first().expect("nonempty") + Q::one())
        / &two;
    mids.push(if wrap >= Q::one() { wrap - Q::one() } else { wrap });
    let covered = |cut: &Q| (0..arcs.n()).filter(|&v| arcs.covers(v, cut)).count();
    if let Some(m) = mids.iter().find(|m| (1..=k).contains(&covered(m))) {
        return m.clone();
    }
    if let Some(m) = mids.iter().find(|m| covered(m) == 0) {
        return m.clone();
    }
    mids[0].clone()
}

/// Seeded arc instance with 2n distinct endpoints on a grid of 4n circle
/// positions, so every arc is proper and cuts always fall in open gaps.
pub fn random_arcs(n: usize, seed: u64) -> CircularArcRepresentation {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let denom = 4 * n as i64;
    let mut numerators: Vec<i64> = (0..denom).collect();
    numerators.shuffle(&mut rng);
    let arcs = (0..n)
        .map(|i| {
            (
                q_ratio(numerators[2 * i], denom),
                q_ratio(numerators[2 * i + 1], denom),
            )
        })
        .collect();
    CircularArcRepresentation::new(arcs).expect("grid endpoints are distinct and in range")
}
