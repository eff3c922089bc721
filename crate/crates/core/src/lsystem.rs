//! Linear L-systems. Shape (t, c, r) with t <= c <= r draws a vertical leg
//! from (c, -t) down to the corner (c, -c) on the line y = -x, then a
//! horizontal leg out to (r, -c). Corners must be pairwise distinct. Two
//! shapes meet iff, taking c_u < c_v, both r_u >= c_v and t_v <= c_u hold:
//! only the earlier horizontal leg can reach the later vertical leg.
//!
//! Identifying (t, c, r) with (s, p, e) makes these systems an exact
//! geometric face of pointed-interval representations.

use num_traits::{Signed, Zero};

use crate::error::{input_err, Result};
use crate::graph::Graph;
use crate::rep::{IntervalRepresentation, MptRepresentation, PointedInterval};
use crate::rational::{q_usize, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LShape {
    t: Q,
    c: Q,
    r: Q,
}

impl LShape {
    pub fn new(t: Q, c: Q, r: Q) -> Result<Self> {
        if t > c || c > r {
            return input_err(format!("L-shape needs t <= c <= r, got ({t}, {c}, {r})"));
        }
        Ok(LShape { t, c, r })
    }

    pub fn t(&self) -> &Q {
        &self.t
    }

    pub fn c(&self) -> &Q {
        &self.c
    }

    pub fn r(&self) -> &Q {
        &self.r
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearLSystem {
    shapes: Vec<LShape>,
}

impl LinearLSystem {
    pub fn new(shapes: Vec<LShape>) -> Result<Self> {
        let mut corners: Vec<&Q> = shapes.iter().map(LShape::c).collect();
        corners.sort();
        if corners.windows(2).any(|w| w[0] == w[1]) {
            return input_err("L-system corners must be pairwise distinct");
        }
        Ok(LinearLSystem { shapes })
    }

    pub fn n(&self) -> usize {
        self.shapes.len()
    }

    pub fn shapes(&self) -> &[LShape] {
        &self.shapes
    }

    pub fn shape(&self, v: usize) -> &LShape {
        &self.shapes[v]
    }

    pub fn intersects(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.shapes[u].c < self.shapes[v].c {
            (&self.shapes[u], &self.shapes[v])
        } else {
            (&self.shapes[v], &self.shapes[u])
        };
        a.r >= b.c && b.t <= a.c
    }

    pub fn adjacency(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.intersects(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).expect("pair scan emits valid edges")
    }

    /// A system is anchored when the horizontal line y = -max(t) stabs
    /// every vertical leg; that holds iff max(t) <= min(c), and anchored
    /// systems represent exactly the interval graphs. Returns the anchor
    /// height max(t) when it exists.
    pub fn anchor(&self) -> Option<Q> {
        let max_t = self.shapes.iter().map(LShape::t).max()?;
        let min_c = self.shapes.iter().map(LShape::c).min()?;
        (max_t <= min_c).then(|| max_t.clone())
    }

    /// Reads the shape parameters back as a pointed-interval triple.
    pub fn to_rep(&self) -> MptRepresentation {
        MptRepresentation::new(
            self.shapes
                .iter()
                .map(|sh| {
                    PointedInterval::new(sh.t.clone(), sh.c.clone(), sh.r.clone())
                        .expect("shape ordering matches interval ordering")
                })
                .collect(),
        )
    }
}

/// Writes a representation as an L-system via the identity (s, p, e) ->
/// (t, c, r). Points must be pairwise distinct (canonical representations
/// qualify); colliding points would collide corners.
pub fn rep_to_lsystem(rep: &MptRepresentation) -> Result<LinearLSystem> {
    let shapes = rep
        .items()
        .iter()
        .map(|it| {
            LShape::new(it.s().clone(), it.p().clone(), it.e().clone())
                .expect("interval ordering matches shape ordering")
        })
        .collect();
    LinearLSystem::new(shapes).map_err(|_| {
        crate::error::Error::Input(
            "representation has tied points; normalize before converting".into(),
        )
    })
}

/// Rescales intervals to integer coordinates with pairwise distinct starts
/// while preserving the intersection graph. Values map to (rank + 1)(n + 1),
/// leaving n empty integer slots below each start; tied starts then step
/// down into those slots one by one, which can only extend intervals over
/// ground where no other endpoint lives.
pub(crate) fn distinct_start_intervals(ir: &IntervalRepresentation) -> Vec<(Q, Q)> {
    let n = ir.n();
    let mut values: Vec<&Q> = ir.items().iter().flat_map(|(s, e)| [s, e]).collect();
    values.sort();
    values.dedup();
    let rank = |x: &Q| values.binary_search(&x).expect("endpoint was collected");
    let scale = |x: &Q| q_usize((rank(x) + 1) * (n + 1));
    let mut out: Vec<(Q, Q)> = ir
        .items()
        .iter()
        .map(|(s, e)| (scale(s), scale(e)))
        .collect();
    let starts: Vec<Q> = out.iter().map(|(s, _)| s.clone()).collect();
    let mut by_start: Vec<usize> = (0..n).collect();
    by_start.sort_by(|&a, &b| starts[a].cmp(&starts[b]).then(a.cmp(&b)));
    let mut offset = 0usize;
    for (k, &i) in by_start.iter().enumerate() {
        if k > 0 && starts[by_start[k - 1]] == starts[i] {
            offset += 1;
        } else {
            offset = 0;
        }
        out[i].0 = &starts[i] - q_usize(offset);
    }
    out
}

/// Builds an anchored L-system (all t = 0) with the same intersection graph
/// as the given intervals.
pub fn interval_to_anchored_lsystem(ir: &IntervalRepresentation) -> LinearLSystem {
    let shapes = distinct_start_intervals(ir)
        .into_iter()
        .map(|(s, e)| LShape::new(Q::zero(), s, e).expect("rescaled starts are positive"))
        .collect();
    let sys = LinearLSystem::new(shapes).expect("rescaled starts are pairwise distinct");
    debug_assert_eq!(sys.adjacency(), ir.adjacency());
    debug_assert!(sys.anchor().is_some());
    sys
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RayDirection {
    Down,
    Left,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    pub dir: RayDirection,
    pub x: Q,
    pub y: Q,
}

/// Rays opening down or left from their origins. Two down-rays with equal x
/// would overlap, likewise two left-rays with equal y, so those collisions
/// are rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaySystem {
    rays: Vec<Ray>,
}

impl RaySystem {
    pub fn new(rays: Vec<Ray>) -> Result<Self> {
        let mut down_x: Vec<&Q> = rays
            .iter()
            .filter(|r| r.dir == RayDirection::Down)
            .map(|r| &r.x)
            .collect();
        down_x.sort();
        if down_x.windows(2).any(|w| w[0] == w[1]) {
            return input_err("down-rays must have pairwise distinct x");
        }
        let mut left_y: Vec<&Q> = rays
            .iter()
            .filter(|r| r.dir == RayDirection::Left)
            .map(|r| &r.y)
            .collect();
        left_y.sort();
        if left_y.windows(2).any(|w| w[0] == w[1]) {
            return input_err("left-rays must have pairwise distinct y");
        }
        Ok(RaySystem { rays })
    }

    pub fn n(&self) -> usize {
        self.rays.len()
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn crosses(&self, u: usize, v: usize) -> bool {
        let (down, left) = match (&self.rays[u], &self.rays[v]) {
            (d, l) if d.dir == RayDirection::Down && l.dir == RayDirection::Left => (d, l),
            (l, d) if d.dir == RayDirection::Down && l.dir == RayDirection::Left => (d, l),
            _ => return false,
        };
        down.x <= left.x && left.y <= down.y
    }

    pub fn adjacency(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.crosses(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).expect("pair scan emits valid edges")
    }
}

/// Truncates every ray at the line y = -x - C and folds the picture into an
/// L-system with the same crossings. Any C exceeding twice the largest
/// origin coordinate keeps all crossing points strictly above the cut: a
/// crossing at (x_d, y_l) needs x_d + y_l + C > 0.
pub fn rays_to_lsystem(rs: &RaySystem) -> LinearLSystem {
    let big = rs
        .rays()
        .iter()
        .flat_map(|r| [r.x.abs(), r.y.abs()])
        .max()
        .unwrap_or_else(Q::zero);
    let c_shift = Q::from_integer(1.into()) + q_usize(2) * big;
    let shapes = rs
        .rays()
        .iter()
        .map(|r| {
            let y = &r.y + &c_shift;
            match r.dir {
                RayDirection::Down => LShape::new(-y, r.x.clone(), r.x.clone()),
                RayDirection::Left => LShape::new(-y.clone(), -y, r.x.clone()),
            }
            .expect("shift keeps x + y positive")
        })
        .collect();
    let sys = LinearLSystem::new(shapes).expect("origin constraints keep corners distinct");
    debug_assert_eq!(sys.adjacency(), rs.adjacency());
    sys
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle};
    use crate::order::{rep_from_order, VertexOrder};
    use crate::rep::{random_interval_rep, random_mpt_rep};
    use crate::rational::q;

    fn ray(dir: RayDirection, x: i64, y: i64) -> Ray {
        Ray {
            dir,
            x: q(x),
            y: q(y),
        }
    }

    #[test]
    fn shape_ordering_enforced() {
        assert!(LShape::new(q(1), q(0), q(2)).is_err());
        assert!(LShape::new(q(0), q(3), q(2)).is_err());
        assert!(LShape::new(q(1), q(1), q(1)).is_ok());
    }

    #[test]
    fn corners_must_differ() {
        let a = LShape::new(q(0), q(1), q(2)).unwrap();
        let b = LShape::new(q(1), q(1), q(3)).unwrap();
        assert!(LinearLSystem::new(vec![a, b]).is_err());
    }

    #[test]
    fn rep_identity_preserves_adjacency() {
        for seed in 0..5 {
            let rep = random_mpt_rep(30, seed);
            let sys = rep_to_lsystem(&rep).unwrap();
            assert_eq!(sys.adjacency(), rep.adjacency());
            assert_eq!(sys.to_rep(), rep);
        }
    }

    #[test]
    fn tied_points_rejected() {
        let rep = MptRepresentation::new(vec![
            PointedInterval::new(q(1), q(2), q(3)).unwrap(),
            PointedInterval::new(q(2), q(2), q(2)).unwrap(),
        ]);
        assert!(rep_to_lsystem(&rep).is_err());
        assert!(rep_to_lsystem(&rep.normalize()).is_ok());
    }

    #[test]
    fn anchored_systems_from_intervals() {
        for seed in 0..5 {
            let ir = random_interval_rep(25, seed);
            let sys = interval_to_anchored_lsystem(&ir);
            assert_eq!(sys.adjacency(), ir.adjacency());
            assert!(sys.anchor().is_some());
        }
    }

    #[test]
    fn tied_and_touching_intervals_survive_rescaling() {
        let ir = IntervalRepresentation::new(vec![
            (q(1), q(1)),
            (q(1), q(2)),
            (q(1), q(2)),
            (q(2), q(3)),
            (q(4), q(5)),
        ])
        .unwrap();
        let sys = interval_to_anchored_lsystem(&ir);
        assert_eq!(sys.adjacency(), ir.adjacency());
    }

    #[test]
    fn c4_system_has_no_anchor() {
        let g = cycle(4).unwrap();
        let ord = VertexOrder::new(vec![0, 2, 1, 3]).unwrap();
        let rep = rep_from_order(&g, &ord).unwrap();
        let sys = rep_to_lsystem(&rep).unwrap();
        assert_eq!(sys.adjacency(), g);
        assert_eq!(sys.anchor(), None);
    }

    #[test]
    fn ray_collision_rules() {
        let two_down = vec![ray(RayDirection::Down, 1, 0), ray(RayDirection::Down, 1, 5)];
        assert!(RaySystem::new(two_down).is_err());
        let two_left = vec![ray(RayDirection::Left, 0, 2), ray(RayDirection::Left, 9, 2)];
        assert!(RaySystem::new(two_left).is_err());
    }

    #[test]
    fn crossing_rule() {
        let rs = RaySystem::new(vec![
            ray(RayDirection::Down, 0, 0),
            ray(RayDirection::Left, 2, -1),
            ray(RayDirection::Left, -1, -2),
            ray(RayDirection::Down, 5, 1),
        ])
        .unwrap();
        // down (0,0) meets left (2,-1): 0 <= 2 and -1 <= 0
        assert!(rs.crosses(0, 1));
        assert!(rs.crosses(1, 0));
        // down (0,0) misses left (-1,-2): -1 < 0
        assert!(!rs.crosses(0, 2));
        // down (5,1) misses left (2,-1): 2 < 5
        assert!(!rs.crosses(3, 1));
        assert!(!rs.crosses(3, 2));
        assert!(!rs.crosses(0, 3));
        assert_eq!(rs.adjacency().edges(), &[(0, 1)]);
    }

    #[test]
    fn alternating_rays_give_complete_bipartite() {
        let rs = RaySystem::new(vec![
            ray(RayDirection::Down, 0, 5),
            ray(RayDirection::Down, 1, 6),
            ray(RayDirection::Left, 2, 0),
            ray(RayDirection::Left, 3, 1),
        ])
        .unwrap();
        let g = rs.adjacency();
        let expected = complete_bipartite(2, 2);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g, expected);
        let sys = rays_to_lsystem(&rs);
        assert_eq!(sys.adjacency(), g);
    }

    #[test]
    fn truncation_handles_negative_origins() {
        let rs = RaySystem::new(vec![
            ray(RayDirection::Down, -7, -7),
            ray(RayDirection::Left, -7, -7),
            ray(RayDirection::Left, -6, 4),
        ])
        .unwrap();
        assert_eq!(rs.adjacency().edges(), &[(0, 1)]);
        let sys = rays_to_lsystem(&rs);
        assert_eq!(sys.adjacency(), rs.adjacency());
    }

    #[test]
    fn ray_systems_round_trip_through_shapes_on_random_inputs() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let mut rays = Vec::new();
            for i in 0..12 {
                let x = q(rng.random_range(-40..=40i64));
                let y = q(rng.random_range(-40..=40i64));
                // keep coordinates collision free per direction
                if i % 2 == 0 {
                    rays.push(Ray {
                        dir: RayDirection::Down,
                        x: x * q(83) + q(i),
                        y,
                    });
                } else {
                    rays.push(Ray {
                        dir: RayDirection::Left,
                        x,
                        y: y * q(83) + q(i),
                    });
                }
            }
            let rs = RaySystem::new(rays).unwrap();
            assert_eq!(rays_to_lsystem(&rs).adjacency(), rs.adjacency());
        }
    }
}
