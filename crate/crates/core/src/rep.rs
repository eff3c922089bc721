//! Pointed-interval representations. A vertex is an interval `[s, e]`
//! carrying a point `p` with `s <= p <= e`; two vertices are adjacent
//! exactly when each interval contains the other's point. Interval
//! representations (no points) live here too, since several constructions
//! pass through them.

use num_traits::ToPrimitive;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{input_err, Result};
use crate::graph::Graph;
use crate::order::{order_from_rep, rep_from_order};
use crate::rational::{q_usize, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedInterval {
    s: Q,
    p: Q,
    e: Q,
}

impl PointedInterval {
    pub fn new(s: Q, p: Q, e: Q) -> Result<Self> {
        if s > p || p > e {
            return input_err(format!(
                "pointed interval needs s <= p <= e, got ({s}, {p}, {e})"
            ));
        }
        Ok(PointedInterval { s, p, e })
    }

    pub fn s(&self) -> &Q {
        &self.s
    }

    pub fn p(&self) -> &Q {
        &self.p
    }

    pub fn e(&self) -> &Q {
        &self.e
    }

    pub fn contains(&self, x: &Q) -> bool {
        &self.s <= x && x <= &self.e
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MptRepresentation {
    items: Vec<PointedInterval>,
}

impl MptRepresentation {
    pub fn new(items: Vec<PointedInterval>) -> Self {
        MptRepresentation { items }
    }

    pub fn n(&self) -> usize {
        self.items.len()
    }

    pub fn items(&self) -> &[PointedInterval] {
        &self.items
    }

    pub fn item(&self, v: usize) -> &PointedInterval {
        &self.items[v]
    }

    /// The represented graph: `u ~ v` iff each interval contains the
    /// other's point. Closed intervals, so touching counts.
    pub fn adjacency(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let (a, b) = (&self.items[u], &self.items[v]);
                if a.contains(b.p()) && b.contains(a.p()) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).expect("pair scan emits valid edges")
    }

    /// Canonical means: the points are exactly {1, .., n} and every s, e is
    /// an integer in [1, n]. The optimization solvers require this shape.
    pub fn is_canonical(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        for it in &self.items {
            for v in [it.s(), it.e()] {
                if !v.is_integer() {
                    return false;
                }
                match v.to_integer().to_usize() {
                    Some(k) if (1..=n).contains(&k) => {}
                    _ => return false,
                }
            }
            if !it.p().is_integer() {
                return false;
            }
            match it.p().to_integer().to_usize() {
                Some(k) if (1..=n).contains(&k) && !seen[k - 1] => seen[k - 1] = true,
                _ => return false,
            }
        }
        true
    }

    /// Rebuilds the representation in canonical form with the same
    /// adjacency. Already-canonical inputs come back unchanged, which makes
    /// the operation idempotent.
    pub fn normalize(&self) -> MptRepresentation {
        if self.is_canonical() {
            return self.clone();
        }
        let ord = order_from_rep(self);
        rep_from_order(&self.adjacency(), &ord)
            .expect("the point order of a representation is always valid")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRepresentation {
    items: Vec<(Q, Q)>,
}

impl IntervalRepresentation {
    pub fn new(items: Vec<(Q, Q)>) -> Result<Self> {
        for (s, e) in &items {
            if s > e {
                return input_err(format!("interval needs s <= e, got ({s}, {e})"));
            }
        }
        Ok(IntervalRepresentation { items })
    }

    pub fn n(&self) -> usize {
        self.items.len()
    }

    pub fn items(&self) -> &[(Q, Q)] {
        &self.items
    }

    /// Closed-interval intersection graph.
    pub fn adjacency(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let (su, eu) = &self.items[u];
                let (sv, ev) = &self.items[v];
                if su <= ev && sv <= eu {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).expect("pair scan emits valid edges")
    }
}

/// Seeded random canonical representation: vertex i (1-based) gets point i,
/// a start uniform in [1, i] and an end uniform in [i, n]. Identical
/// (n, seed) pairs give identical output on every platform.
pub fn random_mpt_rep(n: usize, seed: u64) -> MptRepresentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut items = Vec::with_capacity(n);
    for i in 1..=n {
        let s = rng.random_range(1..=i);
        let e = rng.random_range(i..=n);
        items.push(
            PointedInterval::new(q_usize(s), q_usize(i), q_usize(e))
                .expect("sampled bounds are ordered"),
        );
    }
    MptRepresentation::new(items)
}

/// Interval variant of `random_mpt_rep`: same endpoint distribution, no
/// points.
pub fn random_interval_rep(n: usize, seed: u64) -> IntervalRepresentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut items = Vec::with_capacity(n);
    for i in 1..=n {
        let s = rng.random_range(1..=i);
        let e = rng.random_range(i..=n);
        items.push((q_usize(s), q_usize(e)));
    }
    IntervalRepresentation::new(items).expect("sampled bounds are ordered")
}
