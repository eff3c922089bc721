//! Brute-force oracles. Exact, deterministic, and refusing inputs past
//! their size limits so nothing silently times out. The rest of the crate
//! is validated against these at desk scale.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::error::{input_err, Error, Result};
use crate::graph::{CliqueCover, Coloring, Graph, VertexSet};
use crate::rational::Q;

/// Default size caps. Callers needing more use the `_with_limit` variants.
pub mod limits {
    pub const ALPHA: usize = 20;
    pub const COLORING: usize = 12;
    pub const ORDER_SEARCH: usize = 12;
    pub const OUTERPLANAR: usize = 64;
}

pub(crate) fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::OracleLimit { n, limit })
    } else {
        Ok(())
    }
}

/// Maximum-weight independent set by branch and bound over all subsets.
/// Unit weights when `weights` is `None`. Ties broken toward the
/// lexicographically smallest optimal set.
pub fn brute_force_alpha(g: &Graph, weights: Option<&[Q]>) -> Result<(Q, VertexSet)> {
    brute_force_alpha_with_limit(g, weights, limits::ALPHA)
}

pub fn brute_force_alpha_with_limit(
    g: &Graph,
    weights: Option<&[Q]>,
    limit: usize,
) -> Result<(Q, VertexSet)> {
    let n = g.n();
    check_limit(n, limit.min(64))?;
    // Scale weights to a common denominator so the search runs on integers.
    let (scaled, denom) = match weights {
        None => (vec![1i128; n], BigInt::from(1)),
        Some(ws) => {
            if ws.len() != n {
                return input_err(format!("expected {n} weights, got {}", ws.len()));
            }
            if let Some(w) = ws.iter().find(|w| w.is_negative()) {
                return input_err(format!("negative weight {w}"));
            }
            let denom = ws.iter().fold(BigInt::from(1), |acc, w| acc.lcm(w.denom()));
            let mut scaled = Vec::with_capacity(n);
            for w in ws {
                let v = (w.numer() * &denom) / w.denom();
                scaled.push(v.to_i128().ok_or_else(|| {
                    Error::Input("weight magnitude too large for the oracle".into())
                })?);
            }
            (scaled, denom)
        }
    };
    let adj_masks: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | (1 << u)))
        .collect();
    let mut suffix = vec![0i128; n + 1];
    for v in (0..n).rev() {
        suffix[v] = suffix[v + 1] + scaled[v];
    }

    struct Search<'a> {
        n: usize,
        w: &'a [i128],
        adj: &'a [u64],
        suffix: &'a [i128],
        best_val: i128,
        best_set: Vec<usize>,
        have_best: bool,
        cur: Vec<usize>,
    }
    impl Search<'_> {
        fn go(&mut self, idx: usize, val: i128, banned: u64) {
            if self.have_best && val + self.suffix[idx] < self.best_val {
                return;
            }
            if idx == self.n {
                if !self.have_best
                    || val > self.best_val
                    || (val == self.best_val && self.cur < self.best_set)
                {
                    self.best_val = val;
                    self.best_set = self.cur.clone();
                    self.have_best = true;
                }
                return;
            }
            if banned & (1 << idx) == 0 {
                self.cur.push(idx);
                self.go(idx + 1, val + self.w[idx], banned | self.adj[idx]);
                self.cur.pop();
            }
            self.go(idx + 1, val, banned);
        }
    }

    let mut s = Search {
        n,
        w: &scaled,
        adj: &adj_masks,
        suffix: &suffix,
        best_val: 0,
        best_set: Vec::new(),
        have_best: false,
        cur: Vec::new(),
    };
    s.go(0, 0, 0);
    let value = Q::new(BigInt::from(s.best_val), denom);
    Ok((value, VertexSet::new(s.best_set, n).expect("search emits sorted sets")))
}

/// Independence number with the unit-weight witness.
pub fn brute_force_alpha_unit(g: &Graph) -> Result<(usize, VertexSet)> {
    let (v, set) = brute_force_alpha(g, None)?;
    Ok((v.to_integer().to_usize().expect("unit alpha fits usize"), set))
}

/// Size of a maximum clique, via the complement.
pub fn brute_force_max_clique(g: &Graph) -> Result<(usize, VertexSet)> {
    brute_force_alpha_unit(&g.complement())
}

fn coloring_search(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    // Canonical search: vertex v may open at most one fresh color, so each
    // proper coloring is visited once up to color permutation.
    fn go(g: &Graph, k: usize, v: usize, used: usize, colors: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        let top = (used + 1).min(k);
        for c in 0..top {
            if g.neighbors(v).all(|u| u >= v || colors[u] != c) {
                colors[v] = c;
                if go(g, k, v + 1, used.max(c + 1), colors) {
                    return true;
                }
            }
        }
        false
    }
    let mut colors = vec![0; n];
    if go(g, k, 0, 0, &mut colors) {
        Some(colors)
    } else {
        None
    }
}

/// Is the graph properly k-colorable?
pub fn brute_force_chi(g: &Graph, k: usize) -> Result<bool> {
    brute_force_chi_with_limit(g, k, limits::COLORING)
}

pub fn brute_force_chi_with_limit(g: &Graph, k: usize, limit: usize) -> Result<bool> {
    check_limit(g.n(), limit)?;
    Ok(coloring_search(g, k).is_some())
}

/// Chromatic number.
pub fn brute_force_chi_exact(g: &Graph) -> Result<usize> {
    brute_force_chi_exact_with_limit(g, limits::COLORING)
}

pub fn brute_force_chi_exact_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    Ok(brute_force_coloring_with_limit(g, limit)?.count)
}

/// An optimal proper coloring, deterministic across runs.
pub fn brute_force_coloring(g: &Graph) -> Result<Coloring> {
    brute_force_coloring_with_limit(g, limits::COLORING)
}

pub fn brute_force_coloring_with_limit(g: &Graph, limit: usize) -> Result<Coloring> {
    check_limit(g.n(), limit)?;
    let mut k = if g.n() == 0 { 0 } else { 1 };
    loop {
        if let Some(colors) = coloring_search(g, k) {
            let count = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
            return Ok(Coloring { colors, count });
        }
        k += 1;
    }
}

/// Minimum clique cover, computed as an exact coloring of the complement.
pub fn brute_force_gamma(g: &Graph) -> Result<(usize, CliqueCover)> {
    brute_force_gamma_with_limit(g, limits::COLORING)
}

pub fn brute_force_gamma_with_limit(g: &Graph, limit: usize) -> Result<(usize, CliqueCover)> {
    check_limit(g.n(), limit)?;
    let co = brute_force_coloring_with_limit(&g.complement(), limit)?;
    let mut cliques = Vec::new();
    for c in 0..co.count {
        let ids: Vec<usize> =
            (0..g.n()).filter(|&v| co.colors[v] == c).collect();
        cliques.push(VertexSet::new(ids, g.n()).expect("class is sorted"));
    }
    let cover = CliqueCover { cliques };
    debug_assert!(cover.validate(g).is_ok());
    Ok((co.count, cover))
}
