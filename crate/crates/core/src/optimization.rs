//! Solvers running on canonical representations: an O(n^3) dynamic program
//! for maximum weight independent set, an exact clique cover for interval
//! models, a cover for the general class within twice the independence
//! number, and first-fit coloring.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{input_err, Result};
use crate::graph::{CliqueCover, Coloring, VertexSet};
use crate::rep::{IntervalRepresentation, MptRepresentation};
use crate::rational::{q_usize, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WisResult {
    pub value: Q,
    pub set: VertexSet,
}

/// Canonical reps indexed by corner position: position i (1-based) holds the
/// vertex whose point is i, with integer start and end read back as usize.
struct CornerView {
    vert_at: Vec<usize>,
    start: Vec<usize>,
    end: Vec<usize>,
}

impl CornerView {
    fn new(rep: &MptRepresentation) -> Result<CornerView> {
        if !rep.is_canonical() {
            return input_err("representation must be canonical; normalize it first");
        }
        let n = rep.n();
        let mut vert_at = vec![0; n + 1];
        let mut start = vec![0; n + 1];
        let mut end = vec![0; n + 1];
        for (v, it) in rep.items().iter().enumerate() {
            let i = it.p().to_integer().to_usize().expect("canonical point");
            vert_at[i] = v;
            start[i] = it.s().to_integer().to_usize().expect("canonical start");
            end[i] = it.e().to_integer().to_usize().expect("canonical end");
        }
        Ok(CornerView {
            vert_at,
            start,
            end,
        })
    }
}

/// Maximum weight independent set in O(n^3). `None` weights mean units;
/// negative weights are rejected, zero weights are kept eligible.
///
/// Subproblems are index pairs (a, b) with sentinels 0 and n+1: the family
/// L_{a,b} holds the shapes between a and b that end before both bounds and
/// touch neither. Splitting at a member i is safe because members of
/// L_{a,i} and L_{i,b} live in disjoint horizontal strips around the corner
/// of shape i. End comparisons are (end, index) lexicographic, so tied ends
/// never lose valid combinations.
pub fn max_weight_independent_set(
    rep: &MptRepresentation,
    weights: Option<&[Q]>,
) -> Result<WisResult> {
    let n = rep.n();
    let w = match weights {
        Some(w) => {
            if w.len() != n {
                return input_err(format!("expected {n} weights, got {}", w.len()));
            }
            if let Some(bad) = w.iter().find(|x| x.is_negative()) {
                return input_err(format!("negative weight {bad} not allowed"));
            }
            w.to_vec()
        }
        None => vec![Q::one(); n],
    };
    let view = CornerView::new(rep)?;
    if n == 0 {
        return Ok(WisResult {
            value: Q::zero(),
            set: VertexSet::new(vec![], 0).expect("empty set"),
        });
    }
    let g = rep.adjacency();
    let disjoint = |i: usize, j: usize| !g.has_edge(view.vert_at[i], view.vert_at[j]);
    let lex_less = |i: usize, j: usize| (view.end[i], i) < (view.end[j], j);
    // position 0 and n+1 are sentinels: infinite end, touching nothing
    let member = |i: usize, a: usize, b: usize| {
        (a == 0 || (lex_less(i, a) && disjoint(i, a)))
            && (b == n + 1 || (lex_less(i, b) && disjoint(i, b)))
    };
    let mut opt = vec![vec![Q::zero(); n + 2]; n + 2];
    let mut pick = vec![vec![None; n + 2]; n + 2];
    for span in 2..=(n + 1) {
        for a in 0..=(n + 1 - span) {
            let b = a + span;
            for i in (a + 1)..b.min(n + 1) {
                if !member(i, a, b) {
                    continue;
                }
                let val = &opt[a][i] + &w[view.vert_at[i]] + &opt[i][b];
                if val > opt[a][b] {
                    opt[a][b] = val;
                    pick[a][b] = Some(i);
                }
            }
        }
    }
    let mut ids = Vec::new();
    let mut stack = vec![(0usize, n + 1)];
    while let Some((a, b)) = stack.pop() {
        if let Some(i) = pick[a][b] {
            ids.push(view.vert_at[i]);
            stack.push((a, i));
            stack.push((i, b));
        }
    }
    let set = VertexSet::from_unsorted(ids, n)?;
    debug_assert!(set.is_independent_in(&g));
    debug_assert_eq!(
        set.iter().map(|&v| w[v].clone()).sum::<Q>(),
        opt[0][n + 1]
    );
    Ok(WisResult {
        value: opt[0][n + 1].clone(),
        set,
    })
}

/// Optimal clique cover of an interval model. Sweeping uncovered intervals
/// by right endpoint, each sweep stop grabs everything containing that
/// endpoint; the stop intervals are pairwise disjoint, so the cover size
/// equals the independence number.
pub fn interval_clique_cover(iv: &IntervalRepresentation) -> CliqueCover {
    let n = iv.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| iv.items()[a].1.cmp(&iv.items()[b].1).then(a.cmp(&b)));
    let mut covered = vec![false; n];
    let mut cliques = Vec::new();
    for &i in &order {
        if covered[i] {
            continue;
        }
        let stop = &iv.items()[i].1;
        let members: Vec<usize> = (0..n)
            .filter(|&j| !covered[j] && &iv.items()[j].0 <= stop && stop <= &iv.items()[j].1)
            .collect();
        for &j in &members {
            covered[j] = true;
        }
        cliques.push(VertexSet::new(members, n).expect("scan is sorted"));
    }
    let cover = CliqueCover { cliques };
    debug_assert!(cover.validate(&iv.adjacency()).is_ok());
    cover
}

/// Clique cover of size at most twice the independence number.
///
/// A greedy independent set i_1 < ... < i_k is taken in corner order; the
/// shapes between consecutive picks that reach past the next pick form one
/// clique each. What remains splits into blocks living strictly between
/// consecutive picks, each anchored at its left pick, hence an interval
/// model covered exactly by `interval_clique_cover`.
pub fn clique_cover_2approx(rep: &MptRepresentation) -> Result<CliqueCover> {
    let view = CornerView::new(rep)?;
    let n = rep.n();
    if n == 0 {
        return Ok(CliqueCover { cliques: vec![] });
    }
    let g = rep.adjacency();
    let disjoint = |i: usize, j: usize| !g.has_edge(view.vert_at[i], view.vert_at[j]);
    let mut chosen: Vec<usize> = Vec::new();
    for i in 1..=n {
        if chosen.iter().all(|&m| disjoint(i, m)) {
            chosen.push(i);
        }
    }
    let k = chosen.len();
    let mut covered = vec![false; n + 1];
    let mut cliques = Vec::new();
    for j in 0..k.saturating_sub(1) {
        let next = chosen[j + 1];
        let members: Vec<usize> = (chosen[j]..next).filter(|&l| view.end[l] >= next).collect();
        for &l in &members {
            covered[l] = true;
        }
        if !members.is_empty() {
            let ids = members.iter().map(|&l| view.vert_at[l]).collect();
            cliques.push(VertexSet::from_unsorted(ids, n)?);
        }
    }
    for j in 0..k {
        let hi = if j + 1 < k { chosen[j + 1] } else { n + 1 };
        let block: Vec<usize> = (chosen[j]..hi).filter(|&l| !covered[l]).collect();
        if block.is_empty() {
            continue;
        }
        // every block member hangs from the left pick: start <= chosen[j]
        debug_assert!(block.iter().all(|&l| view.start[l] <= chosen[j]));
        let iv = IntervalRepresentation::new(
            block
                .iter()
                .map(|&l| (q_usize(l), q_usize(view.end[l])))
                .collect(),
        )?;
        for sub in interval_clique_cover(&iv).cliques {
            let ids = sub.iter().map(|&m| view.vert_at[block[m]]).collect();
            cliques.push(VertexSet::from_unsorted(ids, n)?);
        }
    }
    let cover = CliqueCover { cliques };
    cover
        .validate(&g)
        .expect("construction yields a partition into cliques");
    Ok(cover)
}

/// First-fit coloring in corner order. Proper but not optimal in general;
/// pair it with an oracle clique bound to judge the gap.
pub fn greedy_coloring(rep: &MptRepresentation) -> Result<Coloring> {
    let view = CornerView::new(rep)?;
    let n = rep.n();
    let g = rep.adjacency();
    let mut colors = vec![usize::MAX; n];
    let mut count = 0;
    for i in 1..=n {
        let v = view.vert_at[i];
        let mut used = vec![false; count + 1];
        for u in g.neighbors(v) {
            if colors[u] != usize::MAX && colors[u] <= count {
                used[colors[u]] = true;
            }
        }
        let c = (0..).find(|&c| c >= used.len() || !used[c]).expect("mex");
        colors[v] = c;
        count = count.max(c + 1);
    }
    let coloring = Coloring { colors, count };
    coloring.validate(&g).expect("first-fit is proper");
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::net;
    use crate::oracle::{brute_force_alpha, brute_force_chi_exact, brute_force_gamma};
    use crate::order::{brute_force_mpt_order, rep_from_order};
    use crate::rep::{random_interval_rep, random_mpt_rep, PointedInterval};
    use crate::rational::{q, q_ratio};

    fn rep(triples: &[(i64, i64, i64)]) -> MptRepresentation {
        MptRepresentation::new(
            triples
                .iter()
                .map(|&(s, p, e)| PointedInterval::new(q(s), q(p), q(e)).unwrap())
                .collect(),
        )
    }

    fn net_rep() -> MptRepresentation {
        let g = net();
        let ord = brute_force_mpt_order(&g).unwrap().unwrap();
        rep_from_order(&g, &ord).unwrap()
    }

    #[test]
    fn wis_prefers_heavy_middle() {
        let p3 = rep(&[(1, 1, 2), (1, 2, 3), (2, 3, 3)]);
        let res =
            max_weight_independent_set(&p3, Some(&[q(1), q(5), q(1)])).unwrap();
        assert_eq!(res.value, q(5));
        assert_eq!(res.set.as_slice(), &[1]);
    }

    #[test]
    fn wis_unit_weights_on_net() {
        let r = net_rep();
        let res = max_weight_independent_set(&r, None).unwrap();
        assert_eq!(res.value, q(3));
        assert!(res.set.is_independent_in(&r.adjacency()));
        assert_eq!(res.set.len(), 3);
    }

    #[test]
    fn wis_empty() {
        let res = max_weight_independent_set(&MptRepresentation::new(vec![]), None).unwrap();
        assert_eq!(res.value, q(0));
        assert!(res.set.is_empty());
    }

    #[test]
    fn wis_rational_weights() {
        let p3 = rep(&[(1, 1, 2), (1, 2, 3), (2, 3, 3)]);
        let res = max_weight_independent_set(
            &p3,
            Some(&[q_ratio(1, 2), q_ratio(1, 3), q_ratio(1, 2)]),
        )
        .unwrap();
        assert_eq!(res.value, q(1));
        assert_eq!(res.set.as_slice(), &[0, 2]);
    }

    #[test]
    fn wis_zero_weights_allowed() {
        let p3 = rep(&[(1, 1, 2), (1, 2, 3), (2, 3, 3)]);
        let res = max_weight_independent_set(&p3, Some(&[q(0), q(0), q(0)])).unwrap();
        assert_eq!(res.value, q(0));
        assert!(res.set.is_independent_in(&p3.adjacency()));
    }

    #[test]
    fn wis_rejects_bad_inputs() {
        let p3 = rep(&[(1, 1, 2), (1, 2, 3), (2, 3, 3)]);
        assert!(max_weight_independent_set(&p3, Some(&[q(1), q(-1), q(1)])).is_err());
        assert!(max_weight_independent_set(&p3, Some(&[q(1)])).is_err());
        let loose = rep(&[(1, 1, 2), (1, 3, 3)]);
        assert!(max_weight_independent_set(&loose, None).is_err());
        assert!(max_weight_independent_set(&loose.normalize(), None).is_ok());
    }

    #[test]
    fn wis_tied_ends_still_combine() {
        // both shapes end at 2; the disjoint pair must still be found
        let r = rep(&[(1, 1, 2), (2, 2, 2)]);
        assert!(r.adjacency().edges().is_empty());
        let res = max_weight_independent_set(&r, None).unwrap();
        assert_eq!(res.value, q(2));
    }

    #[test]
    fn wis_matches_oracle_on_random_reps() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for seed in 0..60 {
            let n = 1 + (seed as usize % 14);
            let r = random_mpt_rep(n, 1000 + seed);
            let w: Vec<Q> = (0..n).map(|_| q(rng.random_range(0..=9i64))).collect();
            let res = max_weight_independent_set(&r, Some(&w)).unwrap();
            let (best, _) = brute_force_alpha(&r.adjacency(), Some(&w)).unwrap();
            assert_eq!(res.value, best, "seed {seed}");
            assert!(res.set.is_independent_in(&r.adjacency()));
            assert_eq!(res.set.iter().map(|&v| w[v].clone()).sum::<Q>(), best);
        }
    }

    #[test]
    fn interval_cover_examples() {
        let two = IntervalRepresentation::new(vec![(q(0), q(1)), (q(2), q(3))]).unwrap();
        assert_eq!(interval_clique_cover(&two).size(), 2);
        let shared =
            IntervalRepresentation::new(vec![(q(0), q(5)), (q(1), q(4)), (q(2), q(3))]).unwrap();
        assert_eq!(interval_clique_cover(&shared).size(), 1);
        let mixed =
            IntervalRepresentation::new(vec![(q(0), q(2)), (q(1), q(3)), (q(4), q(5))]).unwrap();
        let cover = interval_clique_cover(&mixed);
        assert_eq!(cover.size(), 2);
        assert_eq!(cover.cliques[0].as_slice(), &[0, 1]);
        assert_eq!(cover.cliques[1].as_slice(), &[2]);
    }

    #[test]
    fn interval_cover_is_exact_against_oracle() {
        for seed in 0..30 {
            let iv = random_interval_rep(1 + (seed as usize % 10), 2000 + seed);
            let g = iv.adjacency();
            let cover = interval_clique_cover(&iv);
            cover.validate(&g).unwrap();
            let (gamma, _) = brute_force_gamma(&g).unwrap();
            assert_eq!(cover.size(), gamma, "seed {seed}");
        }
    }

    #[test]
    fn cover_on_net_within_bound() {
        let r = net_rep();
        let cover = clique_cover_2approx(&r).unwrap();
        cover.validate(&r.adjacency()).unwrap();
        let (gamma, _) = brute_force_gamma(&r.adjacency()).unwrap();
        assert_eq!(gamma, 3);
        assert!(cover.size() >= gamma);
        assert!(cover.size() <= 6);
    }

    #[test]
    fn cover_single_vertex() {
        let r = rep(&[(1, 1, 1)]);
        let cover = clique_cover_2approx(&r).unwrap();
        assert_eq!(cover.size(), 1);
        assert_eq!(cover.cliques[0].as_slice(), &[0]);
    }

    #[test]
    fn cover_within_twice_alpha_on_random_reps() {
        for seed in 0..60 {
            let n = 1 + (seed as usize % 12);
            let r = random_mpt_rep(n, 3000 + seed);
            let g = r.adjacency();
            let cover = clique_cover_2approx(&r).unwrap();
            cover.validate(&g).unwrap();
            let (alpha, _) = brute_force_alpha(&g, None).unwrap();
            let alpha = alpha.to_integer().to_usize().unwrap();
            let (gamma, _) = brute_force_gamma(&g).unwrap();
            assert!(cover.size() <= 2 * alpha, "seed {seed}");
            assert!(cover.size() >= gamma, "seed {seed}");
        }
    }

    #[test]
    fn greedy_coloring_examples() {
        let k4 = rep_from_order(
            &crate::graph::complete(4),
            &crate::order::VertexOrder::identity(4),
        )
        .unwrap();
        assert_eq!(greedy_coloring(&k4).unwrap().count, 4);
        let edgeless = rep(&[(1, 1, 1), (2, 2, 2), (3, 3, 3)]);
        assert_eq!(greedy_coloring(&edgeless).unwrap().count, 1);
    }

    #[test]
    fn greedy_coloring_net_depends_on_the_order() {
        // an order interleaving pendants with the triangle hits chi = 3
        let g = net();
        let good = crate::order::VertexOrder::new(vec![0, 1, 3, 2, 5, 4]).unwrap();
        let r = rep_from_order(&g, &good).unwrap();
        assert_eq!(greedy_coloring(&r).unwrap().count, 3);
        // the lexicographically least order pays one extra color
        let lex = net_rep();
        let c = greedy_coloring(&lex).unwrap();
        c.validate(&g).unwrap();
        assert_eq!(brute_force_chi_exact(&g).unwrap(), 3);
        assert_eq!(c.count, 4);
    }

    #[test]
    fn greedy_coloring_is_proper_and_bounded_below_by_chi() {
        for seed in 0..40 {
            let n = 1 + (seed as usize % 10);
            let r = random_mpt_rep(n, 4000 + seed);
            let g = r.adjacency();
            let coloring = greedy_coloring(&r).unwrap();
            coloring.validate(&g).unwrap();
            assert!(coloring.count >= brute_force_chi_exact(&g).unwrap());
        }
    }
}
