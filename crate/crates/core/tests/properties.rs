//! Property tests over generated instances. Strategies build canonical
//! representations and labeled graphs directly so failures shrink to small
//! readable cases.

use proptest::prelude::*;

use mptkit_core::io;
use mptkit_core::rational::q_usize;
use mptkit_core::{
    order_from_rep, two_interval_decomposition, verify_i_order, verify_mpt_order, Graph,
    MptRepresentation, PointedInterval,
};

fn rep_strategy() -> impl Strategy<Value = MptRepresentation> {
    (1usize..=20).prop_flat_map(|n| {
        let triples: Vec<_> = (1..=n).map(|i| (1..=i, i..=n).prop_map(move |(s, e)| (s, i, e))).collect();
        triples.prop_map(|items| {
            MptRepresentation::new(
                items
                    .into_iter()
                    .map(|(s, p, e)| {
                        PointedInterval::new(q_usize(s), q_usize(p), q_usize(e))
                            .expect("strategy keeps s <= p <= e")
                    })
                    .collect(),
            )
        })
    })
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (1usize..=12).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut bit = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if mask[bit] {
                        edges.push((u, v));
                    }
                    bit += 1;
                }
            }
            Graph::new(n, &edges).expect("pair scan emits valid edges")
        })
    })
}

proptest! {
    #[test]
    fn canonical_reps_survive_the_file_round_trip(rep in rep_strategy()) {
        let parsed = io::parse_mpt_rep(&io::write_mpt_rep(&rep)).unwrap();
        prop_assert_eq!(parsed, rep);
    }

    #[test]
    fn the_corner_order_of_a_rep_is_an_mpt_order(rep in rep_strategy()) {
        let g = rep.adjacency();
        let ord = order_from_rep(&rep);
        prop_assert!(verify_mpt_order(&g, &ord).is_none());
    }

    #[test]
    fn factor_graphs_meet_in_the_represented_graph(rep in rep_strategy()) {
        let g = rep.adjacency();
        let (ends, starts) = two_interval_decomposition(&rep);
        let h1 = ends.adjacency();
        let h2 = starts.adjacency();
        for u in 0..g.n() {
            for v in (u + 1)..g.n() {
                prop_assert_eq!(g.has_edge(u, v), h1.has_edge(u, v) && h2.has_edge(u, v));
            }
        }
        let sigma = order_from_rep(&rep);
        prop_assert!(verify_i_order(&h1, &sigma).is_none());
        prop_assert!(verify_i_order(&h2, &sigma.reversed()).is_none());
    }

    #[test]
    fn normalization_is_idempotent_and_adjacency_preserving(rep in rep_strategy()) {
        let canon = rep.normalize();
        prop_assert!(canon.is_canonical());
        prop_assert_eq!(canon.adjacency(), rep.adjacency());
        prop_assert_eq!(canon.normalize(), canon);
    }

    #[test]
    fn graphs_survive_the_file_round_trip(g in graph_strategy()) {
        let parsed = io::parse_graph(&io::write_graph(&g)).unwrap();
        prop_assert_eq!(parsed, g);
    }

    #[test]
    fn parsers_reject_arbitrary_text_without_panicking(text in ".{0,200}") {
        let _ = io::parse_graph(&text);
        let _ = io::parse_mpt_rep(&text);
        let _ = io::parse_order(&text);
        let _ = io::parse_segments(&text);
        let _ = io::parse_contact(&text);
    }
}
