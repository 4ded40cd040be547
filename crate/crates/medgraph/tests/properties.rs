use medgraph::function::{local_median_set_p, median_set};
use medgraph::generators::random::{random_connected_graph, seeded};
use medgraph::io::{parse_graph, parse_profile, write_graph, write_profile};
use medgraph::lp::{compute_p, has_gp_connected_medians};
use medgraph::{Graph, Profile};
use proptest::prelude::*;

fn graph(n: usize, density: f64, seed: u64) -> Graph {
    random_connected_graph(n, density, &mut seeded(seed)).unwrap()
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (2usize..=8, 0.1f64..0.7, any::<u64>()).prop_map(|(n, d, s)| graph(n, d, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distances_form_a_metric(g in graph_strategy()) {
        prop_assert!(g.dist().check_metric(&g));
        for u in 0..g.n() {
            for v in 0..g.n() {
                prop_assert_eq!(g.interval(u, v), g.interval(v, u));
            }
        }
    }

    #[test]
    fn graph_text_round_trip(g in graph_strategy()) {
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn medians_are_local_medians(g in graph_strategy(), w in proptest::collection::vec(0i64..4, 8)) {
        let weights: Vec<(usize, i64)> = w.iter().enumerate().filter(|(i, _)| *i < g.n()).map(|(i, &x)| (i, x)).collect();
        prop_assume!(weights.iter().any(|&(_, x)| x > 0));
        let pi = Profile::from_ints(&weights).unwrap();
        let med = median_set(&g, &pi);
        prop_assert!(!med.is_empty());
        prop_assert!(med.is_subset(&local_median_set_p(&g, &pi, 1)));
        let text = write_profile(&pi);
        prop_assert_eq!(parse_profile(&text).unwrap(), pi.clone());
        let doubled = Profile::from_ints(&weights.iter().map(|&(v, x)| (v, 2 * x)).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(median_set(&g, &doubled), med);
    }

    #[test]
    fn p_value_is_least_and_bounded(g in graph_strategy()) {
        let r = compute_p(&g, false);
        prop_assert!(r.p >= 1 && r.p <= g.diameter().max(1));
        prop_assert!(has_gp_connected_medians(&g, r.p, false));
        prop_assert!(has_gp_connected_medians(&g, r.p + 1, false));
        if r.p > 1 {
            prop_assert!(!has_gp_connected_medians(&g, r.p - 1, false));
            let w = r.witness_profile.unwrap();
            let pair = r.witness.unwrap();
            prop_assert!(medgraph::lp::median_set_is_pair(&g, &w, pair.u, pair.v));
        }
    }

    #[test]
    fn restricting_columns_to_j_agrees(g in graph_strategy()) {
        prop_assert_eq!(compute_p(&g, false).p, compute_p(&g, true).p);
    }
}
