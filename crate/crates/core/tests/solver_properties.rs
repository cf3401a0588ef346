mod common;

use proptest::prelude::*;
use sspc_core::graph::diameter;
use sspc_core::solvers::domination_number;
use sspc_core::{compute_bounds, solve_exact, solve_greedy, verify_strong_witness, Graph, SolverConfig, Variant};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = common::rng(seed);
        common::random_connected(&mut rng, n, 0.4)
    })
}

fn opt(g: &Graph, k: u32, v: Variant) -> usize {
    solve_exact(g, k, v, &SolverConfig::default()).unwrap().optimum
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn monotonicity_chain(g in graph_strategy(9), k in 1u32..4) {
        let d = diameter(&g).unwrap();
        let weak_d = opt(&g, d, Variant::Weak);
        let weak_k = opt(&g, k, Variant::Weak);
        let strong_k = opt(&g, k, Variant::Strong);
        prop_assert!(weak_d <= weak_k);
        prop_assert!(weak_k <= strong_k);
        prop_assert!(opt(&g, k + 1, Variant::Weak) <= weak_k);
        prop_assert!(opt(&g, k + 1, Variant::Strong) <= strong_k);
    }

    #[test]
    fn greedy_is_valid_and_never_better(g in graph_strategy(10), k in 1u32..4) {
        let cfg = SolverConfig::default();
        for v in [Variant::Weak, Variant::Strong] {
            let greedy = solve_greedy(&g, k, v, &cfg).unwrap();
            prop_assert!(greedy.optimum >= opt(&g, k, v));
            if v == Variant::Strong {
                prop_assert!(verify_strong_witness(&g, &greedy.set, k, greedy.witness.as_ref().unwrap()));
            }
        }
    }

    #[test]
    fn asserted_bounds_sandwich(g in graph_strategy(9), k in 1u32..4) {
        let b = compute_bounds(&g, k, &SolverConfig::default()).unwrap();
        let weak = opt(&g, k, Variant::Weak);
        let strong = opt(&g, k, Variant::Strong);
        prop_assert!(b.weak_lower() <= weak);
        prop_assert!(b.strong_lower() <= strong);
        prop_assert!(strong <= b.strong_upper());
    }

    #[test]
    fn sequential_matches_parallel(g in graph_strategy(10), k in 1u32..4) {
        for v in [Variant::Weak, Variant::Strong] {
            let a = solve_exact(&g, k, v, &SolverConfig::sequential()).unwrap();
            let b = solve_exact(&g, k, v, &SolverConfig::default()).unwrap();
            prop_assert_eq!(&a.set, &b.set);
            prop_assert_eq!(&a.witness, &b.witness);
        }
    }
}

#[test]
fn domination_is_a_lower_bound_on_paths_and_cycles() {
    let cfg = SolverConfig::default();
    for n in 2..12 {
        for g in [common::path(n), common::cycle(n.max(3))] {
            for k in 1..=3 {
                assert!(domination_number(&g, k, &cfg).unwrap() <= opt(&g, k, Variant::Strong));
            }
        }
    }
}

#[test]
fn node_budget_reports_size_limit() {
    let cfg = SolverConfig {
        node_budget: Some(3),
        ..SolverConfig::default()
    };
    let err = solve_exact(&common::cycle(11), 2, Variant::Strong, &cfg).unwrap_err();
    assert!(err.is_size_limit());
}
