mod common;

use sspc_core::{naive_oracle, solve_exact, verify_strong_witness, verify_weak_cover, Graph, SolverConfig, Variant};

fn check(g: &Graph, what: &str) {
    let cfg = SolverConfig::default();
    for k in 1..=3 {
        for variant in [Variant::Weak, Variant::Strong] {
            let exact = solve_exact(g, k, variant, &cfg).unwrap();
            let oracle = naive_oracle(g, k, variant, &cfg).unwrap();
            assert_eq!(exact.optimum, oracle.optimum, "{what} k={k} {variant}");
            // both enumerate in lexicographic order, so the sets agree too
            assert_eq!(exact.set, oracle.set, "{what} k={k} {variant}");
            for r in [&exact, &oracle] {
                match variant {
                    Variant::Weak => assert!(verify_weak_cover(g, &r.set, k)),
                    Variant::Strong => {
                        assert!(verify_strong_witness(g, &r.set, k, r.witness.as_ref().unwrap()))
                    }
                }
            }
        }
    }
}

#[test]
fn family_instances() {
    let graphs = common::small_family_graphs(12);
    assert!(graphs.len() >= 25);
    for (spec, g) in graphs {
        check(&g, &spec.to_string());
    }
}

#[test]
fn random_graphs() {
    let mut rng = common::rng(7);
    for i in 0..60 {
        let n = 2 + i % 7;
        let g = common::random_connected(&mut rng, n, 0.4);
        check(&g, &format!("random #{i} {:?}", g.edges()));
    }
}
