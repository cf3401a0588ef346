mod common;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sspc_core::cover::strong_feasible;
use sspc_core::graph::DEFAULT_GEODESIC_CAP as CAP;
use sspc_core::reduction::{reduce_vc, Role};
use sspc_core::solvers::min_vertex_cover;
use sspc_core::{Graph, SolverConfig};

fn random_with_edges(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(0.4))
            .collect();
        if !edges.is_empty() {
            return Graph::new(n, &edges).unwrap();
        }
    }
}

#[test]
fn gadget_sizes_by_counting() {
    let mut rng = common::rng(5);
    for _ in 0..50 {
        let n = rng.gen_range(2..=9);
        let g = random_with_edges(&mut rng, n);
        let m = g.m();
        for k in 2..=6u32 {
            let out = reduce_vc(&g, k).unwrap();
            let count = |r: Role| out.roles.iter().filter(|&&x| x == r).count();
            let tails = 2 * (k as usize).saturating_sub(3);
            assert_eq!(count(Role::Original), n);
            assert_eq!(count(Role::Path), 2 * m);
            assert_eq!(count(Role::Triangle), 6);
            assert_eq!(count(Role::Tail), tails);
            // subdivided paths, both apex stars, triangles, then attachments or tails
            let joins = if k == 2 { 4 } else { tails + 2 };
            assert_eq!(out.gadget.m(), 3 * m + n + 2 * m + 6 + joins);
            assert_eq!(out.gadget.n(), n + 2 * m + 2 + tails + 6);
            assert!(out.gadget.is_connected());
        }
    }
}

#[test]
fn forward_witness_for_k_two() {
    let mut rng = common::rng(6);
    let cfg = SolverConfig::default();
    for _ in 0..20 {
        let n = rng.gen_range(2..=6);
        let g = random_with_edges(&mut rng, n);
        let out = reduce_vc(&g, 2).unwrap();
        let cover = min_vertex_cover(&g, &cfg).unwrap();
        let set = out.forward_set(&cover);
        assert!(
            strong_feasible(&out.gadget, &set, 2, CAP).unwrap().is_some(),
            "{:?}",
            g.edges()
        );
    }
}

/// For k = 3 the oracle needs more than |VC| + 2 vertices on the K2 gadget, so the forward set cannot be a cover.
#[test]
fn k_three_forward_set_is_too_small_on_k2() {
    use sspc_core::{naive_oracle, Variant};
    let g = Graph::new(2, &[(0, 1)]).unwrap();
    let out = reduce_vc(&g, 3).unwrap();
    let cfg = SolverConfig::default();
    let forward = out.forward_set(&min_vertex_cover(&g, &cfg).unwrap());
    assert_eq!(forward.len(), 3);
    let r = naive_oracle(&out.gadget, 3, Variant::Strong, &cfg).unwrap();
    assert_eq!(r.optimum, 4);
    // no source of the forward set has a geodesic through d2-d3
    let (d2, d3) = (out.anchors.d[1], out.anchors.d[2]);
    let e = out.gadget.edge_index(d2, d3).unwrap();
    assert!(!sspc_core::cover::weak_union(&out.gadget, &forward, 3).contains(e));
}
