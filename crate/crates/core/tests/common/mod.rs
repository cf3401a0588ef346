#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sspc_core::{generate, Family, FamilySpec, Graph};

/// Connected G(n, p) sample, resampled until connected.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Up to two smallest parameter settings per family with at most `max_n` vertices.
pub fn small_family_graphs(max_n: usize) -> Vec<(FamilySpec, Graph)> {
    let mut out = Vec::new();
    for f in Family::ALL {
        for params in f.parameter_sweep(max_n).into_iter().take(2) {
            let spec = FamilySpec::new(f, params).unwrap();
            let g = generate(&spec).unwrap();
            out.push((spec, g));
        }
    }
    out
}

pub fn path(n: usize) -> Graph {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &e).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &e).unwrap()
}
