//! Exhaustive reference solver for small graphs.
//!
//! Shares nothing with the exact solver beyond BFS: geodesics are found as
//! neighbour walks of length `d(u, v)`, subsets are tried in ascending size
//! and lexicographic order, and strong feasibility fixes a geodesic for
//! every pair by sweeping the set of reachable covered-edge masks.

use std::collections::HashMap;
use std::time::Instant;

use itertools::Itertools;

use super::exact::elapsed_ms;
use super::{check_limit, Counter, SolveError, SolveResult, SolveStats, SolveStatus, SolverConfig, Variant};
use crate::cover::{Assignment, StrongWitness};
use crate::graph::{bfs_distances, Graph, Vertex};

type Mask = u128;

struct Pair {
    source: Vertex,
    target: Vertex,
    paths: Vec<(Vec<Vertex>, Mask)>,
}

/// All walks `u = x0, ..., x_len = v` along edges; with `len = d(u, v)` these are the geodesics.
fn walks(g: &Graph, u: Vertex, v: Vertex, len: usize) -> Vec<Vec<Vertex>> {
    fn go(g: &Graph, v: Vertex, len: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        let last = *cur.last().unwrap();
        if cur.len() == len + 1 {
            if last == v {
                out.push(cur.clone());
            }
            return;
        }
        for &w in g.neighbors(last) {
            cur.push(w);
            go(g, v, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(g, v, len, &mut vec![u], &mut out);
    out
}

fn mask_of(g: &Graph, path: &[Vertex]) -> Mask {
    path.windows(2)
        .map(|w| 1u128 << g.edge_index(w[0], w[1]).unwrap())
        .fold(0, |a, b| a | b)
}

fn pairs_of(g: &Graph, u: Vertex, k: u32) -> Vec<Pair> {
    let d = bfs_distances(g, u).dist;
    (0..g.n())
        .filter(|&v| v != u && d[v] >= 1 && d[v] <= k)
        .map(|v| Pair {
            source: u,
            target: v,
            paths: walks(g, u, v, d[v] as usize)
                .into_iter()
                .map(|p| {
                    let m = mask_of(g, &p);
                    (p, m)
                })
                .collect(),
        })
        .collect()
}

fn weak_ok(per_source: &[Vec<Pair>], set: &[Vertex], full: Mask) -> bool {
    let mut acc = 0;
    for &u in set {
        for p in &per_source[u] {
            for (_, m) in &p.paths {
                acc |= m;
            }
        }
    }
    acc == full
}

fn strong_witness(
    g: &Graph,
    per_source: &[Vec<Pair>],
    set: &[Vertex],
    full: Mask,
    counter: &Counter,
) -> Result<Option<StrongWitness>, SolveError> {
    let pairs: Vec<&Pair> = set.iter().flat_map(|&u| per_source[u].iter()).collect();
    // stage i maps each reachable mask to (mask before pair i, chosen path)
    let mut stages: Vec<HashMap<Mask, (Mask, usize)>> = Vec::with_capacity(pairs.len());
    let mut frontier: Vec<Mask> = vec![0];
    for p in &pairs {
        let mut next: HashMap<Mask, (Mask, usize)> = HashMap::new();
        for &r in &frontier {
            for (i, (_, m)) in p.paths.iter().enumerate() {
                next.entry(r | m).or_insert((r, i));
            }
        }
        counter.add(next.len() as u64)?;
        frontier = next.keys().copied().collect();
        stages.push(next);
    }
    if !frontier.contains(&full) {
        return Ok(None);
    }
    let mut assignments = Vec::with_capacity(pairs.len());
    let mut cur = full;
    for (p, stage) in pairs.iter().zip(&stages).rev() {
        let (prev, i) = stage[&cur];
        assignments.push(Assignment {
            source: p.source,
            target: p.target,
            path: p.paths[i].0.clone(),
        });
        cur = prev;
    }
    Ok(Some(StrongWitness::from_assignments(g, assignments)))
}

/// Optimum by trying every subset in ascending size; only for small graphs.
pub fn naive_oracle(g: &Graph, k: u32, variant: Variant, cfg: &SolverConfig) -> Result<SolveResult, SolveError> {
    assert!(k >= 1, "k must be positive");
    g.require_connected()?;
    check_limit("oracle", g.n(), cfg.oracle_limit)?;
    // edge masks are single u128 words
    check_limit("oracle edges", g.m(), Mask::BITS as usize)?;
    let start = Instant::now();
    let counter = Counter::new(cfg.node_budget);
    let n = g.n();
    let full: Mask = if g.m() == 128 { Mask::MAX } else { (1 << g.m()) - 1 };
    let per_source: Vec<Vec<Pair>> = (0..n).map(|u| pairs_of(g, u, k)).collect();

    let mut found = None;
    'sizes: for t in 0..=n {
        for set in (0..n).combinations(t) {
            counter.tick()?;
            match variant {
                Variant::Weak => {
                    if weak_ok(&per_source, &set, full) {
                        found = Some((set, None));
                        break 'sizes;
                    }
                }
                Variant::Strong => {
                    if let Some(w) = strong_witness(g, &per_source, &set, full, &counter)? {
                        found = Some((set, Some(w)));
                        break 'sizes;
                    }
                }
            }
        }
    }
    let (set, witness) = found.expect("the whole vertex set is a cover");
    Ok(SolveResult {
        variant,
        k,
        optimum: set.len(),
        set,
        witness,
        status: SolveStatus::Exact,
        stats: SolveStats {
            nodes: counter.nodes(),
            elapsed_ms: elapsed_ms(start),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::verify_strong_witness;

    #[test]
    fn small_examples() {
        let e: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let c5 = Graph::new(5, &e).unwrap();
        let r = naive_oracle(&c5, 2, Variant::Strong, &SolverConfig::default()).unwrap();
        assert_eq!((r.optimum, r.set.clone()), (2, vec![0, 1]));
        // every pair is assigned, not only the ones needed
        let w = r.witness.unwrap();
        assert_eq!(w.assignments.len(), 8);
        assert!(verify_strong_witness(&c5, &r.set, 2, &w));

        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let r = naive_oracle(&star, 2, Variant::Weak, &SolverConfig::default()).unwrap();
        assert_eq!(r.optimum, 1);
    }

    #[test]
    fn refuses_large_graphs() {
        let e: Vec<_> = (1..13).map(|i| (i - 1, i)).collect();
        let p13 = Graph::new(13, &e).unwrap();
        let err = naive_oracle(&p13, 2, Variant::Weak, &SolverConfig::default()).unwrap_err();
        assert!(err.is_size_limit());
    }
}
