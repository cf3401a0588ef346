use std::time::Instant;

use super::exact::elapsed_ms;
use super::setcover::SetCover;
use super::{Counter, SolveError, SolveResult, SolveStats, SolveStatus, SolverConfig, Variant};
use crate::bitset::EdgeSet;
use crate::cover::{weak_cover_set, SourceTable, StrongIndex};
use crate::graph::{Graph, Vertex};
use crate::par;

/// Heuristic cover; always valid, never smaller than the optimum.
pub fn solve_greedy(g: &Graph, k: u32, variant: Variant, cfg: &SolverConfig) -> Result<SolveResult, SolveError> {
    assert!(k >= 1, "k must be positive");
    g.require_connected()?;
    let start = Instant::now();
    let counter = Counter::new(cfg.node_budget);
    let (set, witness) = match variant {
        Variant::Weak => {
            let sets: Vec<EdgeSet> = (0..g.n()).map(|v| weak_cover_set(g, v, k)).collect();
            let set = SetCover::new(&sets, g.m(), &counter)
                .greedy()
                .expect("every edge lies on a geodesic from its own endpoint");
            (set, None)
        }
        Variant::Strong => {
            let tables = par::map_collect(g.n(), cfg.parallel, |u| SourceTable::build(g, u, k, cfg.geodesic_cap));
            let tables = tables.into_iter().collect::<Result<Vec<_>, _>>()?;
            let index = StrongIndex::from_tables(g, k, tables);
            let mut set = greedy_strong_set(&index);
            let mut next = 0;
            let witness = loop {
                let f = index.feasible(&set);
                counter.add(f.nodes.max(1))?;
                if let Some(w) = f.witness {
                    break w;
                }
                while set.contains(&next) {
                    next += 1;
                }
                set.push(next);
                set.sort_unstable();
            };
            (set, Some(witness))
        }
    };
    Ok(SolveResult {
        variant,
        k,
        optimum: set.len(),
        set,
        witness,
        status: SolveStatus::Heuristic,
        stats: SolveStats {
            nodes: counter.nodes(),
            elapsed_ms: elapsed_ms(start),
        },
    })
}

/// Coverage after fixing, pair by pair, the geodesic that adds the most new edges.
fn greedy_assignment(row: &SourceTable, covered: &EdgeSet) -> EdgeSet {
    let mut out = covered.union(&row.forced_mask);
    for pair in &row.free {
        let best = pair
            .masks
            .iter()
            .enumerate()
            .map(|(i, mk)| (i, mk.difference_len(&out)))
            .fold((0, 0), |acc, x| if x.1 > acc.1 { x } else { acc });
        out.union_with(&pair.masks[best.0]);
    }
    out
}

fn greedy_strong_set(index: &StrongIndex<'_>) -> Vec<Vertex> {
    let g = index.graph();
    let mut covered = EdgeSet::new(g.m());
    let mut chosen: Vec<Vertex> = Vec::new();
    while !covered.is_full() {
        let mut best: Option<(Vertex, usize, EdgeSet)> = None;
        for v in (0..g.n()).filter(|v| !chosen.contains(v)) {
            let after = greedy_assignment(index.row(v), &covered);
            let gain = after.len() - covered.len();
            if best.as_ref().is_none_or(|b| gain > b.1) {
                best = Some((v, gain, after));
            }
        }
        let Some((v, gain, after)) = best else { break };
        if gain == 0 {
            break;
        }
        chosen.push(v);
        covered = after;
    }
    chosen.sort_unstable();
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::verify_strong_witness;

    #[test]
    fn c5_strong_matches_exact() {
        let e: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let g = Graph::new(5, &e).unwrap();
        let r = solve_greedy(&g, 2, Variant::Strong, &SolverConfig::default()).unwrap();
        assert_eq!(r.optimum, 2);
        assert_eq!(r.status, SolveStatus::Heuristic);
        assert!(verify_strong_witness(&g, &r.set, 2, r.witness.as_ref().unwrap()));
    }

    #[test]
    fn star_center() {
        let g = Graph::new(7, &(1..7).map(|i| (0, i)).collect::<Vec<_>>()).unwrap();
        let r = solve_greedy(&g, 1, Variant::Weak, &SolverConfig::default()).unwrap();
        assert_eq!(r.set, vec![0]);
    }
}
