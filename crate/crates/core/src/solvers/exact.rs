use std::time::Instant;

use super::bounds::compute_bounds;
use super::setcover::SetCover;
use super::{check_limit, Counter, SolveError, SolveResult, SolveStats, SolveStatus, SolverConfig, Variant};
use crate::bitset::{BitSet, EdgeSet};
use crate::cover::{weak_cover_set, StrongIndex, StrongWitness};
use crate::graph::{Graph, Vertex};
use crate::par;

pub(crate) fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis().min(u64::MAX as u128) as u64
}

/// Provably optimal cover; the set is the lexicographically least optimum.
pub fn solve_exact(g: &Graph, k: u32, variant: Variant, cfg: &SolverConfig) -> Result<SolveResult, SolveError> {
    assert!(k >= 1, "k must be positive");
    g.require_connected()?;
    let start = Instant::now();
    let counter = Counter::new(cfg.node_budget);
    let (set, witness) = match variant {
        Variant::Weak => {
            check_limit("exact weak", g.n(), cfg.weak_limit)?;
            (weak_minimum(g, k, 0, &counter)?, None)
        }
        Variant::Strong => {
            check_limit("exact strong", g.n(), cfg.strong_limit)?;
            let (set, w) = strong_minimum(g, k, cfg, &counter)?;
            (set, Some(w))
        }
    };
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

fn weak_minimum(g: &Graph, k: u32, lower: usize, counter: &Counter) -> Result<Vec<Vertex>, SolveError> {
    let sets: Vec<EdgeSet> = (0..g.n()).map(|v| weak_cover_set(g, v, k)).collect();
    let best = SetCover::new(&sets, g.m(), counter).minimum(lower)?;
    Ok(best.expect("every edge lies on a geodesic from its own endpoint"))
}

/// Minimum vertex cover, lexicographically least among optima.
pub fn min_vertex_cover(g: &Graph, cfg: &SolverConfig) -> Result<Vec<Vertex>, SolveError> {
    check_limit("vertex cover", g.n(), cfg.weak_limit)?;
    let sets: Vec<BitSet> = (0..g.n())
        .map(|v| BitSet::from_indices(g.m(), g.incident_edges(v).iter().copied()))
        .collect();
    let counter = Counter::new(cfg.node_budget);
    let best = SetCover::new(&sets, g.m(), &counter).minimum(0)?;
    Ok(best.expect("incident edges cover every edge"))
}

struct StrongSearch<'a, 'g> {
    index: &'a StrongIndex<'g>,
    weak: Vec<EdgeSet>,
    /// Union of `weak[j]` for `j >= i`.
    suffix_union: Vec<EdgeSet>,
    /// Largest `|weak[j]|` for `j >= i`.
    suffix_max: Vec<usize>,
    counter: &'a Counter,
}

type Found = (Vec<Vertex>, StrongWitness);

impl StrongSearch<'_, '_> {
    /// First strong cover of size `t` whose least vertex is `first`, in lex order.
    fn starting_at(&self, t: usize, first: Vertex) -> Result<Option<Found>, SolveError> {
        let mut chosen = vec![first];
        self.extend(t, first + 1, &self.weak[first].clone(), &mut chosen)
    }

    fn extend(
        &self,
        t: usize,
        start: usize,
        union: &EdgeSet,
        chosen: &mut Vec<Vertex>,
    ) -> Result<Option<Found>, SolveError> {
        self.counter.tick()?;
        let n = self.weak.len();
        if chosen.len() == t {
            if !union.is_full() {
                return Ok(None);
            }
            let f = self.index.feasible(chosen);
            self.counter.add(f.nodes)?;
            return Ok(f.witness.map(|w| (chosen.clone(), w)));
        }
        let r = t - chosen.len();
        if start + r > n {
            return Ok(None);
        }
        if !union.union(&self.suffix_union[start]).is_full() {
            return Ok(None);
        }
        let missing = union.width() - union.len();
        if missing > r * self.suffix_max[start] {
            return Ok(None);
        }
        // adding sources never hurts, so the chosen prefix plus every later vertex must work
        let mut widest = chosen.clone();
        widest.extend(start..n);
        let f = self.index.feasible(&widest);
        self.counter.add(f.nodes)?;
        if f.witness.is_none() {
            return Ok(None);
        }
        for v in start..=n - r {
            chosen.push(v);
            let found = self.extend(t, v + 1, &union.union(&self.weak[v]), chosen)?;
            chosen.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

fn strong_minimum(g: &Graph, k: u32, cfg: &SolverConfig, counter: &Counter) -> Result<Found, SolveError> {
    let n = g.n();
    let m = g.m();
    if m == 0 {
        let w = StrongWitness::from_assignments(g, Vec::new());
        return Ok((Vec::new(), w));
    }

    let bounds = compute_bounds(g, k, cfg)?;
    let weak_opt = weak_minimum(g, k, bounds.weak_lower(), counter)?.len();
    let lower = weak_opt.max(bounds.strong_lower()).max(1);

    let rows = par::map_collect(n, cfg.parallel, |u| {
        crate::cover::SourceTable::build(g, u, k, cfg.geodesic_cap)
    });
    let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    let index = StrongIndex::from_tables(g, k, rows);

    let weak: Vec<EdgeSet> = (0..n).map(|v| index.row(v).weak.clone()).collect();
    let mut suffix_union = vec![EdgeSet::new(m); n + 1];
    let mut suffix_max = vec![0; n + 1];
    for i in (0..n).rev() {
        suffix_union[i] = suffix_union[i + 1].union(&weak[i]);
        suffix_max[i] = suffix_max[i + 1].max(weak[i].len());
    }
    let search = StrongSearch {
        index: &index,
        weak,
        suffix_union,
        suffix_max,
        counter,
    };

    for t in lower..=n {
        let hit = par::find_first(n + 1 - t, cfg.parallel, |first| match search.starting_at(t, first) {
            Ok(None) => None,
            other => Some(other),
        });
        if let Some(found) = hit {
            return found.map(|f| f.expect("hits carry a witness"));
        }
    }
    unreachable!("the whole vertex set is a strong cover")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{verify_strong_witness, verify_weak_cover};
    use crate::families::generate;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn fam(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap()
    }

    fn strong(g: &Graph, k: u32) -> SolveResult {
        let r = solve_exact(g, k, Variant::Strong, &SolverConfig::default()).unwrap();
        assert!(verify_strong_witness(g, &r.set, k, r.witness.as_ref().unwrap()));
        r
    }

    #[test]
    fn paths() {
        assert_eq!(strong(&path(7), 2).optimum, 2);
        let p10 = strong(&path(10), 2);
        assert_eq!(p10.optimum, 3);
        assert_eq!(p10.set, vec![0, 3, 7]);
    }

    #[test]
    fn complete_bipartite_k23() {
        let g = fam("complete_bipartite(2,3)");
        assert_eq!(strong(&g, 2).optimum, 2);
        let w = solve_exact(&g, 2, Variant::Weak, &SolverConfig::default()).unwrap();
        assert_eq!((w.optimum, w.set.clone()), (1, vec![0]));
        assert!(verify_weak_cover(&g, &w.set, 2));
        assert!(w.witness.is_none());
    }

    #[test]
    fn petersen() {
        assert_eq!(strong(&fam("generalized_petersen(5,2)"), 2).optimum, 3);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let g = fam("butterfly(2)");
        for variant in [Variant::Weak, Variant::Strong] {
            let a = solve_exact(&g, 2, variant, &SolverConfig::sequential()).unwrap();
            let b = solve_exact(&g, 2, variant, &SolverConfig::default()).unwrap();
            assert_eq!((a.optimum, &a.set, &a.witness), (b.optimum, &b.set, &b.witness));
        }
    }

    #[test]
    fn limits_and_inputs() {
        let cfg = SolverConfig {
            strong_limit: 5,
            ..SolverConfig::default()
        };
        let err = solve_exact(&path(7), 2, Variant::Strong, &cfg).unwrap_err();
        assert!(err.is_size_limit());
        let split = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let err = solve_exact(&split, 2, Variant::Weak, &cfg).unwrap_err();
        assert!(!err.is_size_limit());
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(strong(&k1, 1).optimum, 0);
    }

    #[test]
    fn vertex_cover() {
        let c5: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let g = Graph::new(5, &c5).unwrap();
        assert_eq!(min_vertex_cover(&g, &SolverConfig::default()).unwrap(), vec![0, 1, 3]);
    }
}
