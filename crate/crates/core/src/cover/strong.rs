//! Exact strong-cover feasibility.
//!
//! A set `S` is a strong cover when one geodesic can be fixed for every pair
//! `(u, v)`, `u ∈ S`, `1 <= d(u, v) <= k`, so that the fixed paths cover every
//! edge. Pairs with a unique geodesic are forced. The remaining pairs are
//! searched by backtracking on the uncovered edge with the fewest options:
//! some still-unused pair must route one of its geodesics through it. Failed
//! `(covered, used pairs)` states are memoised. Pairs never branched on are
//! left out of the witness; adding their paths could only grow the union.

use std::collections::HashSet;

use super::witness::{Assignment, StrongWitness};
use crate::bitset::{BitSet, EdgeSet};
use crate::graph::{bfs_distances, enumerate_geodesics, Graph, GraphError, Vertex};

// memo entries kept per feasibility call before the table is flushed
const MEMO_LIMIT: usize = 1 << 20;

/// A pair with more than one geodesic.
#[derive(Debug, Clone)]
pub struct FreePair {
    pub source: Vertex,
    pub target: Vertex,
    /// Lexicographic order.
    pub paths: Vec<Vec<Vertex>>,
    pub masks: Vec<EdgeSet>,
    /// Union of `masks`.
    pub reach: EdgeSet,
}

/// Everything one source contributes at distance `k`.
#[derive(Debug, Clone)]
pub struct SourceTable {
    pub source: Vertex,
    /// Union of all geodesics of length `<= k` from the source.
    pub weak: EdgeSet,
    pub forced: Vec<Assignment>,
    pub forced_mask: EdgeSet,
    pub free: Vec<FreePair>,
}

impl SourceTable {
    pub fn build(g: &Graph, u: Vertex, k: u32, cap: usize) -> Result<SourceTable, GraphError> {
        g.check_vertex(u)?;
        let d = bfs_distances(g, u).dist;
        let m = g.m();
        let mut table = SourceTable {
            source: u,
            weak: EdgeSet::new(m),
            forced: Vec::new(),
            forced_mask: EdgeSet::new(m),
            free: Vec::new(),
        };
        for (v, &dv) in d.iter().enumerate() {
            if v == u || dv == 0 || dv > k {
                continue;
            }
            let paths = enumerate_geodesics(g, u, v, cap)?;
            let masks: Vec<EdgeSet> = paths.iter().map(|p| path_mask(g, p)).collect();
            let mut reach = EdgeSet::new(m);
            for mk in &masks {
                reach.union_with(mk);
            }
            table.weak.union_with(&reach);
            if paths.len() == 1 {
                table.forced_mask.union_with(&reach);
                table.forced.push(Assignment {
                    source: u,
                    target: v,
                    path: paths.into_iter().next().unwrap(),
                });
            } else {
                table.free.push(FreePair {
                    source: u,
                    target: v,
                    paths,
                    masks,
                    reach,
                });
            }
        }
        Ok(table)
    }
}

pub fn path_mask(g: &Graph, path: &[Vertex]) -> EdgeSet {
    let mut s = EdgeSet::new(g.m());
    for w in path.windows(2) {
        s.insert(g.edge_index(w[0], w[1]).expect("path steps are edges"));
    }
    s
}

/// Per-source geodesic tables for a fixed graph and `k`.
#[derive(Debug, Clone)]
pub struct StrongIndex<'g> {
    g: &'g Graph,
    k: u32,
    rows: Vec<Option<SourceTable>>,
}

/// Outcome of one feasibility search.
#[derive(Debug, Clone)]
pub struct Feasibility {
    pub witness: Option<StrongWitness>,
    pub nodes: u64,
}

impl<'g> StrongIndex<'g> {
    pub fn build(g: &'g Graph, k: u32, cap: usize) -> Result<Self, GraphError> {
        let all: Vec<Vertex> = (0..g.n()).collect();
        Self::for_sources(g, k, &all, cap)
    }

    pub fn for_sources(g: &'g Graph, k: u32, sources: &[Vertex], cap: usize) -> Result<Self, GraphError> {
        let mut rows = vec![None; g.n()];
        for &u in sources {
            g.check_vertex(u)?;
            if rows[u].is_none() {
                rows[u] = Some(SourceTable::build(g, u, k, cap)?);
            }
        }
        Ok(StrongIndex { g, k, rows })
    }

    /// Index over prebuilt tables, one per source vertex.
    pub fn from_tables(g: &'g Graph, k: u32, tables: Vec<SourceTable>) -> Self {
        let mut rows = vec![None; g.n()];
        for t in tables {
            let u = t.source;
            rows[u] = Some(t);
        }
        StrongIndex { g, k, rows }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn row(&self, u: Vertex) -> &SourceTable {
        self.rows[u].as_ref().expect("source not indexed")
    }

    /// Exact search for a witness; `set` must consist of indexed sources.
    pub fn feasible(&self, set: &[Vertex]) -> Feasibility {
        let g = self.g;
        let m = g.m();
        let mut sources: Vec<Vertex> = set.to_vec();
        sources.sort_unstable();
        sources.dedup();
        let rows: Vec<&SourceTable> = sources.iter().map(|&u| self.row(u)).collect();

        let mut covered = EdgeSet::new(m);
        let mut weak = EdgeSet::new(m);
        for r in &rows {
            covered.union_with(&r.forced_mask);
            weak.union_with(&r.weak);
        }
        if !weak.is_full() {
            return Feasibility {
                witness: None,
                nodes: 0,
            };
        }

        let pairs: Vec<&FreePair> = rows.iter().flat_map(|r| r.free.iter()).collect();
        let mut by_edge: Vec<Vec<(u32, u32)>> = vec![Vec::new(); m];
        for (pi, p) in pairs.iter().enumerate() {
            for (ci, mask) in p.masks.iter().enumerate() {
                for e in mask.iter() {
                    if !covered.contains(e) {
                        by_edge[e].push((pi as u32, ci as u32));
                    }
                }
            }
        }

        let mut search = Search {
            pairs: &pairs,
            by_edge,
            failed: HashSet::new(),
            chosen: Vec::new(),
            nodes: 0,
        };
        let mut used = BitSet::new(pairs.len());
        let found = search.dfs(&covered, &mut used);
        let nodes = search.nodes;
        let witness = found.then(|| {
            let mut assignments: Vec<Assignment> = rows.iter().flat_map(|r| r.forced.iter().cloned()).collect();
            for &(pi, ci) in &search.chosen {
                let p = pairs[pi as usize];
                assignments.push(Assignment {
                    source: p.source,
                    target: p.target,
                    path: p.paths[ci as usize].clone(),
                });
            }
            StrongWitness::from_assignments(g, assignments)
        });
        Feasibility { witness, nodes }
    }
}

struct Search<'a> {
    pairs: &'a [&'a FreePair],
    by_edge: Vec<Vec<(u32, u32)>>,
    failed: HashSet<(EdgeSet, BitSet)>,
    chosen: Vec<(u32, u32)>,
    nodes: u64,
}

impl Search<'_> {
    fn dfs(&mut self, covered: &EdgeSet, used: &mut BitSet) -> bool {
        self.nodes += 1;
        if covered.is_full() {
            return true;
        }

        // every edge still reachable, and enough room: each unused pair adds one path
        let mut reach = covered.clone();
        let mut room = 0;
        for (pi, p) in self.pairs.iter().enumerate() {
            if !used.contains(pi) {
                reach.union_with(&p.reach);
                room += p.masks.iter().map(|mk| mk.difference_len(covered)).max().unwrap_or(0);
            }
        }
        let missing = covered.width() - covered.len();
        if !reach.is_full() || room < missing {
            return false;
        }

        let key = (covered.clone(), used.clone());
        if self.failed.contains(&key) {
            return false;
        }

        // branch on the uncovered edge with the fewest live candidates
        let mut e = usize::MAX;
        let mut fewest = usize::MAX;
        for x in (0..covered.width()).filter(|&x| !covered.contains(x)) {
            let live = self.by_edge[x]
                .iter()
                .filter(|(pi, _)| !used.contains(*pi as usize))
                .count();
            if live < fewest {
                fewest = live;
                e = x;
                if live <= 1 {
                    break;
                }
            }
        }

        let candidates = self.by_edge[e].clone();
        for (pi, ci) in candidates {
            if used.contains(pi as usize) {
                continue;
            }
            used.insert(pi as usize);
            self.chosen.push((pi, ci));
            let next = covered.union(&self.pairs[pi as usize].masks[ci as usize]);
            if self.dfs(&next, used) {
                return true;
            }
            self.chosen.pop();
            used.remove(pi as usize);
        }

        if self.failed.len() >= MEMO_LIMIT {
            self.failed.clear();
        }
        self.failed.insert(key);
        false
    }
}

/// Witness for `set` at distance `k`, if one exists.
pub fn strong_feasible(g: &Graph, set: &[Vertex], k: u32, cap: usize) -> Result<Option<StrongWitness>, GraphError> {
    let index = StrongIndex::for_sources(g, k, set, cap)?;
    Ok(index.feasible(set).witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::verify_strong_witness;
    use crate::graph::DEFAULT_GEODESIC_CAP as CAP;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn k23() -> Graph {
        Graph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn c5_examples() {
        let g = cycle(5);
        assert!(strong_feasible(&g, &[0], 2, CAP).unwrap().is_none());
        let w = strong_feasible(&g, &[0, 2], 2, CAP).unwrap().unwrap();
        assert!(verify_strong_witness(&g, &[0, 2], 2, &w));
        assert!(w.covered.is_full());
    }

    #[test]
    fn k23_single_source_is_not_strong() {
        let g = k23();
        assert!(strong_feasible(&g, &[0], 2, CAP).unwrap().is_none());
        // u1's pairs: three forced edges and one two-edge path to u2
        let row = SourceTable::build(&g, 0, 2, CAP).unwrap();
        assert_eq!(row.forced.len(), 3);
        assert_eq!(row.free.len(), 1);
        assert_eq!(row.free[0].paths.len(), 3);
        assert!(strong_feasible(&g, &[0, 1], 2, CAP).unwrap().is_some());
    }

    #[test]
    fn witness_text_round_trip() {
        let g = cycle(5);
        let w = strong_feasible(&g, &[0, 2], 2, CAP).unwrap().unwrap();
        let back = StrongWitness::parse(&g, &w.to_text()).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn rejects_bad_witnesses() {
        let g = cycle(5);
        let w = strong_feasible(&g, &[0, 2], 2, CAP).unwrap().unwrap();

        let mut detour = w.clone();
        detour.assignments.push(Assignment {
            source: 0,
            target: 3,
            path: vec![0, 1, 2, 3],
        });
        let detour = StrongWitness::from_assignments(&g, detour.assignments);
        assert!(!verify_strong_witness(&g, &[0, 2], 2, &detour));

        // dropping source 2 leaves edge 2-3 uncovered
        let missing: Vec<_> = w.assignments.iter().filter(|a| a.source == 0).cloned().collect();
        let missing = StrongWitness::from_assignments(&g, missing);
        assert!(!verify_strong_witness(&g, &[0, 2], 2, &missing));

        let mut dup = w.clone();
        dup.assignments.push(dup.assignments[0].clone());
        let dup = StrongWitness::from_assignments(&g, dup.assignments);
        assert!(!verify_strong_witness(&g, &[0, 2], 2, &dup));

        // source outside the claimed set
        assert!(!verify_strong_witness(&g, &[0], 2, &w));
    }

    #[test]
    fn whole_vertex_set_is_always_strong() {
        for n in 3..9 {
            let g = cycle(n);
            let all: Vec<_> = (0..n).collect();
            for k in 1..4 {
                assert!(strong_feasible(&g, &all, k, CAP).unwrap().is_some());
            }
        }
    }
}
