use crate::bitset::EdgeSet;
use crate::graph::{bfs_distances, Graph, Vertex, UNREACHABLE};

/// Edges lying on some geodesic of length at most `k` that starts at `u`.
///
/// These are exactly the edges whose endpoints are at distances `d` and
/// `d + 1` from `u` with `d + 1 <= k`.
pub fn weak_cover_set(g: &Graph, u: Vertex, k: u32) -> EdgeSet {
    let d = bfs_distances(g, u).dist;
    let mut s = EdgeSet::new(g.m());
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        let (da, db) = (d[a], d[b]);
        if da == UNREACHABLE || da == db {
            continue;
        }
        if da.max(db) <= k {
            s.insert(i);
        }
    }
    s
}

pub fn weak_union(g: &Graph, set: &[Vertex], k: u32) -> EdgeSet {
    let mut s = EdgeSet::new(g.m());
    for &u in set {
        s.union_with(&weak_cover_set(g, u, k));
    }
    s
}

pub fn verify_weak_cover(g: &Graph, set: &[Vertex], k: u32) -> bool {
    set.iter().all(|&u| u < g.n()) && weak_union(g, set, k).is_full()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn c5_misses_opposite_edge() {
        let g = cycle(5);
        let s = weak_cover_set(&g, 0, 2);
        assert_eq!(s.len(), 4);
        assert!(!s.contains(g.edge_index(2, 3).unwrap()));
        assert!(!verify_weak_cover(&g, &[0], 2));
    }

    #[test]
    fn star_and_path() {
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(weak_cover_set(&star, 0, 1).is_full());
        let e: Vec<_> = (1..10).map(|i| (i - 1, i)).collect();
        let p10 = Graph::new(10, &e).unwrap();
        let s = weak_cover_set(&p10, 0, 2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn k23_single_source_covers_everything() {
        let g = Graph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(verify_weak_cover(&g, &[0], 2));
        let all: Vec<_> = (0..5).collect();
        assert!(verify_weak_cover(&cycle(7), &(0..7).collect::<Vec<_>>(), 1));
        assert!(verify_weak_cover(&g, &all, 1));
    }
}
