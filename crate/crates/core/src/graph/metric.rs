use std::collections::VecDeque;

use super::{Graph, GraphError, Vertex};
use crate::bitset::EdgeSet;

/// Distance sentinel for vertices outside the source's component.
pub const UNREACHABLE: u32 = u32::MAX;

/// Default per-pair cap for [`enumerate_geodesics`].
pub const DEFAULT_GEODESIC_CAP: usize = 100_000;

/// Unweighted distances from one source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceField {
    pub source: Vertex,
    pub dist: Vec<u32>,
}

impl DistanceField {
    pub fn get(&self, v: Vertex) -> Option<u32> {
        match self.dist[v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Largest finite distance.
    pub fn max_finite(&self) -> u32 {
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE)
            .max()
            .unwrap_or(0)
    }
}

pub fn bfs_distances(g: &Graph, u: Vertex) -> DistanceField {
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = VecDeque::new();
    dist[u] = 0;
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        let next = dist[x] + 1;
        for &y in g.neighbors(x) {
            if dist[y] == UNREACHABLE {
                dist[y] = next;
                queue.push_back(y);
            }
        }
    }
    DistanceField { source: u, dist }
}

pub fn eccentricity(g: &Graph, v: Vertex) -> Result<u32, GraphError> {
    g.check_vertex(v)?;
    let d = bfs_distances(g, v);
    if d.dist.contains(&UNREACHABLE) {
        return Err(GraphError::Disconnected);
    }
    Ok(d.max_finite())
}

pub fn diameter(g: &Graph) -> Result<u32, GraphError> {
    if g.n() == 0 {
        return Err(GraphError::Empty);
    }
    (0..g.n()).try_fold(0, |acc, v| Ok(acc.max(eccentricity(g, v)?)))
}

/// Directed geodesic arcs out of one source, truncated at depth `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicDag {
    pub source: Vertex,
    pub k: u32,
    /// Arcs `x -> y` with `d(source, x) + 1 = d(source, y) <= k`, sorted.
    pub arcs: Vec<(Vertex, Vertex)>,
}

impl GeodesicDag {
    /// Underlying undirected edges as a canonical edge set.
    pub fn edge_set(&self, g: &Graph) -> EdgeSet {
        let mut s = EdgeSet::new(g.m());
        for &(x, y) in &self.arcs {
            s.insert(g.edge_index(x, y).expect("arc is a graph edge"));
        }
        s
    }
}

pub fn geodesic_dag(g: &Graph, u: Vertex, k: u32) -> Result<GeodesicDag, GraphError> {
    g.check_vertex(u)?;
    let d = bfs_distances(g, u);
    let mut arcs = Vec::new();
    for &(a, b) in g.edges() {
        let (da, db) = (d.dist[a], d.dist[b]);
        if da == UNREACHABLE || da == db {
            continue;
        }
        let (x, y) = if da < db { (a, b) } else { (b, a) };
        if d.dist[y] <= k {
            arcs.push((x, y));
        }
    }
    arcs.sort_unstable();
    Ok(GeodesicDag { source: u, k, arcs })
}

/// Every geodesic from `u` to `v`, in lexicographic order of vertex sequences.
///
/// Fails with [`GraphError::GeodesicOverflow`] when the number of geodesics
/// exceeds `cap`; nothing is enumerated in that case.
pub fn enumerate_geodesics(g: &Graph, u: Vertex, v: Vertex, cap: usize) -> Result<Vec<Vec<Vertex>>, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let to_v = bfs_distances(g, v);
    if to_v.dist[u] == UNREACHABLE {
        return Err(GraphError::Disconnected);
    }
    // geodesic counts towards v, saturating just above the cap
    let mut order: Vec<Vertex> = (0..g.n()).filter(|&x| to_v.dist[x] != UNREACHABLE).collect();
    order.sort_by_key(|&x| to_v.dist[x]);
    let mut count = vec![0usize; g.n()];
    for &x in &order {
        count[x] = if x == v {
            1
        } else {
            g.neighbors(x)
                .iter()
                .filter(|&&y| to_v.dist[y] + 1 == to_v.dist[x])
                .fold(0usize, |acc, &y| acc.saturating_add(count[y]).min(cap + 1))
        };
    }
    if count[u] > cap {
        return Err(GraphError::GeodesicOverflow { cap });
    }

    let mut out = Vec::with_capacity(count[u]);
    let mut path = vec![u];
    walk(g, &to_v.dist, v, &mut path, &mut out);
    Ok(out)
}

fn walk(g: &Graph, to_v: &[u32], v: Vertex, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
    let x = *path.last().unwrap();
    if x == v {
        out.push(path.clone());
        return;
    }
    for &y in g.neighbors(x) {
        if to_v[y] + 1 == to_v[x] {
            path.push(y);
            walk(g, to_v, v, path, out);
            path.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn k23() -> Graph {
        // u1 = 0, u2 = 1; partners 2, 3, 4
        Graph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(bfs_distances(&cycle(5), 0).dist, vec![0, 1, 2, 2, 1]);
        assert_eq!(bfs_distances(&path(4), 0).dist, vec![0, 1, 2, 3]);
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let d = bfs_distances(&g, 0);
        assert_eq!(d.dist, vec![0, 1, UNREACHABLE, UNREACHABLE]);
        assert_eq!(d.get(2), None);
    }

    #[test]
    fn diameter_examples() {
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(diameter(&k4), Ok(1));
        assert_eq!(diameter(&cycle(6)), Ok(3));
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(diameter(&g), Err(GraphError::Disconnected));
    }

    #[test]
    fn dag_on_c5() {
        let g = cycle(5);
        let dag = geodesic_dag(&g, 0, 2).unwrap();
        assert_eq!(dag.arcs, vec![(0, 1), (0, 4), (1, 2), (4, 3)]);
        let e23 = g.edge_index(2, 3).unwrap();
        assert!(!dag.edge_set(&g).contains(e23));
        assert!(geodesic_dag(&g, 0, 0).unwrap().arcs.is_empty());
        assert_eq!(geodesic_dag(&path(3), 1, 1).unwrap().arcs.len(), 2);
    }

    #[test]
    fn geodesic_examples() {
        let paths = enumerate_geodesics(&k23(), 0, 1, DEFAULT_GEODESIC_CAP).unwrap();
        assert_eq!(paths, vec![vec![0, 2, 1], vec![0, 3, 1], vec![0, 4, 1]]);
        assert_eq!(enumerate_geodesics(&cycle(5), 0, 1, 10).unwrap(), vec![vec![0, 1]]);
        assert_eq!(enumerate_geodesics(&cycle(4), 0, 2, 10).unwrap().len(), 2);
        assert_eq!(
            enumerate_geodesics(&k23(), 0, 1, 2),
            Err(GraphError::GeodesicOverflow { cap: 2 })
        );
        assert_eq!(enumerate_geodesics(&cycle(4), 2, 2, 1).unwrap(), vec![vec![2]]);
    }
}
