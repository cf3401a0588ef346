//! Simple undirected graphs with dense vertex ids and canonical edge indices.

mod cliques;
pub mod io;
mod metric;

pub use cliques::{maximal_cliques, simplicial_vertices, DEFAULT_CLIQUE_CAP};
pub use metric::{
    bfs_distances, diameter, eccentricity, enumerate_geodesics, geodesic_dag, DistanceField, GeodesicDag,
    DEFAULT_GEODESIC_CAP, UNREACHABLE,
};

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("vertex {v} outside 0..{n}")]
    VertexOutOfRange { v: Vertex, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("geodesic count exceeds cap {cap}")]
    GeodesicOverflow { cap: usize },
    #[error("maximal clique count exceeds cap {cap}")]
    CliqueOverflow { cap: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("edge-list parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Immutable simple undirected graph.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically; the
/// position in that order is the edge's canonical index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    // parallel to `adj`: canonical index of the edge to each neighbor
    adj_edges: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Pairs may be given in either orientation.
    pub fn new(n: usize, edge_list: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        let adj_edges = adj
            .iter()
            .enumerate()
            .map(|(u, list)| {
                list.iter()
                    .map(|&v| {
                        edges
                            .binary_search(&(u.min(v), u.max(v)))
                            .expect("adjacency built from edge list")
                    })
                    .collect()
            })
            .collect();

        Ok(Graph {
            n,
            edges,
            adj,
            adj_edges,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (Vertex, Vertex) {
        self.edges[index]
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    /// Canonical edge indices parallel to [`Graph::neighbors`].
    #[inline]
    pub fn incident_edges(&self, v: Vertex) -> &[usize] {
        &self.adj_edges[v]
    }

    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adj[u].binary_search(&v).ok().map(|pos| self.adj_edges[u][pos])
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let d = bfs_distances(self, 0);
        d.dist.iter().all(|&x| x != UNREACHABLE)
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    pub(crate) fn require_connected(&self) -> Result<(), GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.edge_index(2, 1), Some(2));
        assert_eq!(g.neighbors(0), &[1, 2]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(Graph::new(4, &[(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert!(matches!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::EndpointOutOfRange { .. })
        ));
    }

    #[test]
    fn adjacency_matches_edges() {
        let g = Graph::new(5, &[(3, 1), (0, 4), (1, 0), (2, 3)]).unwrap();
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            assert!(u < v);
            assert_eq!(g.edge_index(u, v), Some(i));
            assert_eq!(g.edge_index(v, u), Some(i));
        }
        let deg_sum: usize = (0..5).map(|v| g.degree(v)).sum();
        assert_eq!(deg_sum, 2 * g.m());
        assert!(g.is_connected());
    }

    #[test]
    fn label_count_checked() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(g.clone().with_labels(vec!["a".into()]).is_err());
        let g = g.with_labels(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(g.label(1), Some("b"));
    }
}
