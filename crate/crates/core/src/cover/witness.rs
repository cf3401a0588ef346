use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::bitset::EdgeSet;
use crate::graph::{bfs_distances, Graph, GraphError, Vertex};

/// One fixed geodesic for the pair `(source, target)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Assignment {
    pub source: Vertex,
    pub target: Vertex,
    pub path: Vec<Vertex>,
}

/// Per-pair geodesic choices certifying a strong cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongWitness {
    /// Sorted by `(source, target)`.
    pub assignments: Vec<Assignment>,
    /// Union of the assigned path edges.
    pub covered: EdgeSet,
}

impl StrongWitness {
    /// Sorts the assignments and recomputes `covered`; steps that are not
    /// graph edges contribute nothing.
    pub fn from_assignments(g: &Graph, mut assignments: Vec<Assignment>) -> StrongWitness {
        assignments.sort();
        let mut covered = EdgeSet::new(g.m());
        for a in &assignments {
            for w in a.path.windows(2) {
                if let Some(e) = g.edge_index(w[0], w[1]) {
                    covered.insert(e);
                }
            }
        }
        StrongWitness { assignments, covered }
    }

    /// One line per assignment: `u v : p0 p1 ... pd`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for a in &self.assignments {
            let _ = write!(out, "{} {} :", a.source, a.target);
            for p in &a.path {
                let _ = write!(out, " {p}");
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(g: &Graph, text: &str) -> Result<StrongWitness, GraphError> {
        let mut assignments = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| GraphError::Parse {
                line: idx + 1,
                msg: msg.to_string(),
            };
            let (head, path) = line.split_once(':').ok_or_else(|| err("missing ':'"))?;
            let nums = |s: &str| -> Result<Vec<usize>, GraphError> {
                s.split_whitespace()
                    .map(|t| t.parse().map_err(|_| err("bad vertex id")))
                    .collect()
            };
            let head = nums(head)?;
            let path = nums(path)?;
            if head.len() != 2 {
                return Err(err("expected `u v` before ':'"));
            }
            if let Some(&v) = head.iter().chain(&path).find(|&&v| v >= g.n()) {
                return Err(GraphError::VertexOutOfRange { v, n: g.n() });
            }
            assignments.push(Assignment {
                source: head[0],
                target: head[1],
                path,
            });
        }
        Ok(StrongWitness::from_assignments(g, assignments))
    }
}

/// Checks that every assigned path is a geodesic of length `1..=k` from a
/// source in `set`, that no pair is assigned twice, and that the assigned
/// edges are exactly the edge set of `g`.
pub fn verify_strong_witness(g: &Graph, set: &[Vertex], k: u32, w: &StrongWitness) -> bool {
    let sources: BTreeSet<Vertex> = set.iter().copied().collect();
    let mut seen = BTreeSet::new();
    let mut covered = EdgeSet::new(g.m());
    let mut dist_cache: Vec<Option<Vec<u32>>> = vec![None; g.n()];

    for a in &w.assignments {
        if !sources.contains(&a.source) || a.target >= g.n() || !seen.insert((a.source, a.target)) {
            return false;
        }
        if a.path.first() != Some(&a.source) || a.path.last() != Some(&a.target) {
            return false;
        }
        let len = a.path.len() - 1;
        let d = dist_cache[a.source].get_or_insert_with(|| bfs_distances(g, a.source).dist);
        if len == 0 || len as u32 != d[a.target] || len as u32 > k {
            return false;
        }
        for step in a.path.windows(2) {
            match g.edge_index(step[0], step[1]) {
                Some(e) => {
                    covered.insert(e);
                }
                None => return false,
            }
        }
    }
    covered.is_full() && covered == w.covered
}
