//! Exact, greedy and oracle optimizers for both cover variants, plus bounds.

mod bounds;
mod exact;
mod greedy;
mod oracle;
mod setcover;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cover::StrongWitness;
use crate::graph::{GraphError, Vertex, DEFAULT_CLIQUE_CAP, DEFAULT_GEODESIC_CAP};

pub use bounds::{compute_bounds, domination_number, Bound, Bounds};
pub use exact::{min_vertex_cover, solve_exact};
pub use greedy::solve_greedy;
pub use oracle::naive_oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Weak,
    Strong,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Weak => "weak",
            Variant::Strong => "strong",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "weak" => Ok(Variant::Weak),
            "strong" => Ok(Variant::Strong),
            other => Err(format!("unknown variant `{other}` (expected weak or strong)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveStatus {
    Exact,
    Heuristic,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub variant: Variant,
    pub k: u32,
    pub optimum: usize,
    /// Sorted ascending.
    pub set: Vec<Vertex>,
    /// Present for strong results.
    pub witness: Option<StrongWitness>,
    pub status: SolveStatus,
    pub stats: SolveStats,
}

#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Largest `n` accepted by the exact weak solver.
    pub weak_limit: usize,
    /// Largest `n` accepted by the exact strong solver.
    pub strong_limit: usize,
    /// Largest `n` accepted by the naive oracle.
    pub oracle_limit: usize,
    pub geodesic_cap: usize,
    pub clique_cap: usize,
    /// Run branch exploration on the thread pool (needs the `parallel` feature).
    pub parallel: bool,
    /// Abort with [`SolveError::NodeBudget`] after this many search nodes.
    pub node_budget: Option<u64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            weak_limit: 40,
            strong_limit: 34,
            oracle_limit: 12,
            geodesic_cap: DEFAULT_GEODESIC_CAP,
            clique_cap: DEFAULT_CLIQUE_CAP,
            parallel: true,
            node_budget: None,
        }
    }
}

impl SolverConfig {
    pub fn sequential() -> Self {
        SolverConfig {
            parallel: false,
            ..SolverConfig::default()
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has {n} vertices, above the {what} limit of {limit}")]
    SizeLimit { what: &'static str, n: usize, limit: usize },
    #[error("search exceeded the node budget of {budget}")]
    NodeBudget { budget: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl SolveError {
    /// Size and budget failures; everything else is an input problem.
    pub fn is_size_limit(&self) -> bool {
        matches!(self, SolveError::SizeLimit { .. } | SolveError::NodeBudget { .. })
    }
}

/// Search-node counter shared across worker threads.
#[derive(Debug)]
pub(crate) struct Counter {
    nodes: AtomicU64,
    budget: Option<u64>,
}

impl Counter {
    pub(crate) fn new(budget: Option<u64>) -> Counter {
        Counter {
            nodes: AtomicU64::new(0),
            budget,
        }
    }

    pub(crate) fn tick(&self) -> Result<(), SolveError> {
        self.add(1)
    }

    pub(crate) fn add(&self, n: u64) -> Result<(), SolveError> {
        let now = self.nodes.fetch_add(n, Ordering::Relaxed) + n;
        match self.budget {
            Some(budget) if now > budget => Err(SolveError::NodeBudget { budget }),
            _ => Ok(()),
        }
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }
}

pub(crate) fn check_limit(what: &'static str, n: usize, limit: usize) -> Result<(), SolveError> {
    if n > limit {
        Err(SolveError::SizeLimit { what, n, limit })
    } else {
        Ok(())
    }
}
