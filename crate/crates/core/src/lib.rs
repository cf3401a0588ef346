//! Weak and strong k-shortest-path union covers of graphs.
//!
//! A set `S` of vertices is a weak cover when every edge lies on some
//! geodesic of length at most `k` that starts in `S`. It is a strong cover
//! when one geodesic can be fixed per pair `(u, v)` with `u ∈ S` and
//! `1 <= d(u, v) <= k` such that the fixed paths together cover every edge.

pub mod bitset;
pub mod cover;
pub mod families;
pub mod graph;
pub mod harness;
pub mod par;
pub mod reduction;
pub mod solvers;

pub use bitset::{BitSet, EdgeSet};
pub use cover::{strong_feasible, verify_strong_witness, verify_weak_cover, weak_cover_set, StrongWitness};
pub use families::{generate, Family, FamilyError, FamilySpec};
pub use graph::{Graph, GraphError, Vertex};
pub use solvers::{
    compute_bounds, naive_oracle, solve_exact, solve_greedy, Bounds, SolveError, SolveResult, SolverConfig, Variant,
};
