//! Coverage semantics for weak and strong shortest-path union covers.

mod strong;
mod weak;
mod witness;

pub use strong::{path_mask, strong_feasible, Feasibility, FreePair, SourceTable, StrongIndex};
pub use weak::{verify_weak_cover, weak_cover_set, weak_union};
pub use witness::{verify_strong_witness, Assignment, StrongWitness};
