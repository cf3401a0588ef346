//! Claims registry, claim verification, bound sandwich checks and result export.

mod claims;
mod export;
mod sandwich;
mod verify;

pub use claims::{claims_registry, lookup, ClaimKind, ClaimRecord};
pub use export::{write_csv, write_json, GraphInfo, ResultRecord, SCHEMA_VERSION};
pub use sandwich::{sandwich_violations, BoundViolation};
pub use verify::{skipped_by_policy, verify_claims, ClaimSelection, ClaimStatus, DiscrepancyReport};
