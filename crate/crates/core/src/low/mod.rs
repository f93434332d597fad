//! Low elements, the smallest Garside family, and closed-form oracles.

mod family;
mod lowset;
mod oracle;

pub use family::{FamilyReport, GarsideFamily, Provenance};
pub use lowset::{ClosureReport, LowSet, DEFAULT_LOW_CAP};
pub use oracle::{alternating, OracleKind, TypeOracle, DEFAULT_GROUP_CAP};
