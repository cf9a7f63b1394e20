//! Checkers for the explicit inequalities, constant calculators, seeded
//! generators and batch runs.

mod abc;
mod batch;
mod bm;
mod campana_gap;
pub mod generators;
mod power;
mod report;

pub use abc::{abc_trichotomy, AbcParameters, TrichotomyReport};
pub use batch::{run_batch, BatchConfig, BatchKind, BatchReport, InstanceOutcome, Tally};
pub use bm::{bm_constants, brownawell_masser, proximity_bound, BmConstants};
pub use campana_gap::{campana_truncation_gap, TruncationGapReport};
pub use power::{example1_scan, perfect_power, PowerExponent, PowerReport, ScanHit, ScanHypotheses, ScanParameters, ScanReport};
pub use report::{InequalityReport, Precondition, Relation, Status};
