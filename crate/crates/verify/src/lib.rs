//! Exhaustive verification of the closed forms in `idxsum-core` against
//! brute-force enumeration.
//!
//! Each theorem id is a [`Check`] built by a factory in a [`Registry`]. The
//! runner walks an integer range in parallel, builds the oracle profile of
//! each integer at most once, hands it to every check whose range covers it,
//! and merges the tallies in increasing order of the integer.

pub mod check;
pub mod checks;
pub mod report;
pub mod runner;

pub use check::{default_registry, Check, CheckFactory, Registry, Subject, TaskOptions, Tally};
pub use report::{Mismatch, ScopeNote, Status, TheoremReport, VerificationReport};
pub use runner::{run_suite, verify_theorem, SuiteConfig, VerificationTask, DEFAULT_SEED};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("invalid range [{0}, {1}]: the lower bound must be at least 1")]
    InvalidRange(u64, u64),
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}
