//! Exact truncated power series over the integers, the q-series built from
//! double Lambert sums, and a harness that checks identities between them
//! coefficient by coefficient.

pub mod builders;
pub mod cli;
pub mod divisor;
pub mod error;
pub mod format;
pub mod series;
pub mod verify;

pub use divisor::{sigma_gf, sigma_naive, sigma_sieve, SigmaTable};
pub use error::{Error, Result};
pub use series::{Accumulator, ExpTerm, Series, Sign};
pub use verify::{
    find_case, registry, verify, verify_all, verify_with, CompareMode, IdentityCase, Rhs,
    VerifyOptions, VerifyReport,
};
