//! Extremal real numbers from integer matrix recurrences.
//!
//! The crate builds the recurrence sequences, encloses their limits with
//! rigorous error bounds, cross-checks them against brute-force Diophantine
//! scans, certifies the quantitative growth and approximation conditions,
//! and searches for polynomial relations among consecutive terms.

pub mod arith;
pub mod error;
pub mod extremal;
pub mod fixed;
pub mod minimal;
pub mod verify;
pub mod par;
pub mod relation;

pub use arith::*;
pub use error::{Error, Result};
pub use par::Execution;
