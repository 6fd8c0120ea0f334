//! Report plumbing and the randomized invariant suites behind the
//! `twocoset` binary.

pub mod input;
pub mod report;
pub mod suites;

pub use report::{exit_code, Status, Suite};
