//! Verification suites, tables and reports on top of `vertexcalc-core`.

pub mod battery;
pub mod json;
pub mod oracles;
pub mod report;
pub mod suites;
pub mod tabulate;

pub use report::{Check, Status, SuiteReport};
pub use suites::{Config, Suite};
