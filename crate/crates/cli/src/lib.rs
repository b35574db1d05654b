//! Library side of the `rotsym` command-line tool: command implementations,
//! verification suites and their reports. `main.rs` only parses flags and
//! maps outcomes to exit codes.

pub mod commands;
mod error;
pub mod mask_spec;
pub mod report;
pub mod suites;

pub use error::{CliError, CliResult};
pub use report::{CheckRecord, CheckStatus, SuiteReport};
pub use suites::{run_suite, Suite, SuiteConfig};
