//! Cycle files, JSON reports and the `vogel` command line.

pub mod commands;
pub mod cycfile;
pub mod error;
pub mod report;

pub use error::{CliError, CliResult};
