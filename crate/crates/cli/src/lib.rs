//! Command-line front end: argument grammar, dispatch and reports.

pub mod command;
pub mod report;
pub mod run;
mod selftest;

pub use command::{Cli, Command, Format, GlobalOpts};
pub use report::{Report, Status};
pub use run::{run, run_batch, CliError};

/// JSON schema that every report validates against.
pub const SCHEMA: &str = include_str!("../schema/report.schema.json");
