//! Command-line frontend for `unitgroup-core`: group and field spec
//! parsing, JSON reports, and the verb dispatch used by the `unitgroup`
//! binary.

pub mod commands;
pub mod report;
pub mod spec;

pub use commands::{execute, run, Cli, CliError, Command};
pub use report::{Report, SCHEMA_VERSION};
pub use spec::{parse_field_spec, parse_group_spec, GroupSpec, SpecError};
