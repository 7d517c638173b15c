//! Command-line front end for `ribbon-core`: argument parsing, JSON formats and
//! the subcommands behind the `ribbon` binary.

pub mod args;
pub mod commands;
pub mod error;
pub mod json;
pub mod parallel;

pub use error::{exit, CliError};
