//! File formats, report suites and command implementations behind the
//! `ordbase` binary.

#![warn(missing_docs)]

pub mod commands;
pub mod error;
pub mod json;
pub mod suites;

pub use error::CliError;
