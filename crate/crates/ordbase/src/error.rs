//! Errors surfaced by the command-line front end.

use std::path::PathBuf;

use ordbase_core::domains::DomainError;
use ordbase_core::poset::PosetError;
use ordbase_core::rational::ParseRationalError;
use ordbase_core::topology::TopologyError;

/// Everything that can stop a command before it produces a report.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// A file could not be read or written.
    #[error("{path}: {source}")]
    Io {
        /// The file involved.
        path: PathBuf,
        /// The underlying error.
        source: std::io::Error,
    },
    /// Malformed JSON or a missing field.
    #[error("parse error: {0}")]
    Json(#[from] serde_json::Error),
    /// A malformed fraction.
    #[error("parse error: {0}")]
    Rational(ParseRationalError),
    /// Malformed input that is neither JSON nor a fraction.
    #[error("parse error: {0}")]
    Parse(String),
    /// The input is not a partial order, or too large for an oracle.
    #[error("{0}")]
    Poset(PosetError),
    /// A multi-utility or topology precondition failed.
    #[error("{0}")]
    Topology(TopologyError),
    /// A domain algorithm rejected its input.
    #[error("{0}")]
    Domain(DomainError),
}

impl From<PosetError> for CliError {
    fn from(e: PosetError) -> Self {
        CliError::Poset(e)
    }
}

impl From<TopologyError> for CliError {
    fn from(e: TopologyError) -> Self {
        CliError::Topology(e)
    }
}

impl From<DomainError> for CliError {
    fn from(e: DomainError) -> Self {
        CliError::Domain(e)
    }
}

impl From<ParseRationalError> for CliError {
    fn from(e: ParseRationalError) -> Self {
        CliError::Rational(e)
    }
}
