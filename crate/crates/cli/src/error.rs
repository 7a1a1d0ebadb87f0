use std::io;

use rstp_core::instances::{GeneratorError, InstanceError};
use rstp_core::oracle::OracleError;
use rstp_core::{Cost, GraphError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Instance { path: String, source: InstanceError },
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("oracle refused: {0}")]
    Oracle(#[from] OracleError),
    #[error("report self-check failed: solver reported deviation {reported}, tree re-evaluates to {recomputed}")]
    SelfCheck { reported: Cost, recomputed: Cost },
    #[error("{0}")]
    Usage(String),
}

/// Process exit statuses.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    /// I/O failure (missing or unwritable file).
    pub const IO: i32 = 1;
    /// Bad command-line usage (also what clap uses).
    pub const USAGE: i32 = 2;
    /// Malformed or invalid instance file, or invalid generator parameters.
    pub const PARSE: i32 = 3;
    /// Disconnected instance or infeasible problem.
    pub const INFEASIBLE: i32 = 4;
    /// Oracle size budget exceeded.
    pub const BUDGET: i32 = 5;
    /// A run report failed its own consistency check.
    pub const SELF_CHECK: i32 = 6;
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => exit::IO,
            CliError::Instance {
                source: InstanceError::Io(_),
                ..
            } => exit::IO,
            CliError::Instance {
                source: InstanceError::Disconnected,
                ..
            } => exit::INFEASIBLE,
            CliError::Instance { .. } | CliError::Generator(_) => exit::PARSE,
            CliError::Graph(_) => exit::INFEASIBLE,
            CliError::Oracle(OracleError::Disconnected) => exit::INFEASIBLE,
            CliError::Oracle(_) => exit::BUDGET,
            CliError::SelfCheck { .. } => exit::SELF_CHECK,
            CliError::Usage(_) => exit::USAGE,
        }
    }
}
