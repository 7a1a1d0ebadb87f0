//! Library side of the `rstp` command: each subcommand is a plain function
//! so it can be driven from tests without spawning a process.

pub mod bench;
pub mod error;
pub mod report;

use std::path::Path;
use std::time::Instant;

use rstp_core::instances::{generate, read_instance_file, to_rstp_string, GeneratorSpec};
use rstp_core::oracle::{oracle_min_deviation, OracleResult};
use rstp_core::{solve, IntervalGraph, SolverOptions};

pub use error::CliError;
pub use report::RunReport;

pub fn load_instance(path: &Path) -> Result<IntervalGraph, CliError> {
    read_instance_file(path).map_err(|source| CliError::Instance {
        path: path.display().to_string(),
        source,
    })
}

/// Generates an instance and returns its `.rstp` text.
pub fn generate_instance(spec: &GeneratorSpec) -> Result<String, CliError> {
    Ok(to_rstp_string(&generate(spec)?))
}

pub fn solve_instance(path: &Path, options: SolverOptions) -> Result<RunReport, CliError> {
    let graph = load_instance(path)?;
    let start = Instant::now();
    let outcome = solve(&graph, &options)?;
    let wall = start.elapsed();
    RunReport::new(path.display().to_string(), &graph, options, &outcome, wall)
}

pub fn oracle_instance(path: &Path, budget: u128) -> Result<OracleResult, CliError> {
    let graph = load_instance(path)?;
    Ok(oracle_min_deviation(&graph, budget)?)
}

/// Flat record for an oracle run, same conventions as [`RunReport`].
pub fn render_oracle(path: &Path, result: &OracleResult) -> String {
    format!(
        "format={}\ninstance={}\noptimum={}\noptimal_trees={}\ntree_count={}\n",
        report::FORMAT_VERSION,
        path.display(),
        result.optimum,
        result.optimal_trees.len(),
        result.tree_count
    )
}
