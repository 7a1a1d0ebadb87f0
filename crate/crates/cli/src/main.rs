use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rstp_cli::bench::{render_tsv, run_bench, BenchConfig};
use rstp_cli::error::exit;
use rstp_cli::{generate_instance, oracle_instance, render_oracle, solve_instance, CliError};
use rstp_core::instances::GeneratorSpec;
use rstp_core::oracle::DEFAULT_TREE_BUDGET;
use rstp_core::search::{BoundTest, InitialIncumbent, ReferenceTree};
use rstp_core::{BranchRule, PruningMode, SolverOptions};

/// Robust spanning tree solver for graphs with interval edge costs.
#[derive(Parser)]
#[command(name = "rstp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a benchmark instance.
    Generate {
        #[arg(long)]
        class: u8,
        #[arg(long)]
        nodes: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve an instance exactly and print a run report.
    Solve {
        instance: PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
        /// Write the report here and print only the summary line.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Brute-force the optimum by enumerating every spanning tree.
    Oracle {
        instance: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TREE_BUDGET)]
        budget: u128,
    },
    /// Solve a matrix of generated instances and emit a TSV table.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        classes: Vec<u8>,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Number of seeds per cell.
        #[arg(long, default_value_t = 10)]
        seeds: u64,
        #[arg(long, default_value_t = 0)]
        first_seed: u64,
        #[arg(long, value_delimiter = ',', default_value = "csr,csf")]
        modes: Vec<Mode>,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Csr,
    Csf,
}

impl From<Mode> for PruningMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Csr => PruningMode::Root,
            Mode::Csf => PruningMode::EveryNode,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Branch {
    MaxWidth,
    LowestId,
}

#[derive(Clone, Copy, ValueEnum)]
enum Reference {
    Unconstrained,
    Constrained,
}

#[derive(Clone, Copy, ValueEnum)]
enum Bound {
    Strict,
    Inclusive,
}

#[derive(Clone, Copy, ValueEnum)]
enum Incumbent {
    UpperMst,
    Infinite,
}

#[derive(Args)]
struct SolverArgs {
    #[arg(long, value_enum, default_value = "csf")]
    mode: Mode,
    #[arg(long, value_enum, default_value = "max-width")]
    branch: Branch,
    /// MST whose free edges the max-width rule prefers.
    #[arg(long, value_enum, default_value = "unconstrained")]
    reference_tree: Reference,
    /// Do not fix strong edges before searching.
    #[arg(long)]
    no_strong: bool,
    /// Move free bridges into the selected set at every node.
    #[arg(long)]
    bridges: bool,
    #[arg(long, value_enum, default_value = "strict")]
    bound: Bound,
    #[arg(long, value_enum, default_value = "upper-mst")]
    initial: Incumbent,
}

impl SolverArgs {
    fn options(&self) -> SolverOptions {
        SolverOptions {
            mode: self.mode.into(),
            branch_rule: match self.branch {
                Branch::MaxWidth => BranchRule::MaxWidth,
                Branch::LowestId => BranchRule::LowestId,
            },
            reference_tree: match self.reference_tree {
                Reference::Unconstrained => ReferenceTree::Unconstrained,
                Reference::Constrained => ReferenceTree::Constrained,
            },
            strong_preseed: !self.no_strong,
            force_bridges: self.bridges,
            bound_test: match self.bound {
                Bound::Strict => BoundTest::Strict,
                Bound::Inclusive => BoundTest::Inclusive,
            },
            initial_incumbent: match self.initial {
                Incumbent::UpperMst => InitialIncumbent::UpperMst,
                Incumbent::Infinite => InitialIncumbent::Infinite,
            },
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Generate {
            class,
            nodes,
            seed,
            output,
        } => {
            let text = generate_instance(&GeneratorSpec::new(class, nodes, seed))?;
            write_output(output.as_deref(), &text)
        }
        Command::Solve {
            instance,
            solver,
            report,
        } => {
            let run = solve_instance(&instance, solver.options())?;
            match report {
                Some(path) => {
                    write_output(Some(&path), &run.render())?;
                    println!("{}", run.summary());
                }
                None => {
                    print!("{}", run.render());
                    eprintln!("{}", run.summary());
                }
            }
            Ok(())
        }
        Command::Oracle { instance, budget } => {
            let result = oracle_instance(&instance, budget)?;
            print!("{}", render_oracle(&instance, &result));
            Ok(())
        }
        Command::Bench {
            classes,
            sizes,
            seeds,
            first_seed,
            modes,
            solver,
            output,
        } => {
            let config = BenchConfig {
                classes,
                sizes,
                seeds: (first_seed..first_seed + seeds).collect(),
                modes: modes.into_iter().map(PruningMode::from).collect(),
                options: solver.options(),
            };
            let rows = run_bench(&config)?;
            write_output(output.as_deref(), &render_tsv(&rows))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::from(exit::SUCCESS as u8),
        Err(e) => {
            eprintln!("rstp: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
