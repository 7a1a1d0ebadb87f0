//! Benchmark matrix over generated instances, emitted as TSV.
//!
//! The first line is `# format=1`, the second the column header. One row per
//! `(class, nodes, mode)` cell, in that nesting order. Cells whose instances
//! cannot be generated or solved are kept, with `failed` counting the bad
//! seeds and statistics over the successful ones (`NA` if none succeeded).

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rstp_core::instances::{generate, GeneratorSpec};
use rstp_core::{solve, Cost, PruningMode, SolverOptions};

use crate::error::CliError;
use crate::report::FORMAT_VERSION;

pub const HEADER: [&str; 13] = [
    "class",
    "nodes",
    "edges",
    "mode",
    "runs",
    "failed",
    "wall_ms_mean",
    "wall_ms_min",
    "wall_ms_max",
    "nodes_mean",
    "nodes_min",
    "nodes_max",
    "deviation_mean",
];

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub classes: Vec<u8>,
    pub sizes: Vec<usize>,
    pub seeds: Vec<u64>,
    pub modes: Vec<PruningMode>,
    pub options: SolverOptions,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub wall: Duration,
    pub nodes: u64,
    pub deviation: Cost,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub class: u8,
    pub nodes: usize,
    /// Edge count of the generated instances, when any could be generated.
    pub edges: Option<usize>,
    pub mode: PruningMode,
    pub samples: Vec<Sample>,
    pub failed: usize,
}

pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRow>, CliError> {
    for (name, empty) in [
        ("class list", config.classes.is_empty()),
        ("size list", config.sizes.is_empty()),
        ("seed list", config.seeds.is_empty()),
        ("mode list", config.modes.is_empty()),
    ] {
        if empty {
            return Err(CliError::Usage(format!("benchmark {name} is empty")));
        }
    }
    let mut rows = Vec::new();
    for &class in &config.classes {
        for &nodes in &config.sizes {
            let graphs: Vec<_> = config
                .seeds
                .iter()
                .map(|&seed| generate(&GeneratorSpec::new(class, nodes, seed)).ok())
                .collect();
            let edges = graphs.iter().flatten().map(|g| g.edge_count()).next();
            for &mode in &config.modes {
                let options = config.options.with_mode(mode);
                let mut row = BenchRow {
                    class,
                    nodes,
                    edges,
                    mode,
                    samples: Vec::new(),
                    failed: 0,
                };
                for graph in &graphs {
                    let Some(graph) = graph else {
                        row.failed += 1;
                        continue;
                    };
                    let start = Instant::now();
                    match solve(graph, &options) {
                        Ok(out) => row.samples.push(Sample {
                            wall: start.elapsed(),
                            nodes: out.stats.nodes_visited,
                            deviation: out.best_deviation,
                        }),
                        Err(_) => row.failed += 1,
                    }
                }
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

fn stat<T: Copy + PartialOrd>(values: &[T], to_f64: impl Fn(T) -> f64) -> [String; 3] {
    if values.is_empty() {
        return ["NA".into(), "NA".into(), "NA".into()];
    }
    let xs: Vec<f64> = values.iter().map(|&v| to_f64(v)).collect();
    let mean = xs.iter().sum::<f64>() / xs.len() as f64;
    let min = xs.iter().copied().fold(f64::INFINITY, f64::min);
    let max = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    [format!("{mean:.3}"), format!("{min:.3}"), format!("{max:.3}")]
}

pub fn render_tsv(rows: &[BenchRow]) -> String {
    let mut out = format!("# format={FORMAT_VERSION}\n{}\n", HEADER.join("\t"));
    for row in rows {
        let walls: Vec<f64> = row.samples.iter().map(|s| s.wall.as_secs_f64() * 1e3).collect();
        let nodes: Vec<u64> = row.samples.iter().map(|s| s.nodes).collect();
        let devs: Vec<Cost> = row.samples.iter().map(|s| s.deviation).collect();
        let [wm, wmin, wmax] = stat(&walls, |v| v);
        let [nm, nmin, nmax] = stat(&nodes, |v| v as f64);
        let [dm, _, _] = stat(&devs, |v| v as f64);
        let edges = row.edges.map_or_else(|| "NA".to_string(), |m| m.to_string());
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{wm}\t{wmin}\t{wmax}\t{nm}\t{nmin}\t{nmax}\t{dm}",
            row.class,
            row.nodes,
            edges,
            row.mode,
            row.samples.len(),
            row.failed
        )
        .unwrap();
    }
    out
}
