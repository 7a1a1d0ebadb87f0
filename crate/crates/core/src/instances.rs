//! Seeded benchmark generators and the `.rstp` instance format.
//!
//! Randomness comes from ChaCha8 seeded through `SeedableRng::seed_from_u64`.
//! Integer draws use rejection sampling on raw `u64` output, so a given seed
//! produces the same instance on every platform and with every `rand`
//! release. Edges are drawn in lexicographic `(u, v)` order, low bound first.
//!
//! Classes 1-6 are complete graphs whose bounds are drawn as
//! `low ∈ {0..U1-1}` and `high ∈ {low+1..U2}`:
//!
//! | class | U1 | U2 |
//! |-------|----|----|
//! | 1     | 10 | 10 |
//! | 2     | 15 | 15 |
//! | 3     | 20 | 20 |
//! | 4     | 10 | 20 |
//! | 5     | 15 | 30 |
//! | 6     | 20 | 40 |
//!
//! Classes 7 and 8 are two-level networks of 5-vertex clusters. Cluster `k`
//! holds vertices `5k..5k+4`, is complete, and uses class-1 bounds. Vertex
//! `5k` is the cluster's gateway. Upper-level edges join gateways with class-1
//! bounds shifted up by 10: class 7 joins every pair of clusters, class 8
//! joins cluster `k` to clusters `2k+1` and `2k+2` (a binary heap).
//!
//! File format, one record per line:
//!
//! ```text
//! rstp <n> <m>
//! e <u> <v> <low> <high>
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::Path;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Cost, Edge, GraphError, IntervalGraph};

pub const CLUSTER_SIZE: usize = 5;
pub const UPPER_LEVEL_SHIFT: Cost = 10;

const CLASS_BOUNDS: [(Cost, Cost); 6] = [(10, 10), (15, 15), (20, 20), (10, 20), (15, 30), (20, 40)];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("unknown instance class {0}; expected 1 to 8")]
    UnknownClass(u8),
    #[error("class {class} needs at least 2 vertices, got {nodes}")]
    TooFewNodes { class: u8, nodes: usize },
    #[error("class {class} needs a positive multiple of {CLUSTER_SIZE} vertices, got {nodes}")]
    NotClustered { class: u8, nodes: usize },
}

/// Which instance to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub class: u8,
    pub nodes: usize,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(class: u8, nodes: usize, seed: u64) -> Self {
        GeneratorSpec { class, nodes, seed }
    }

    pub fn validate(&self) -> Result<(), GeneratorError> {
        let GeneratorSpec { class, nodes, .. } = *self;
        match class {
            1..=6 if nodes < 2 => Err(GeneratorError::TooFewNodes { class, nodes }),
            1..=6 => Ok(()),
            7 | 8 if nodes == 0 || nodes % CLUSTER_SIZE != 0 => Err(GeneratorError::NotClustered { class, nodes }),
            7 | 8 => Ok(()),
            _ => Err(GeneratorError::UnknownClass(class)),
        }
    }
}

/// Uniform integer in `lo..=hi` from raw 64-bit output, without modulo bias.
fn draw(rng: &mut ChaCha8Rng, lo: Cost, hi: Cost) -> Cost {
    debug_assert!(lo <= hi);
    let span = (hi - lo) as u64 + 1;
    let zone = u64::MAX - u64::MAX % span;
    loop {
        let x = rng.next_u64();
        if x < zone {
            return lo + (x % span) as Cost;
        }
    }
}

fn draw_interval(rng: &mut ChaCha8Rng, (low_max, high_max): (Cost, Cost)) -> (Cost, Cost) {
    let low = draw(rng, 0, low_max - 1);
    let high = draw(rng, low + 1, high_max);
    (low, high)
}

pub fn generate(spec: &GeneratorSpec) -> Result<IntervalGraph, GeneratorError> {
    spec.validate()?;
    let n = spec.nodes;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let edges = match spec.class {
        1..=6 => {
            let bounds = CLASS_BOUNDS[spec.class as usize - 1];
            let mut edges = Vec::with_capacity(n * (n - 1) / 2);
            for u in 0..n {
                for v in u + 1..n {
                    let (low, high) = draw_interval(&mut rng, bounds);
                    edges.push(Edge::new(u, v, low, high));
                }
            }
            edges
        }
        _ => {
            let clusters = n / CLUSTER_SIZE;
            let mut pairs: Vec<(usize, usize, bool)> = Vec::new();
            for k in 0..clusters {
                let base = k * CLUSTER_SIZE;
                for a in 0..CLUSTER_SIZE {
                    for b in a + 1..CLUSTER_SIZE {
                        pairs.push((base + a, base + b, false));
                    }
                }
            }
            let gateway = |k: usize| k * CLUSTER_SIZE;
            if spec.class == 7 {
                for a in 0..clusters {
                    for b in a + 1..clusters {
                        pairs.push((gateway(a), gateway(b), true));
                    }
                }
            } else {
                for k in 0..clusters {
                    for child in [2 * k + 1, 2 * k + 2] {
                        if child < clusters {
                            pairs.push((gateway(k), gateway(child), true));
                        }
                    }
                }
            }
            pairs.sort_unstable();
            pairs
                .into_iter()
                .map(|(u, v, upper_level)| {
                    let (low, high) = draw_interval(&mut rng, CLASS_BOUNDS[0]);
                    let shift = if upper_level { UPPER_LEVEL_SHIFT } else { 0 };
                    Edge::new(u, v, low + shift, high + shift)
                })
                .collect()
        }
    };
    Ok(IntervalGraph::new(n, edges).expect("generated edges are valid"))
}

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("empty instance: missing `rstp <n> <m>` header")]
    Empty,
    #[error("line {line}: malformed header, expected `rstp <n> <m>`")]
    BadHeader { line: usize },
    #[error("line {line}: malformed edge, expected `e <u> <v> <low> <high>`")]
    BadEdge { line: usize },
    #[error("header declares {declared} edges but the file has {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("line {line}: duplicate edge between {u} and {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: {source}")]
    Invalid { line: usize, source: GraphError },
    #[error("instance graph is disconnected")]
    Disconnected,
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Serializes `graph` in `.rstp` form. Output is byte-deterministic.
pub fn to_rstp_string(graph: &IntervalGraph) -> String {
    let mut out = String::new();
    writeln!(out, "rstp {} {}", graph.vertex_count(), graph.edge_count()).unwrap();
    for e in graph.edges() {
        writeln!(out, "e {} {} {} {}", e.u, e.v, e.low, e.high).unwrap();
    }
    out
}

pub fn write_instance(graph: &IntervalGraph, mut dest: impl Write) -> io::Result<()> {
    dest.write_all(to_rstp_string(graph).as_bytes())
}

pub fn write_instance_file(graph: &IntervalGraph, path: impl AsRef<Path>) -> io::Result<()> {
    std::fs::write(path, to_rstp_string(graph))
}

pub fn read_instance(mut source: impl Read) -> Result<IntervalGraph, InstanceError> {
    let mut text = String::new();
    source.read_to_string(&mut text)?;
    parse_instance(&text)
}

pub fn read_instance_file(path: impl AsRef<Path>) -> Result<IntervalGraph, InstanceError> {
    read_instance(std::fs::File::open(path)?)
}

/// Parses and validates an `.rstp` document. Blank lines and lines starting
/// with `#` are ignored.
pub fn parse_instance(text: &str) -> Result<IntervalGraph, InstanceError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(InstanceError::Empty)?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = match fields.as_slice() {
        ["rstp", n, m] => match (n.parse::<usize>(), m.parse::<usize>()) {
            (Ok(n), Ok(m)) => (n, m),
            _ => return Err(InstanceError::BadHeader { line: header_line }),
        },
        _ => return Err(InstanceError::BadHeader { line: header_line }),
    };

    let mut edges = Vec::with_capacity(m);
    let mut line_of = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let ["e", u, v, low, high] = fields.as_slice() else {
            return Err(InstanceError::BadEdge { line });
        };
        let parsed = (
            u.parse::<usize>(),
            v.parse::<usize>(),
            low.parse::<Cost>(),
            high.parse::<Cost>(),
        );
        let (Ok(u), Ok(v), Ok(low), Ok(high)) = parsed else {
            return Err(InstanceError::BadEdge { line });
        };
        if u != v && !seen.insert((u.min(v), u.max(v))) {
            return Err(InstanceError::DuplicateEdge { line, u, v });
        }
        edges.push(Edge::new(u, v, low, high));
        line_of.push(line);
    }
    if edges.len() != m {
        return Err(InstanceError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    let graph = IntervalGraph::new(n, edges).map_err(|source| {
        let line = match source {
            GraphError::VertexOutOfRange { edge, .. }
            | GraphError::SelfLoop { edge, .. }
            | GraphError::InvertedInterval { edge, .. }
            | GraphError::NegativeCost { edge, .. } => line_of[edge],
            _ => header_line,
        };
        InstanceError::Invalid { line, source }
    })?;
    if !graph.is_connected() {
        return Err(InstanceError::Disconnected);
    }
    Ok(graph)
}
