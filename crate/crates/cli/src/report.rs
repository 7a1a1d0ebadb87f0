//! Flat `key=value` run reports.
//!
//! One key per line, fixed order, starting with `format=1`:
//!
//! ```text
//! format=1
//! instance=<path>
//! vertices=<n>
//! edges=<m>
//! mode=csr|csf
//! branch=max-width|lowest-id
//! reference_tree=unconstrained|constrained
//! strong_preseed=true|false
//! force_bridges=true|false
//! bound_test=strict|inclusive
//! initial_incumbent=upper-mst|infinite
//! deviation=<f*>
//! tree=<comma-separated edge ids>
//! nodes_visited=... lb_prunes=... infeasible_prunes=... weak_edges_removed=...
//! cache_writes=... incumbent_updates=... strong_edges_fixed=... bridges_forced=...
//! leaves=... max_depth=...            (one per line)
//! wall_ms=<milliseconds, 3 decimals>
//! ```

use std::fmt::Write as _;
use std::time::Duration;

use rstp_core::search::{BoundTest, InitialIncumbent, ReferenceTree};
use rstp_core::{robust_deviation, Cost, EdgeId, IntervalGraph, SearchOutcome, SearchStats, SolverOptions};

use crate::error::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub instance: String,
    pub vertices: usize,
    pub edges: usize,
    pub options: SolverOptions,
    pub deviation: Cost,
    pub tree: Vec<EdgeId>,
    pub stats: SearchStats,
    pub wall: Duration,
}

impl RunReport {
    /// Builds the report, re-evaluating the tree's deviation from scratch.
    pub fn new(
        instance: impl Into<String>,
        graph: &IntervalGraph,
        options: SolverOptions,
        outcome: &SearchOutcome,
        wall: Duration,
    ) -> Result<Self, CliError> {
        let recomputed = robust_deviation(&outcome.best_tree, graph);
        if recomputed != outcome.best_deviation {
            return Err(CliError::SelfCheck {
                reported: outcome.best_deviation,
                recomputed,
            });
        }
        Ok(RunReport {
            instance: instance.into(),
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
            options,
            deviation: outcome.best_deviation,
            tree: outcome.best_tree.edges().to_vec(),
            stats: outcome.stats,
            wall,
        })
    }

    /// Ordered key/value pairs; `wall_ms` is always last.
    pub fn fields(&self) -> Vec<(&'static str, String)> {
        let o = &self.options;
        let s = &self.stats;
        let tree = self.tree.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",");
        vec![
            ("format", FORMAT_VERSION.to_string()),
            ("instance", self.instance.clone()),
            ("vertices", self.vertices.to_string()),
            ("edges", self.edges.to_string()),
            ("mode", o.mode.to_string()),
            ("branch", o.branch_rule.to_string()),
            ("reference_tree", reference_name(o.reference_tree).to_string()),
            ("strong_preseed", o.strong_preseed.to_string()),
            ("force_bridges", o.force_bridges.to_string()),
            ("bound_test", bound_name(o.bound_test).to_string()),
            ("initial_incumbent", incumbent_name(o.initial_incumbent).to_string()),
            ("deviation", self.deviation.to_string()),
            ("tree", tree),
            ("nodes_visited", s.nodes_visited.to_string()),
            ("lb_prunes", s.lb_prunes.to_string()),
            ("infeasible_prunes", s.infeasible_prunes.to_string()),
            ("weak_edges_removed", s.weak_edges_removed.to_string()),
            ("cache_writes", s.cache_writes.to_string()),
            ("incumbent_updates", s.incumbent_updates.to_string()),
            ("strong_edges_fixed", s.strong_edges_fixed.to_string()),
            ("bridges_forced", s.bridges_forced.to_string()),
            ("leaves", s.leaves.to_string()),
            ("max_depth", s.max_depth.to_string()),
            ("wall_ms", format!("{:.3}", self.wall.as_secs_f64() * 1e3)),
        ]
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (key, value) in self.fields() {
            writeln!(out, "{key}={value}").unwrap();
        }
        out
    }

    /// The record without its `wall_ms` line; equal across reruns.
    pub fn render_without_wall_clock(&self) -> String {
        self.render()
            .lines()
            .filter(|l| !l.starts_with("wall_ms="))
            .map(|l| format!("{l}\n"))
            .collect()
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: deviation {} with {} edges, {} nodes ({}), {:.1} ms",
            self.instance,
            self.deviation,
            self.tree.len(),
            self.stats.nodes_visited,
            self.options.mode,
            self.wall.as_secs_f64() * 1e3
        )
    }
}

pub fn reference_name(r: ReferenceTree) -> &'static str {
    match r {
        ReferenceTree::Unconstrained => "unconstrained",
        ReferenceTree::Constrained => "constrained",
    }
}

pub fn bound_name(b: BoundTest) -> &'static str {
    match b {
        BoundTest::Strict => "strict",
        BoundTest::Inclusive => "inclusive",
    }
}

pub fn incumbent_name(i: InitialIncumbent) -> &'static str {
    match i {
        InitialIncumbent::UpperMst => "upper-mst",
        InitialIncumbent::Infinite => "infinite",
    }
}
