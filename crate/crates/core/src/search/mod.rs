//! Depth-first branch and bound over configurations `⟨S, R⟩`.
//!
//! Each node is pruned for infeasibility (cycle removal plus a connectivity
//! check), optionally for suboptimality (non-weak edges of the contracted
//! graph), then bounded against the incumbent. Surviving nodes branch on one
//! free edge: the reject child is explored before the accept child. A node
//! whose selected set reaches `n - 1` edges is a spanning tree and is
//! evaluated exactly.

mod config;

use std::fmt;
use std::str::FromStr;

pub use config::{ConfigError, Configuration};

use crate::eval::{edge_set_deviation, evaluate_bound, worst_case_scenario, BoundEvaluation, Deviation};
use crate::graph::{minimum_spanning_tree, Cost, EdgeId, ExtremeScenario, GraphError, IntervalGraph, SpanningTree};
use crate::pruning::{force_bridges, prune_infeasible, prune_suboptimal, strong_edges, Feasibility};

/// Where suboptimality pruning runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PruningMode {
    /// Root node only ("CSR").
    Root,
    /// Every node ("CSF").
    #[default]
    EveryNode,
}

impl PruningMode {
    pub const ALL: [PruningMode; 2] = [PruningMode::Root, PruningMode::EveryNode];

    pub fn as_str(self) -> &'static str {
        match self {
            PruningMode::Root => "csr",
            PruningMode::EveryNode => "csf",
        }
    }
}

impl fmt::Display for PruningMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownOption(pub String);

impl fmt::Display for UnknownOption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown option value `{}`", self.0)
    }
}

impl std::error::Error for UnknownOption {}

impl FromStr for PruningMode {
    type Err = UnknownOption;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csr" => Ok(PruningMode::Root),
            "csf" => Ok(PruningMode::EveryNode),
            _ => Err(UnknownOption(s.to_string())),
        }
    }
}

/// Which free edge to branch on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum BranchRule {
    /// Widest interval among free edges of the reference MST, falling back to
    /// the widest among the other free edges.
    #[default]
    MaxWidth,
    /// Lowest free edge id; the uninformed baseline.
    LowestId,
}

impl BranchRule {
    pub const ALL: [BranchRule; 2] = [BranchRule::MaxWidth, BranchRule::LowestId];

    pub fn as_str(self) -> &'static str {
        match self {
            BranchRule::MaxWidth => "max-width",
            BranchRule::LowestId => "lowest-id",
        }
    }
}

impl fmt::Display for BranchRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BranchRule {
    type Err = UnknownOption;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "max-width" => Ok(BranchRule::MaxWidth),
            "lowest-id" => Ok(BranchRule::LowestId),
            _ => Err(UnknownOption(s.to_string())),
        }
    }
}

/// The MST under `w(S ∪ L)` that [`BranchRule::MaxWidth`] prefers edges from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ReferenceTree {
    /// Unconstrained MST (may use rejected edges).
    #[default]
    Unconstrained,
    /// MST restricted to trees of the configuration.
    Constrained,
}

/// When a node's lower bound stops the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum BoundTest {
    /// Prune when `LB >= f*`; a tie can never produce a strictly better tree.
    #[default]
    Strict,
    /// Prune only when `LB > f*`.
    Inclusive,
}

/// Where the incumbent starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum InitialIncumbent {
    /// The MST under the all-upper scenario, with its deviation.
    #[default]
    UpperMst,
    /// No incumbent; `f*` starts above every finite deviation.
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SolverOptions {
    pub mode: PruningMode,
    pub branch_rule: BranchRule,
    pub reference_tree: ReferenceTree,
    /// Put every strong edge into `S` before the search starts.
    pub strong_preseed: bool,
    /// Move free bridges of `(V, S ∪ L)` into `S` at every node.
    pub force_bridges: bool,
    pub bound_test: BoundTest,
    pub initial_incumbent: InitialIncumbent,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            mode: PruningMode::default(),
            branch_rule: BranchRule::default(),
            reference_tree: ReferenceTree::default(),
            strong_preseed: true,
            force_bridges: false,
            bound_test: BoundTest::default(),
            initial_incumbent: InitialIncumbent::default(),
        }
    }
}

impl SolverOptions {
    pub fn with_mode(mut self, mode: PruningMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_branch_rule(mut self, rule: BranchRule) -> Self {
        self.branch_rule = rule;
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct SearchStats {
    pub nodes_visited: u64,
    pub lb_prunes: u64,
    pub infeasible_prunes: u64,
    /// Free edges rejected by suboptimality pruning.
    pub weak_edges_removed: u64,
    /// MaxCost table entries written across all suboptimality passes.
    pub cache_writes: u64,
    pub incumbent_updates: u64,
    /// Edges moved into `S` before search because they are strong.
    pub strong_edges_fixed: u64,
    pub bridges_forced: u64,
    pub leaves: u64,
    pub max_depth: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub best_tree: SpanningTree,
    pub best_deviation: Cost,
    pub stats: SearchStats,
    /// Incumbent deviation after each update, starting with the initial one
    /// when the incumbent is seeded.
    pub incumbent_trace: Vec<Cost>,
}

/// Chooses the branching edge for `config`, or `None` when no free edge is
/// left or the configuration admits no tree.
pub fn select_edge(config: &Configuration, graph: &IntervalGraph, options: &SolverOptions) -> Option<EdgeId> {
    let bound = evaluate_bound(config, graph).ok()?;
    choose_edge(config, graph, &bound, options)
}

fn choose_edge(
    config: &Configuration,
    graph: &IntervalGraph,
    bound: &BoundEvaluation,
    options: &SolverOptions,
) -> Option<EdgeId> {
    let free = config.free_edges();
    match options.branch_rule {
        BranchRule::LowestId => free.first().copied(),
        BranchRule::MaxWidth => {
            let reference = match options.reference_tree {
                ReferenceTree::Unconstrained => &bound.unconstrained,
                ReferenceTree::Constrained => &bound.constrained,
            };
            let widest = |candidates: &mut dyn Iterator<Item = EdgeId>| {
                // Max width, then lowest id.
                candidates.min_by_key(|&id| (-graph.edge(id).width(), id))
            };
            let in_reference = |id: &EdgeId| reference.binary_search(id).is_ok();
            widest(&mut free.iter().copied().filter(in_reference))
                .or_else(|| widest(&mut free.iter().copied().filter(|id| !in_reference(id))))
        }
    }
}

/// Finds a spanning tree of minimum robust deviation.
pub fn solve(graph: &IntervalGraph, options: &SolverOptions) -> Result<SearchOutcome, GraphError> {
    if !graph.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = graph.vertex_count();
    let mut stats = SearchStats::default();
    let mut trace = Vec::new();

    let mut best: Option<Vec<EdgeId>> = None;
    let mut incumbent = Deviation::Infinite;
    if options.initial_incumbent == InitialIncumbent::UpperMst {
        let tree = minimum_spanning_tree(graph, &ExtremeScenario::all_upper(graph.edge_count()))?;
        let deviation = edge_set_deviation(tree.edges(), graph);
        incumbent = Deviation::Finite(deviation);
        best = Some(tree.edges().to_vec());
        trace.push(deviation);
    }

    let mut root = Configuration::root(graph);
    if options.strong_preseed {
        for id in strong_edges(graph) {
            // Degenerate ties can make strong edges cyclic; keep an acyclic prefix.
            if root.select(graph, id) {
                stats.strong_edges_fixed += 1;
            }
        }
    }

    let mut stack = vec![(root, 0u64)];
    while let Some((mut config, depth)) = stack.pop() {
        stats.nodes_visited += 1;
        stats.max_depth = stats.max_depth.max(depth);

        if config.selected_count() + 1 < n {
            match prune_infeasible(&mut config, graph) {
                Feasibility::Dead => {
                    stats.infeasible_prunes += 1;
                    continue;
                }
                Feasibility::Alive { .. } => {}
            }
            if options.force_bridges {
                stats.bridges_forced += force_bridges(&mut config, graph) as u64;
            }
            if depth == 0 || options.mode == PruningMode::EveryNode {
                let pruned = prune_suboptimal(&mut config, graph);
                stats.weak_edges_removed += pruned.rejected as u64;
                stats.cache_writes += pruned.cache_writes as u64;
            }
        }

        if config.selected_count() + 1 >= n {
            stats.leaves += 1;
            let edges = config.selected_edges();
            let deviation = Deviation::Finite(edge_set_deviation(&edges, graph));
            if deviation < incumbent {
                incumbent = deviation;
                best = Some(edges);
                stats.incumbent_updates += 1;
                trace.push(deviation.finite().expect("finite"));
            }
            continue;
        }

        let Ok(bound) = evaluate_bound(&config, graph) else {
            stats.infeasible_prunes += 1;
            continue;
        };
        let lb = Deviation::Finite(bound.lower_bound);
        let explore = match options.bound_test {
            BoundTest::Strict => lb < incumbent,
            BoundTest::Inclusive => lb <= incumbent,
        };
        if !explore {
            stats.lb_prunes += 1;
            continue;
        }
        let Some(edge) = choose_edge(&config, graph, &bound, options) else {
            continue;
        };
        let mut reject = config.clone();
        reject.reject(edge);
        if config.select(graph, edge) {
            stack.push((config, depth + 1));
        }
        stack.push((reject, depth + 1));
    }

    let edges = best.expect("a connected graph always yields a spanning tree");
    let best_deviation = incumbent.finite().expect("incumbent set");
    let costs = worst_case_scenario(&edges, graph).costs(graph);
    let best_tree = SpanningTree::from_edges(graph, &edges, &costs).expect("incumbent is a spanning tree");
    Ok(SearchOutcome {
        best_tree,
        best_deviation,
        stats,
        incumbent_trace: trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn all_options() -> Vec<SolverOptions> {
        let mut out = Vec::new();
        for mode in PruningMode::ALL {
            for branch_rule in BranchRule::ALL {
                for strong_preseed in [false, true] {
                    for force_bridges in [false, true] {
                        for bound_test in [BoundTest::Strict, BoundTest::Inclusive] {
                            for initial_incumbent in [InitialIncumbent::UpperMst, InitialIncumbent::Infinite] {
                                out.push(SolverOptions {
                                    mode,
                                    branch_rule,
                                    reference_tree: ReferenceTree::Unconstrained,
                                    strong_preseed,
                                    force_bridges,
                                    bound_test,
                                    initial_incumbent,
                                });
                            }
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn select_edge_examples() {
        let g = g3a();
        let opts = SolverOptions::default();
        assert_eq!(select_edge(&Configuration::root(&g), &g, &opts), Some(0));
        assert_eq!(
            select_edge(&Configuration::new(&g, &[], &[0]).unwrap(), &g, &opts),
            Some(1)
        );
        assert_eq!(
            select_edge(&Configuration::new(&g, &[0], &[2]).unwrap(), &g, &opts),
            Some(1)
        );
        assert_eq!(
            select_edge(&Configuration::new(&g, &[0, 1], &[2]).unwrap(), &g, &opts),
            None
        );
    }

    #[test]
    fn solves_triangles_under_every_option() {
        for opts in all_options() {
            for g in [g3a(), g3b()] {
                let out = solve(&g, &opts).unwrap();
                assert_eq!(out.best_deviation, 0, "{opts:?}");
                assert_eq!(out.best_tree.edges(), &[0, 1], "{opts:?}");
            }
        }
    }

    #[test]
    fn tree_graph_solves_to_itself() {
        let g = path4();
        for opts in all_options() {
            let out = solve(&g, &opts).unwrap();
            assert_eq!(out.best_deviation, 0);
            assert_eq!(out.best_tree.edges(), &[0, 1, 2]);
        }
    }

    #[test]
    fn single_vertex_and_disconnected_inputs() {
        let lone = IntervalGraph::new(1, vec![]).unwrap();
        let out = solve(&lone, &SolverOptions::default()).unwrap();
        assert!(out.best_tree.edges().is_empty());

        let split = IntervalGraph::new(3, vec![crate::graph::Edge::new(0, 1, 0, 1)]).unwrap();
        assert_eq!(solve(&split, &SolverOptions::default()), Err(GraphError::Disconnected));
    }

    #[test]
    fn option_names_round_trip() {
        for mode in PruningMode::ALL {
            assert_eq!(mode.as_str().parse::<PruningMode>().unwrap(), mode);
        }
        for rule in BranchRule::ALL {
            assert_eq!(rule.as_str().parse::<BranchRule>().unwrap(), rule);
        }
        assert!("bfs".parse::<PruningMode>().is_err());
    }
}
