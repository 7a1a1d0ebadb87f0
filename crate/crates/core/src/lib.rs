//! Exact solver for the robust (minmax-regret) spanning tree problem with
//! interval edge costs.
//!
//! Each edge cost is only known to lie in `[low, high]`. The robust deviation
//! of a spanning tree is the largest gap, over all cost scenarios, between
//! its cost and the minimum spanning tree cost. [`solve`] finds a tree of
//! minimum robust deviation by branch and bound; [`oracle`] provides
//! brute-force ground truth for small graphs.
//!
//! ```
//! use rstp_core::{solve, Edge, IntervalGraph, SolverOptions};
//!
//! let graph = IntervalGraph::new(
//!     3,
//!     vec![Edge::new(0, 1, 1, 3), Edge::new(1, 2, 2, 4), Edge::new(0, 2, 5, 6)],
//! )
//! .unwrap();
//! let outcome = solve(&graph, &SolverOptions::default()).unwrap();
//! assert_eq!(outcome.best_deviation, 0);
//! assert_eq!(outcome.best_tree.edges(), &[0, 1]);
//! ```

pub mod eval;
pub mod graph;
pub mod instances;
pub mod oracle;
pub mod pruning;
pub mod search;

pub use eval::{edge_set_deviation, lower_bound, robust_deviation, worst_case_scenario, Deviation};
pub use graph::{
    constrained_mst, minimum_spanning_tree, tree_cost, Cost, DisjointSets, Edge, EdgeId, ExtremeScenario, GraphError,
    IntervalGraph, SpanningTree, Vertex,
};
pub use pruning::{strong_edges, weak_edges};
pub use search::{
    select_edge, solve, BoundTest, BranchRule, Configuration, InitialIncumbent, PruningMode, ReferenceTree,
    SearchOutcome, SearchStats, SolverOptions,
};
