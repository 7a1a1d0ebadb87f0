//! Objective layer: worst-case scenarios, robust deviation and the
//! configuration lower bound.

use std::fmt;

use crate::graph::{kruskal, prim, Cost, EdgeId, ExtremeScenario, GraphError, IntervalGraph, SpanningTree};
use crate::search::Configuration;

/// A robust deviation, or the "no incumbent yet" sentinel which compares
/// above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Deviation {
    Finite(Cost),
    Infinite,
}

impl Deviation {
    pub fn finite(self) -> Option<Cost> {
        match self {
            Deviation::Finite(v) => Some(v),
            Deviation::Infinite => None,
        }
    }
}

impl fmt::Display for Deviation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Deviation::Finite(v) => write!(f, "{v}"),
            Deviation::Infinite => f.write_str("inf"),
        }
    }
}

/// The extreme scenario `w(edges)`: listed edges at their upper bound, all
/// others at their lower bound. `edges` need not be a tree.
pub fn worst_case_scenario(edges: &[EdgeId], graph: &IntervalGraph) -> ExtremeScenario {
    ExtremeScenario::with_upper(graph.edge_count(), edges.iter().copied())
}

/// Regret of a spanning tree: its cost under its own worst case minus the MST
/// cost under that same scenario.
pub fn robust_deviation(tree: &SpanningTree, graph: &IntervalGraph) -> Cost {
    edge_set_deviation(tree.edges(), graph)
}

/// [`robust_deviation`] for a bare edge set that is known to be a spanning tree.
pub fn edge_set_deviation(edges: &[EdgeId], graph: &IntervalGraph) -> Cost {
    let scenario = worst_case_scenario(edges, graph);
    let costs = scenario.costs(graph);
    let own: Cost = edges.iter().map(|&id| costs[id]).sum();
    let mst = prim(graph, &costs).expect("a graph with a spanning tree is connected");
    let best: Cost = mst.edges().iter().map(|&id| costs[id]).sum();
    own - best
}

/// Lower bound on the deviation of every tree derivable from `config`:
/// the constrained MST cost under `w(S ∪ L)` minus the unconstrained MST cost
/// under the same scenario.
pub fn lower_bound(config: &Configuration, graph: &IntervalGraph) -> Result<Cost, GraphError> {
    evaluate_bound(config, graph).map(|b| b.lower_bound)
}

/// Both spanning trees behind a lower-bound evaluation, kept so branching can
/// reuse them without another MST run.
#[derive(Debug, Clone)]
pub(crate) struct BoundEvaluation {
    pub lower_bound: Cost,
    pub constrained: Vec<EdgeId>,
    pub unconstrained: Vec<EdgeId>,
}

pub(crate) fn evaluate_bound(config: &Configuration, graph: &IntervalGraph) -> Result<BoundEvaluation, GraphError> {
    let costs = config_scenario_costs(config, graph);
    let (constrained, constrained_cost) =
        kruskal(graph, &costs, config.selected_flags(), config.rejected_flags()).ok_or(GraphError::Infeasible)?;
    let none = vec![false; graph.edge_count()];
    let (unconstrained, unconstrained_cost) = kruskal(graph, &costs, &none, &none).ok_or(GraphError::Disconnected)?;
    Ok(BoundEvaluation {
        lower_bound: constrained_cost - unconstrained_cost,
        constrained,
        unconstrained,
    })
}

/// Costs under `w(S ∪ L)`: rejected edges low, everything else high.
pub(crate) fn config_scenario_costs(config: &Configuration, graph: &IntervalGraph) -> Vec<Cost> {
    graph
        .edges()
        .iter()
        .zip(config.rejected_flags())
        .map(|(e, &rejected)| if rejected { e.low } else { e.high })
        .collect()
}
