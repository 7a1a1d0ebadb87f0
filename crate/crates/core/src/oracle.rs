//! Brute-force ground truth for testing the solver.
//!
//! Everything here is deliberately naive: spanning trees are enumerated one
//! by one and regrets are maximized over all `2^m` extreme scenarios. Size
//! limits are enforced up front; the oracle refuses rather than truncates.

use thiserror::Error;

use crate::eval::edge_set_deviation;
use crate::graph::{
    constrained_mst, minimum_spanning_tree, Cost, DisjointSets, EdgeId, ExtremeScenario, IntervalGraph,
};

/// Default cap on the number of spanning trees the oracle will enumerate.
pub const DEFAULT_TREE_BUDGET: u128 = 1_000_000;

/// Largest edge count for which all extreme scenarios are enumerated.
pub const MAX_SCENARIO_EDGES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {} spanning trees, over the budget of {budget}", count.map_or_else(|| "too many".to_string(), |c| c.to_string()))]
    BudgetExceeded { count: Option<u128>, budget: u128 },
    #[error("graph has {edges} edges; scenario enumeration is limited to {max}")]
    TooManyEdges { edges: usize, max: usize },
    #[error("graph is disconnected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub optimum: Cost,
    /// Every tree attaining `optimum`, in lexicographic order of sorted edge ids.
    pub optimal_trees: Vec<Vec<EdgeId>>,
    pub tree_count: usize,
}

/// Number of spanning trees by the matrix-tree theorem, computed exactly
/// with fraction-free elimination. `None` if an intermediate overflows.
pub fn spanning_tree_count(graph: &IntervalGraph) -> Option<u128> {
    let n = graph.vertex_count();
    if n == 1 {
        return Some(1);
    }
    let k = n - 1;
    let mut lap = vec![vec![0i128; k]; k];
    for e in graph.edges() {
        for (a, b) in [(e.u, e.v), (e.v, e.u)] {
            if a < k {
                lap[a][a] += 1;
                if b < k {
                    lap[a][b] -= 1;
                }
            }
        }
    }
    // Bareiss.
    let mut sign = 1i128;
    let mut prev = 1i128;
    for p in 0..k {
        if lap[p][p] == 0 {
            let Some(swap) = (p + 1..k).find(|&r| lap[r][p] != 0) else {
                return Some(0);
            };
            lap.swap(p, swap);
            sign = -sign;
        }
        for i in p + 1..k {
            for j in p + 1..k {
                let v = lap[i][j]
                    .checked_mul(lap[p][p])?
                    .checked_sub(lap[i][p].checked_mul(lap[p][j])?)?;
                lap[i][j] = v / prev;
            }
        }
        prev = lap[p][p];
    }
    u128::try_from(sign * lap[k - 1][k - 1]).ok()
}

/// Calls `visit` once per spanning tree, in lexicographic order of the sorted
/// edge-id tuples. Returns the number of trees visited.
pub fn for_each_spanning_tree(
    graph: &IntervalGraph,
    budget: u128,
    mut visit: impl FnMut(&[EdgeId]),
) -> Result<usize, OracleError> {
    let count = spanning_tree_count(graph);
    match count {
        Some(0) => return Err(OracleError::Disconnected),
        Some(c) if c <= budget => {}
        _ => return Err(OracleError::BudgetExceeded { count, budget }),
    }
    let mut chosen = Vec::with_capacity(graph.vertex_count());
    let mut visited = 0;
    branch(
        graph,
        0,
        DisjointSets::new(graph.vertex_count()),
        &mut chosen,
        &mut |t| {
            visited += 1;
            visit(t)
        },
    );
    Ok(visited)
}

fn branch(
    graph: &IntervalGraph,
    next: EdgeId,
    sets: DisjointSets,
    chosen: &mut Vec<EdgeId>,
    visit: &mut dyn FnMut(&[EdgeId]),
) {
    if chosen.len() + 1 == graph.vertex_count() {
        visit(chosen);
        return;
    }
    if next == graph.edge_count() || !completable(graph, next, &sets) {
        return;
    }
    let e = graph.edge(next);
    let mut with = sets.clone();
    if with.union(e.u, e.v) {
        chosen.push(next);
        branch(graph, next + 1, with, chosen, visit);
        chosen.pop();
    }
    branch(graph, next + 1, sets, chosen, visit);
}

/// Whether the chosen components plus edges `next..` still connect the graph.
fn completable(graph: &IntervalGraph, next: EdgeId, sets: &DisjointSets) -> bool {
    let mut sets = sets.clone();
    for e in &graph.edges()[next..] {
        sets.union(e.u, e.v);
    }
    (1..graph.vertex_count()).all(|x| sets.same(0, x))
}

/// All spanning trees, collected.
pub fn enumerate_spanning_trees(graph: &IntervalGraph, budget: u128) -> Result<Vec<Vec<EdgeId>>, OracleError> {
    let mut trees = Vec::new();
    for_each_spanning_tree(graph, budget, |t| trees.push(t.to_vec()))?;
    Ok(trees)
}

/// Minimum robust deviation over every spanning tree.
pub fn oracle_min_deviation(graph: &IntervalGraph, budget: u128) -> Result<OracleResult, OracleError> {
    let mut optimum = Cost::MAX;
    let mut optimal_trees = Vec::new();
    let tree_count = for_each_spanning_tree(graph, budget, |t| {
        let d = edge_set_deviation(t, graph);
        if d < optimum {
            optimum = d;
            optimal_trees.clear();
        }
        if d == optimum {
            optimal_trees.push(t.to_vec());
        }
    })?;
    Ok(OracleResult {
        optimum,
        optimal_trees,
        tree_count,
    })
}

/// Regret of `tree` maximized over all `2^m` extreme scenarios.
pub fn oracle_deviation_by_scenarios(tree: &[EdgeId], graph: &IntervalGraph) -> Result<Cost, OracleError> {
    let m = graph.edge_count();
    if m > MAX_SCENARIO_EDGES {
        return Err(OracleError::TooManyEdges {
            edges: m,
            max: MAX_SCENARIO_EDGES,
        });
    }
    let mut worst = Cost::MIN;
    for mask in 0u32..(1 << m) {
        let scenario = ExtremeScenario::from_flags((0..m).map(|i| mask >> i & 1 == 1).collect());
        let own: Cost = tree.iter().map(|&id| scenario.cost(graph, id)).sum();
        let mst = constrained_mst(graph, &[], &[], &scenario).map_err(|_| OracleError::Disconnected)?;
        worst = worst.max(own - mst.cost(graph, &scenario));
    }
    Ok(worst)
}

/// Whether `edge` lies on some MST when it sits at its low bound and every
/// other edge at its high bound.
pub fn oracle_is_weak(edge: EdgeId, graph: &IntervalGraph) -> bool {
    let mut scenario = ExtremeScenario::all_upper(graph.edge_count());
    scenario.set_upper(edge, false);
    on_some_mst(edge, graph, &scenario)
}

/// Whether `edge` lies on some MST when it sits at its high bound and every
/// other edge at its low bound.
pub fn oracle_is_strong(edge: EdgeId, graph: &IntervalGraph) -> bool {
    let scenario = ExtremeScenario::with_upper(graph.edge_count(), [edge]);
    on_some_mst(edge, graph, &scenario)
}

fn on_some_mst(edge: EdgeId, graph: &IntervalGraph, scenario: &ExtremeScenario) -> bool {
    let forced = constrained_mst(graph, &[edge], &[], scenario).map(|t| t.cost(graph, scenario));
    let free = minimum_spanning_tree(graph, scenario).map(|t| t.cost(graph, scenario));
    matches!((forced, free), (Ok(a), Ok(b)) if a == b)
}
