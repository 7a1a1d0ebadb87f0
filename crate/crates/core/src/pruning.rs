//! Weak and strong edge detection, and the per-configuration pruning rules.
//!
//! An edge is *weak* when some scenario puts it on a minimum spanning tree,
//! and *strong* when every scenario does. Only weak edges can belong to a
//! robust tree, so non-weak free edges are rejected during search.
//!
//! Weak edges are found from a single MST under the all-upper scenario: a
//! non-tree edge `(u, v)` is weak iff its low bound does not exceed the
//! largest cost on the tree path from `u` to `v`. Path maxima are memoized in
//! an `n × n` table, which bounds the total work by `O(n²)` on top of the MST.

use crate::graph::{prim, Cost, DisjointSets, Edge, EdgeId, GraphError, IntervalGraph, SpanningTree, Vertex};
use crate::search::Configuration;

/// Memo table of tree path maxima for one rooted tree.
#[derive(Debug, Clone)]
pub struct MaxCostCache {
    n: usize,
    table: Vec<Option<Cost>>,
    writes: usize,
    steps: usize,
}

impl MaxCostCache {
    pub fn new(n: usize) -> Self {
        MaxCostCache {
            n,
            table: vec![None; n * n],
            writes: 0,
            steps: 0,
        }
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Option<Cost> {
        self.table[u * self.n + v]
    }

    fn store(&mut self, u: Vertex, v: Vertex, value: Cost) {
        debug_assert!(self.get(u, v).is_none(), "cache entry ({u}, {v}) written twice");
        self.table[u * self.n + v] = Some(value);
        self.table[v * self.n + u] = Some(value);
        self.writes += 2;
    }

    /// Number of table entries filled so far (both orientations count).
    pub fn writes(&self) -> usize {
        self.writes
    }

    /// Number of ascent steps taken, i.e. uncached recursive calls.
    pub fn steps(&self) -> usize {
        self.steps
    }
}

/// Largest parent-edge cost on the tree path between `u` and `v`.
///
/// Walks both endpoints towards their common ancestor, always moving the
/// deeper one (both when level is equal). Every pair visited on the way is
/// cached, so later queries through the same pairs stop early.
pub fn max_cost_path(u: Vertex, v: Vertex, tree: &SpanningTree, cache: &mut MaxCostCache) -> Cost {
    let mut pending: Vec<(Vertex, Vertex, Cost)> = Vec::new();
    let (mut a, mut b) = (u, v);
    let mut best = loop {
        if a == b {
            break 0;
        }
        if let Some(known) = cache.get(a, b) {
            break known;
        }
        cache.steps += 1;
        let (la, lb) = (tree.level(a), tree.level(b));
        if la < lb {
            pending.push((a, b, tree.parent_cost(b)));
            b = tree.parent(b);
        } else if la > lb {
            pending.push((a, b, tree.parent_cost(a)));
            a = tree.parent(a);
        } else {
            pending.push((a, b, tree.parent_cost(a).max(tree.parent_cost(b))));
            a = tree.parent(a);
            b = tree.parent(b);
        }
    };
    while let Some((a, b, step)) = pending.pop() {
        best = best.max(step);
        cache.store(a, b, best);
    }
    best
}

/// Weak edges together with the work done to find them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakEdges {
    /// Weak edge ids, ascending.
    pub weak: Vec<EdgeId>,
    pub cache_writes: usize,
    pub path_steps: usize,
}

/// All weak edges of a connected graph, ascending.
pub fn weak_edges(graph: &IntervalGraph) -> Result<Vec<EdgeId>, GraphError> {
    weak_edges_with_stats(graph).map(|w| w.weak)
}

pub fn weak_edges_with_stats(graph: &IntervalGraph) -> Result<WeakEdges, GraphError> {
    let upper: Vec<Cost> = graph.edges().iter().map(|e| e.high).collect();
    let tree = prim(graph, &upper)?;
    let mut cache = MaxCostCache::new(graph.vertex_count());
    let mut weak = Vec::new();
    for (id, e) in graph.edges().iter().enumerate() {
        if tree.contains(id) || e.low <= max_cost_path(e.u, e.v, &tree, &mut cache) {
            weak.push(id);
        }
    }
    Ok(WeakEdges {
        weak,
        cache_writes: cache.writes(),
        path_steps: cache.steps(),
    })
}

/// All strong edges, ascending.
///
/// Edge `e = (u, v)` is strong iff, with `e` at its high bound and every
/// other edge at its low bound, `e` lies on some MST. That holds exactly when
/// no `u`–`v` path uses only edges strictly cheaper than `high(e)`, which is
/// what is checked here, one union-find sweep per edge.
pub fn strong_edges(graph: &IntervalGraph) -> Vec<EdgeId> {
    let mut by_low: Vec<EdgeId> = (0..graph.edge_count()).collect();
    by_low.sort_unstable_by_key(|&id| graph.edge(id).low);
    (0..graph.edge_count())
        .filter(|&id| {
            let e = graph.edge(id);
            let mut sets = DisjointSets::new(graph.vertex_count());
            for &other in by_low.iter().take_while(|&&f| graph.edge(f).low < e.high) {
                if other != id {
                    let f = graph.edge(other);
                    sets.union(f.u, f.v);
                }
            }
            !sets.same(e.u, e.v)
        })
        .collect()
}

/// Result of infeasibility pruning.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Feasibility {
    /// The configuration can still be completed; `rejected` free edges were
    /// moved to `R` because they closed a cycle with `S`.
    Alive { rejected: usize },
    /// `S ∪ L` no longer connects the graph.
    Dead,
}

/// Rejects every free edge whose endpoints `S` already connects, then checks
/// that `S ∪ L` still spans the graph.
pub fn prune_infeasible(config: &mut Configuration, graph: &IntervalGraph) -> Feasibility {
    let mut rejected = 0;
    let mut reach = DisjointSets::new(graph.vertex_count());
    let mut components = graph.vertex_count();
    for (id, e) in graph.edges().iter().enumerate() {
        if config.is_selected(id) && reach.union(e.u, e.v) {
            components -= 1;
        }
    }
    for (id, e) in graph.edges().iter().enumerate() {
        if !config.is_free(id) {
            continue;
        }
        if config.component(e.u) == config.component(e.v) {
            config.reject(id);
            rejected += 1;
        } else if reach.union(e.u, e.v) {
            components -= 1;
        }
    }
    if components == 1 {
        Feasibility::Alive { rejected }
    } else {
        Feasibility::Dead
    }
}

/// Moves every free bridge of `(V, S ∪ L)` into `S`, returning how many moved.
///
/// A bridge lies on every tree the configuration can still produce.
pub fn force_bridges(config: &mut Configuration, graph: &IntervalGraph) -> usize {
    let usable: Vec<bool> = (0..graph.edge_count()).map(|id| !config.is_rejected(id)).collect();
    let mut forced = 0;
    for id in bridges(graph, &usable) {
        if config.is_free(id) && config.select(graph, id) {
            forced += 1;
        }
    }
    forced
}

/// Bridges of the multigraph restricted to `usable` edges (iterative lowlink).
fn bridges(graph: &IntervalGraph, usable: &[bool]) -> Vec<EdgeId> {
    let n = graph.vertex_count();
    let mut order = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut found = Vec::new();
    let mut clock = 0;
    for start in 0..n {
        if order[start] != usize::MAX {
            continue;
        }
        order[start] = clock;
        low[start] = clock;
        clock += 1;
        // (vertex, edge used to enter it, next incident index)
        let mut stack: Vec<(Vertex, Option<EdgeId>, usize)> = vec![(start, None, 0)];
        while let Some(&mut (x, via, ref mut next)) = stack.last_mut() {
            if let Some(&id) = graph.incident(x).get(*next) {
                *next += 1;
                if !usable[id] || Some(id) == via {
                    continue;
                }
                let y = graph.edge(id).other(x);
                if order[y] == usize::MAX {
                    order[y] = clock;
                    low[y] = clock;
                    clock += 1;
                    stack.push((y, Some(id), 0));
                } else {
                    low[x] = low[x].min(order[y]);
                }
            } else {
                stack.pop();
                if let (Some(id), Some(&(p, _, _))) = (via, stack.last()) {
                    low[p] = low[p].min(low[x]);
                    if low[x] > order[p] {
                        found.push(id);
                    }
                }
            }
        }
    }
    found.sort_unstable();
    found
}

/// Work done by one suboptimality pruning pass.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SuboptimalPrune {
    pub rejected: usize,
    pub cache_writes: usize,
}

/// Rejects every free edge that is not weak in the contracted graph `G/S − R`.
///
/// Trees of the configuration are in one-to-one correspondence with spanning
/// trees of the contracted graph, so weakness there is the right notion for
/// the subproblem. Each `S` component becomes one vertex, numbered in order
/// of its smallest original vertex id. Parallel edges are kept.
pub fn prune_suboptimal(config: &mut Configuration, graph: &IntervalGraph) -> SuboptimalPrune {
    let n = graph.vertex_count();
    let mut dense = vec![usize::MAX; n];
    let mut label = vec![0; n];
    let mut k = 0;
    for (x, slot) in label.iter_mut().enumerate() {
        let root = config.component(x);
        if dense[root] == usize::MAX {
            dense[root] = k;
            k += 1;
        }
        *slot = dense[root];
    }

    let mut stats = SuboptimalPrune::default();
    let mut edges = Vec::new();
    let mut original = Vec::new();
    for (id, e) in graph.edges().iter().enumerate() {
        if !config.is_free(id) {
            continue;
        }
        let (a, b) = (label[e.u], label[e.v]);
        if a == b {
            config.reject(id);
            stats.rejected += 1;
        } else {
            edges.push(Edge::new(a, b, e.low, e.high));
            original.push(id);
        }
    }
    if k <= 1 || edges.is_empty() {
        return stats;
    }
    let contracted = IntervalGraph::new(k, edges).expect("contraction preserves edge validity");
    let Ok(weak) = weak_edges_with_stats(&contracted) else {
        return stats;
    };
    stats.cache_writes = weak.cache_writes;
    let mut is_weak = vec![false; original.len()];
    weak.weak.iter().for_each(|&c| is_weak[c] = true);
    for (c, &id) in original.iter().enumerate() {
        if !is_weak[c] {
            config.reject(id);
            stats.rejected += 1;
        }
    }
    stats
}
