//! Interval graphs, extreme scenarios and minimum spanning trees.
//!
//! Every MST routine breaks cost ties by the lowest edge identifier, so the
//! tree returned for a given scenario is unique and reproducible. Prim is used
//! when the caller needs a rooted tree with parent/level annotations; Kruskal
//! backs the constrained variant, which has to honour forced and excluded
//! edges.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use thiserror::Error;

/// Exact edge cost. All arithmetic in the crate is integral.
pub type Cost = i64;

/// Dense edge identifier, `0..m`.
pub type EdgeId = usize;

/// Dense vertex identifier, `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("edge {edge} references vertex {vertex}, but the graph has {n} vertices")]
    VertexOutOfRange { edge: EdgeId, vertex: Vertex, n: usize },
    #[error("edge {edge} is a self-loop on vertex {vertex}")]
    SelfLoop { edge: EdgeId, vertex: Vertex },
    #[error("edge {edge} has low bound {low} above high bound {high}")]
    InvertedInterval { edge: EdgeId, low: Cost, high: Cost },
    #[error("edge {edge} has negative low bound {low}")]
    NegativeCost { edge: EdgeId, low: Cost },
    #[error("graph is disconnected: no spanning tree exists")]
    Disconnected,
    #[error("no spanning tree satisfies the selected/rejected edge constraints")]
    Infeasible,
}

/// An undirected edge with a closed cost interval `[low, high]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub low: Cost,
    pub high: Cost,
}

impl Edge {
    pub fn new(u: Vertex, v: Vertex, low: Cost, high: Cost) -> Self {
        Edge { u, v, low, high }
    }

    /// Interval width `high - low`; the uncertainty of the edge.
    pub fn width(&self) -> Cost {
        self.high - self.low
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Undirected multigraph whose edge costs are only known to lie in intervals.
///
/// Construction validates endpoints, self-loops and interval bounds.
/// Connectivity is not enforced here (a disconnected instance is a legitimate
/// input that downstream operations must reject); use [`is_connected`].
/// Parallel edges are accepted because contraction produces them.
///
/// [`is_connected`]: IntervalGraph::is_connected
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalGraph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<EdgeId>>,
}

impl IntervalGraph {
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut adjacency = vec![Vec::new(); n];
        for (id, e) in edges.iter().enumerate() {
            for vertex in [e.u, e.v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { edge: id, vertex, n });
                }
            }
            if e.u == e.v {
                return Err(GraphError::SelfLoop { edge: id, vertex: e.u });
            }
            if e.low < 0 {
                return Err(GraphError::NegativeCost { edge: id, low: e.low });
            }
            if e.low > e.high {
                return Err(GraphError::InvertedInterval {
                    edge: id,
                    low: e.low,
                    high: e.high,
                });
            }
            adjacency[e.u].push(id);
            adjacency[e.v].push(id);
        }
        Ok(IntervalGraph { n, edges, adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    /// Edge identifiers incident to `x`.
    pub fn incident(&self, x: Vertex) -> &[EdgeId] {
        &self.adjacency[x]
    }

    pub fn is_connected(&self) -> bool {
        let mut sets = DisjointSets::new(self.n);
        let mut components = self.n;
        for e in &self.edges {
            if sets.union(e.u, e.v) {
                components -= 1;
            }
        }
        components == 1
    }

    /// True when the edge set is acyclic and spans every vertex.
    pub fn is_spanning_tree(&self, edge_ids: &[EdgeId]) -> bool {
        if edge_ids.len() + 1 != self.n {
            return false;
        }
        let mut sets = DisjointSets::new(self.n);
        edge_ids
            .iter()
            .all(|&id| id < self.edges.len() && sets.union(self.edges[id].u, self.edges[id].v))
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; returns false if they were already one.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}

/// A scenario with every edge at one of its two bounds, stored as the set of
/// edges sitting at their upper bound.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtremeScenario {
    upper: Vec<bool>,
}

impl ExtremeScenario {
    /// Edges in `upper_edges` at their high bound, every other edge at its low bound.
    pub fn with_upper(edge_count: usize, upper_edges: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut upper = vec![false; edge_count];
        for id in upper_edges {
            upper[id] = true;
        }
        ExtremeScenario { upper }
    }

    pub fn all_lower(edge_count: usize) -> Self {
        ExtremeScenario {
            upper: vec![false; edge_count],
        }
    }

    pub fn all_upper(edge_count: usize) -> Self {
        ExtremeScenario {
            upper: vec![true; edge_count],
        }
    }

    pub fn from_flags(upper: Vec<bool>) -> Self {
        ExtremeScenario { upper }
    }

    pub fn is_upper(&self, id: EdgeId) -> bool {
        self.upper[id]
    }

    pub fn set_upper(&mut self, id: EdgeId, at_upper: bool) {
        self.upper[id] = at_upper;
    }

    pub fn upper_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.upper.iter().enumerate().filter_map(|(id, &up)| up.then_some(id))
    }

    pub fn cost(&self, graph: &IntervalGraph, id: EdgeId) -> Cost {
        let e = graph.edge(id);
        if self.upper[id] {
            e.high
        } else {
            e.low
        }
    }

    /// The induced cost of every edge, indexed by edge id.
    pub fn costs(&self, graph: &IntervalGraph) -> Vec<Cost> {
        (0..graph.edge_count()).map(|id| self.cost(graph, id)).collect()
    }
}

/// A spanning tree rooted at vertex 0.
///
/// `parent[0] == 0` and `level[0] == 0`. For every other vertex `x`,
/// `parent_edge[x]` is the tree edge joining `x` to `parent[x]` and
/// `parent_cost[x]` its cost under the scenario the tree was built for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    edges: Vec<EdgeId>,
    parent: Vec<Vertex>,
    parent_edge: Vec<Option<EdgeId>>,
    level: Vec<usize>,
    parent_cost: Vec<Cost>,
}

impl SpanningTree {
    /// Roots an edge set at vertex 0 by breadth-first search.
    ///
    /// Returns `None` if the edges do not form a spanning tree of `graph`.
    pub fn from_edges(graph: &IntervalGraph, edge_ids: &[EdgeId], costs: &[Cost]) -> Option<Self> {
        if !graph.is_spanning_tree(edge_ids) {
            return None;
        }
        let n = graph.vertex_count();
        let mut in_tree = vec![false; graph.edge_count()];
        for &id in edge_ids {
            in_tree[id] = true;
        }
        let mut parent = vec![0; n];
        let mut parent_edge = vec![None; n];
        let mut level = vec![0; n];
        let mut parent_cost = vec![0; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &id in graph.incident(x) {
                if !in_tree[id] {
                    continue;
                }
                let y = graph.edge(id).other(x);
                if seen[y] {
                    continue;
                }
                seen[y] = true;
                parent[y] = x;
                parent_edge[y] = Some(id);
                level[y] = level[x] + 1;
                parent_cost[y] = costs[id];
                queue.push_back(y);
            }
        }
        let mut edges = edge_ids.to_vec();
        edges.sort_unstable();
        Some(SpanningTree {
            edges,
            parent,
            parent_edge,
            level,
            parent_cost,
        })
    }

    /// Tree edge identifiers in ascending order.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.edges.binary_search(&id).is_ok()
    }

    pub fn parent(&self, x: Vertex) -> Vertex {
        self.parent[x]
    }

    pub fn parent_edge(&self, x: Vertex) -> Option<EdgeId> {
        self.parent_edge[x]
    }

    pub fn level(&self, x: Vertex) -> usize {
        self.level[x]
    }

    pub fn parent_cost(&self, x: Vertex) -> Cost {
        self.parent_cost[x]
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    /// Cost of the tree under `scenario`.
    pub fn cost(&self, graph: &IntervalGraph, scenario: &ExtremeScenario) -> Cost {
        tree_cost(&self.edges, graph, scenario)
    }
}

/// Sum of the scenario-induced costs of `edge_ids`.
pub fn tree_cost(edge_ids: &[EdgeId], graph: &IntervalGraph, scenario: &ExtremeScenario) -> Cost {
    edge_ids.iter().map(|&id| scenario.cost(graph, id)).sum()
}

/// Prim's algorithm from vertex 0, recording parent and level of each vertex
/// as it joins the tree. Ties go to the lowest edge id.
pub fn minimum_spanning_tree(graph: &IntervalGraph, scenario: &ExtremeScenario) -> Result<SpanningTree, GraphError> {
    prim(graph, &scenario.costs(graph))
}

pub(crate) fn prim(graph: &IntervalGraph, costs: &[Cost]) -> Result<SpanningTree, GraphError> {
    let n = graph.vertex_count();
    let mut parent = vec![0; n];
    let mut parent_edge = vec![None; n];
    let mut level = vec![0; n];
    let mut parent_cost = vec![0; n];
    let mut in_tree = vec![false; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut heap = BinaryHeap::new();

    in_tree[0] = true;
    for &id in graph.incident(0) {
        heap.push(Reverse((costs[id], id, 0)));
    }
    while let Some(Reverse((cost, id, from))) = heap.pop() {
        let to = graph.edge(id).other(from);
        if in_tree[to] {
            continue;
        }
        in_tree[to] = true;
        parent[to] = from;
        parent_edge[to] = Some(id);
        level[to] = level[from] + 1;
        parent_cost[to] = cost;
        edges.push(id);
        for &next in graph.incident(to) {
            if !in_tree[graph.edge(next).other(to)] {
                heap.push(Reverse((costs[next], next, to)));
            }
        }
    }
    if edges.len() + 1 != n {
        return Err(GraphError::Disconnected);
    }
    edges.sort_unstable();
    Ok(SpanningTree {
        edges,
        parent,
        parent_edge,
        level,
        parent_cost,
    })
}

/// Minimum spanning tree among the trees containing every edge of `forced`
/// and none of `excluded`.
///
/// Kruskal seeded with the components of `forced`. Fails with
/// [`GraphError::Infeasible`] if `forced` has a cycle or the remaining edges
/// cannot join its components into one tree.
pub fn constrained_mst(
    graph: &IntervalGraph,
    forced: &[EdgeId],
    excluded: &[EdgeId],
    scenario: &ExtremeScenario,
) -> Result<SpanningTree, GraphError> {
    let costs = scenario.costs(graph);
    let mut selected = vec![false; graph.edge_count()];
    let mut rejected = vec![false; graph.edge_count()];
    forced.iter().for_each(|&id| selected[id] = true);
    excluded.iter().for_each(|&id| rejected[id] = true);
    let (edges, _) = kruskal(graph, &costs, &selected, &rejected).ok_or(GraphError::Infeasible)?;
    Ok(SpanningTree::from_edges(graph, &edges, &costs).expect("kruskal output spans the graph"))
}

/// Kruskal over edge-indexed membership flags; returns the sorted tree edges
/// and their total cost, or `None` when no tree satisfies the constraints.
pub(crate) fn kruskal(
    graph: &IntervalGraph,
    costs: &[Cost],
    selected: &[bool],
    rejected: &[bool],
) -> Option<(Vec<EdgeId>, Cost)> {
    let n = graph.vertex_count();
    let mut sets = DisjointSets::new(n);
    let mut tree = Vec::with_capacity(n.saturating_sub(1));
    let mut total = 0;
    for (id, e) in graph.edges().iter().enumerate() {
        if selected[id] {
            if !sets.union(e.u, e.v) {
                return None;
            }
            tree.push(id);
            total += costs[id];
        }
    }
    let mut free: Vec<EdgeId> = (0..graph.edge_count())
        .filter(|&id| !selected[id] && !rejected[id])
        .collect();
    free.sort_unstable_by_key(|&id| (costs[id], id));
    for id in free {
        if tree.len() + 1 == n {
            break;
        }
        let e = graph.edge(id);
        if sets.union(e.u, e.v) {
            tree.push(id);
            total += costs[id];
        }
    }
    if tree.len() + 1 != n {
        return None;
    }
    tree.sort_unstable();
    Some((tree, total))
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn upper(g: &IntervalGraph) -> ExtremeScenario {
        ExtremeScenario::all_upper(g.edge_count())
    }

    #[test]
    fn tree_cost_sums_scenario_costs() {
        let g = g3a();
        let s = ExtremeScenario::with_upper(3, [0, 1]);
        assert_eq!(tree_cost(&[0, 1], &g, &s), 7);
        let s = ExtremeScenario::with_upper(3, [0, 2]);
        assert_eq!(tree_cost(&[0, 2], &g, &s), 9);

        let zero = IntervalGraph::new(2, vec![Edge::new(0, 1, 0, 0)]).unwrap();
        assert_eq!(tree_cost(&[0], &zero, &upper(&zero)), 0);
    }

    #[test]
    fn mst_of_triangles() {
        let g = g3a();
        let t = minimum_spanning_tree(&g, &upper(&g)).unwrap();
        assert_eq!(t.edges(), &[0, 1]);
        assert_eq!(t.cost(&g, &upper(&g)), 7);

        let g = g3b();
        let t = minimum_spanning_tree(&g, &upper(&g)).unwrap();
        assert_eq!(t.edges(), &[0, 1]);
        assert_eq!(t.cost(&g, &upper(&g)), 4);
    }

    #[test]
    fn mst_of_tree_graph_is_the_graph() {
        let g = path4();
        for s in [ExtremeScenario::all_lower(3), upper(&g)] {
            assert_eq!(minimum_spanning_tree(&g, &s).unwrap().edges(), &[0, 1, 2]);
        }
    }

    #[test]
    fn prim_annotations() {
        let g = g3a();
        let t = minimum_spanning_tree(&g, &upper(&g)).unwrap();
        assert_eq!((t.parent(0), t.level(0)), (0, 0));
        assert_eq!((t.parent(1), t.level(1), t.parent_cost(1)), (0, 1, 3));
        assert_eq!((t.parent(2), t.level(2), t.parent_cost(2)), (1, 2, 4));
        assert_eq!(t.parent_edge(2), Some(1));
    }

    #[test]
    fn mst_ties_prefer_lowest_edge_id() {
        // Square with all costs equal: the lowest three ids win.
        let g = IntervalGraph::new(
            4,
            vec![
                Edge::new(0, 1, 1, 1),
                Edge::new(1, 2, 1, 1),
                Edge::new(2, 3, 1, 1),
                Edge::new(3, 0, 1, 1),
            ],
        )
        .unwrap();
        let s = upper(&g);
        assert_eq!(minimum_spanning_tree(&g, &s).unwrap().edges(), &[0, 1, 2]);
        assert_eq!(constrained_mst(&g, &[], &[], &s).unwrap().edges(), &[0, 1, 2]);
    }

    #[test]
    fn disconnected_graph_has_no_mst() {
        let g = IntervalGraph::new(4, vec![Edge::new(0, 1, 1, 2), Edge::new(2, 3, 1, 2)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(minimum_spanning_tree(&g, &upper(&g)), Err(GraphError::Disconnected));
    }

    #[test]
    fn constrained_examples() {
        let g = g3a();
        let s = upper(&g);
        let t = constrained_mst(&g, &[2], &[], &s).unwrap();
        assert_eq!(t.edges(), &[0, 2]);
        assert_eq!(t.cost(&g, &s), 9);
        assert_eq!(constrained_mst(&g, &[], &[0, 1], &s), Err(GraphError::Infeasible));
        assert_eq!(
            constrained_mst(&g, &[], &[], &s).unwrap().cost(&g, &s),
            minimum_spanning_tree(&g, &s).unwrap().cost(&g, &s)
        );
    }

    #[test]
    fn constrained_rejects_cyclic_forced_set() {
        let g = g3a();
        assert_eq!(
            constrained_mst(&g, &[0, 1, 2], &[], &upper(&g)),
            Err(GraphError::Infeasible)
        );
    }

    #[test]
    fn invalid_edges_are_rejected() {
        assert_eq!(
            IntervalGraph::new(2, vec![Edge::new(0, 1, 3, 2)]),
            Err(GraphError::InvertedInterval {
                edge: 0,
                low: 3,
                high: 2
            })
        );
        assert_eq!(
            IntervalGraph::new(2, vec![Edge::new(1, 1, 0, 2)]),
            Err(GraphError::SelfLoop { edge: 0, vertex: 1 })
        );
        assert!(matches!(
            IntervalGraph::new(2, vec![Edge::new(0, 2, 0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, .. })
        ));
        assert_eq!(IntervalGraph::new(0, vec![]), Err(GraphError::NoVertices));
    }

    #[test]
    fn parallel_edges_are_allowed() {
        let g = IntervalGraph::new(2, vec![Edge::new(0, 1, 4, 5), Edge::new(1, 0, 1, 2)]).unwrap();
        let t = minimum_spanning_tree(&g, &upper(&g)).unwrap();
        assert_eq!(t.edges(), &[1]);
        assert_eq!(t.parent_edge(1), Some(1));
    }

    #[test]
    fn from_edges_rejects_non_trees() {
        let g = g3a();
        let costs = upper(&g).costs(&g);
        assert!(SpanningTree::from_edges(&g, &[0], &costs).is_none());
        assert!(SpanningTree::from_edges(&g, &[0, 1, 2], &costs).is_none());
        let t = SpanningTree::from_edges(&g, &[2, 1], &costs).unwrap();
        assert_eq!(t.edges(), &[1, 2]);
        assert_eq!((t.parent(2), t.parent(1)), (0, 2));
    }
}
