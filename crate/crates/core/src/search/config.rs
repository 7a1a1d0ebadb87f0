use thiserror::Error;

use crate::graph::{DisjointSets, EdgeId, IntervalGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("edge {0} does not exist")]
    UnknownEdge(EdgeId),
    #[error("edge {0} is both selected and rejected")]
    Conflict(EdgeId),
    #[error("selecting edge {0} closes a cycle")]
    Cycle(EdgeId),
}

/// A search node `⟨S, R⟩`: selected edges `S`, rejected edges `R`, and the
/// remaining free edges `L`. Keeps the union-find of the `S` components so
/// cycle checks are cheap.
#[derive(Debug, Clone)]
pub struct Configuration {
    selected: Vec<bool>,
    rejected: Vec<bool>,
    selected_count: usize,
    rejected_count: usize,
    components: DisjointSets,
}

impl Configuration {
    /// The empty configuration `⟨∅, ∅⟩`.
    pub fn root(graph: &IntervalGraph) -> Self {
        let m = graph.edge_count();
        Configuration {
            selected: vec![false; m],
            rejected: vec![false; m],
            selected_count: 0,
            rejected_count: 0,
            components: DisjointSets::new(graph.vertex_count()),
        }
    }

    pub fn new(graph: &IntervalGraph, selected: &[EdgeId], rejected: &[EdgeId]) -> Result<Self, ConfigError> {
        let mut config = Configuration::root(graph);
        for &id in rejected {
            if id >= graph.edge_count() {
                return Err(ConfigError::UnknownEdge(id));
            }
            config.reject(id);
        }
        for &id in selected {
            if id >= graph.edge_count() {
                return Err(ConfigError::UnknownEdge(id));
            }
            if config.rejected[id] {
                return Err(ConfigError::Conflict(id));
            }
            if !config.selected[id] && !config.select(graph, id) {
                return Err(ConfigError::Cycle(id));
            }
        }
        Ok(config)
    }

    /// Moves a free edge into `S`. Returns false, leaving the configuration
    /// untouched, if the edge would close a cycle in `S`.
    pub fn select(&mut self, graph: &IntervalGraph, id: EdgeId) -> bool {
        debug_assert!(self.is_free(id));
        let e = graph.edge(id);
        if !self.components.union(e.u, e.v) {
            return false;
        }
        self.selected[id] = true;
        self.selected_count += 1;
        true
    }

    /// Moves a free edge into `R`.
    pub fn reject(&mut self, id: EdgeId) {
        debug_assert!(!self.selected[id]);
        if !self.rejected[id] {
            self.rejected[id] = true;
            self.rejected_count += 1;
        }
    }

    pub fn is_selected(&self, id: EdgeId) -> bool {
        self.selected[id]
    }

    pub fn is_rejected(&self, id: EdgeId) -> bool {
        self.rejected[id]
    }

    pub fn is_free(&self, id: EdgeId) -> bool {
        !self.selected[id] && !self.rejected[id]
    }

    pub fn selected_count(&self) -> usize {
        self.selected_count
    }

    pub fn rejected_count(&self) -> usize {
        self.rejected_count
    }

    pub fn free_count(&self) -> usize {
        self.selected.len() - self.selected_count - self.rejected_count
    }

    pub fn selected_edges(&self) -> Vec<EdgeId> {
        flagged(&self.selected)
    }

    pub fn rejected_edges(&self) -> Vec<EdgeId> {
        flagged(&self.rejected)
    }

    pub fn free_edges(&self) -> Vec<EdgeId> {
        (0..self.selected.len()).filter(|&id| self.is_free(id)).collect()
    }

    pub(crate) fn selected_flags(&self) -> &[bool] {
        &self.selected
    }

    pub(crate) fn rejected_flags(&self) -> &[bool] {
        &self.rejected
    }

    /// Representative of the `S` component containing `x`.
    pub fn component(&mut self, x: usize) -> usize {
        self.components.find(x)
    }
}

fn flagged(flags: &[bool]) -> Vec<EdgeId> {
    flags
        .iter()
        .enumerate()
        .filter_map(|(id, &on)| on.then_some(id))
        .collect()
}

impl PartialEq for Configuration {
    fn eq(&self, other: &Self) -> bool {
        self.selected == other.selected && self.rejected == other.rejected
    }
}

impl Eq for Configuration {}
