//! Undirected hypergraphs whose hyperedges are multisets of nodes.

mod connectivity;
mod degree;
mod incidence;
mod parse;
mod project;
mod random;

pub use connectivity::{connectivity, largest_component, Component, Connectivity};
pub use degree::{degrees, DegreeProfile};
pub use incidence::{incidence, IncidenceBipartite, Layer};
pub use parse::{parse_hypergraph, write_hyperedge_list, write_json, Format};
pub use project::{project, ProjectionMode};
pub use random::random_hypergraph;

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};

/// A hypergraph `H = (N, E)`.
///
/// Nodes are `0..node_count`. Each hyperedge is stored as a sorted member
/// list in which a node may repeat; the position of a hyperedge in
/// [`Hypergraph::edges`] is its stable index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    node_count: usize,
    labels: Option<Vec<String>>,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(node_count: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut edges = edges;
        for (index, e) in edges.iter_mut().enumerate() {
            if e.is_empty() {
                return Err(Error::EmptyHyperedge { index });
            }
            if let Some(&node) = e.iter().find(|&&v| v >= node_count) {
                return Err(Error::NodeOutOfRange {
                    edge: index,
                    node,
                    node_count,
                });
            }
            e.sort_unstable();
        }
        Ok(Hypergraph {
            node_count,
            labels: None,
            edges,
        })
    }

    /// Attaches one label per node. Labels must be distinct.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.node_count {
            return Err(Error::InvalidParameter(format!(
                "{} labels given for {} nodes",
                labels.len(),
                self.node_count
            )));
        }
        let mut seen = HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &[usize] {
        &self.edges[index]
    }

    /// Largest hyperedge cardinality, counting repeated members; 0 when edgeless.
    pub fn rank(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Indices of the hyperedges of order `m`.
    pub fn edges_of_order(&self, m: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(move |(_, e)| e.len() == m)
            .map(|(i, _)| i)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The label of `node`, or its decimal index when the hypergraph is unlabeled.
    pub fn label(&self, node: usize) -> String {
        match &self.labels {
            Some(l) => l[node].clone(),
            None => node.to_string(),
        }
    }

    /// Every node's label (decimal indices when unlabeled).
    pub fn label_vec(&self) -> Vec<String> {
        (0..self.node_count).map(|i| self.label(i)).collect()
    }

    /// Resolves a label to a node index.
    pub fn node_by_label(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|x| x == label),
            None => label.parse().ok().filter(|&i| i < self.node_count),
        }
    }

    pub fn label_index(&self) -> HashMap<String, usize> {
        (0..self.node_count).map(|i| (self.label(i), i)).collect()
    }

    /// Same nodes and labels, different hyperedge list.
    pub fn with_edges(&self, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut h = Hypergraph::new(self.node_count, edges)?;
        h.labels = self.labels.clone();
        Ok(h)
    }

    /// Keeps the hyperedges whose index satisfies `keep`, in their original order.
    pub fn retain_edges(&self, mut keep: impl FnMut(usize) -> bool) -> Self {
        Hypergraph {
            node_count: self.node_count,
            labels: self.labels.clone(),
            edges: self
                .edges
                .iter()
                .enumerate()
                .filter(|(i, _)| keep(*i))
                .map(|(_, e)| e.clone())
                .collect(),
        }
    }

    /// Appends hyperedges (members are sorted on the way in).
    pub fn extended(&self, extra: &[Vec<usize>]) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.extend(extra.iter().cloned());
        self.with_edges(edges)
    }

    /// Drops repeated hyperedges, keeping the first occurrence of each multiset.
    pub fn deduplicated(&self) -> Self {
        let mut seen = HashSet::new();
        let keep: Vec<bool> = self.edges.iter().map(|e| seen.insert(e.clone())).collect();
        self.retain_edges(|i| keep[i])
    }

    /// Drops order-1 hyperedges.
    pub fn without_singletons(&self) -> Self {
        self.retain_edges(|i| self.edges[i].len() > 1)
    }

    /// Relabels nodes: node `i` becomes `perm[i]`. Labels travel with their nodes.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.node_count {
            return Err(Error::InvalidParameter(
                "permutation length mismatch".into(),
            ));
        }
        let mut inverse = vec![usize::MAX; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            if p >= perm.len() || inverse[p] != usize::MAX {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            inverse[p] = i;
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| perm[v]).collect())
            .collect();
        let mut h = Hypergraph::new(self.node_count, edges)?;
        if let Some(l) = &self.labels {
            h.labels = Some(inverse.iter().map(|&old| l[old].clone()).collect());
        }
        Ok(h)
    }

    /// The set of member multisets, for membership tests.
    pub fn edge_set(&self) -> HashSet<Vec<usize>> {
        self.edges.iter().cloned().collect()
    }
}
