use petgraph::unionfind::UnionFind;

use super::Hypergraph;
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connectivity {
    pub is_connected: bool,
    /// Connected components over the nodes, in canonical order.
    pub components: Partition,
}

/// Two nodes are connected when a chain of shared hyperedges links them.
/// A hypergraph with at most one node is connected.
pub fn connectivity(h: &Hypergraph) -> Connectivity {
    let mut uf = UnionFind::<usize>::new(h.node_count());
    for e in h.edges() {
        for w in e.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let roots: Vec<usize> = (0..h.node_count()).map(|v| uf.find(v)).collect();
    let components = Partition::from_keys(&roots);
    Connectivity {
        is_connected: components.class_count() <= 1,
        components,
    }
}

/// A connected component extracted as its own hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub hypergraph: Hypergraph,
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

/// The component with the most nodes (ties: the one containing the lowest
/// node index). Nodes keep their relative order; hyperedges keep theirs.
pub fn largest_component(h: &Hypergraph) -> Component {
    let comps = connectivity(h).components;
    let best = comps
        .classes()
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.len().cmp(&b.1.len()).then(b.0.cmp(&a.0)))
        .map(|(i, _)| i);
    let new_to_old: Vec<usize> = best.map(|c| comps.class(c).to_vec()).unwrap_or_default();
    let mut old_to_new = vec![None; h.node_count()];
    for (new, &old) in new_to_old.iter().enumerate() {
        old_to_new[old] = Some(new);
    }
    let edges: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .filter(|e| old_to_new[e[0]].is_some())
        .map(|e| e.iter().map(|&v| old_to_new[v].unwrap()).collect())
        .collect();
    let mut sub = Hypergraph::new(new_to_old.len(), edges).expect("relabeled edges are valid");
    if let Some(labels) = h.labels() {
        sub = sub
            .with_labels(new_to_old.iter().map(|&o| labels[o].clone()).collect())
            .expect("labels stay distinct");
    }
    Component {
        hypergraph: sub,
        old_to_new,
        new_to_old,
    }
}
