use super::Hypergraph;

/// Generalized degrees `k_i^(m)`: for node `i`, the number of order-`m`
/// hyperedges containing it, counted once per occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    max_order: usize,
    // row-major [node][order], orders 0..=max_order
    counts: Vec<usize>,
}

pub fn degrees(h: &Hypergraph) -> DegreeProfile {
    let max_order = h.rank();
    let width = max_order + 1;
    let mut counts = vec![0usize; h.node_count() * width];
    for e in h.edges() {
        for &v in e {
            counts[v * width + e.len()] += 1;
        }
    }
    DegreeProfile { max_order, counts }
}

impl DegreeProfile {
    pub fn node_count(&self) -> usize {
        self.counts.len() / (self.max_order + 1)
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// `k_i^(m)`; zero for orders above the rank.
    pub fn k(&self, node: usize, order: usize) -> usize {
        if order > self.max_order {
            0
        } else {
            self.counts[node * (self.max_order + 1) + order]
        }
    }

    /// The full degree sequence of a node, indexed by order.
    pub fn sequence(&self, node: usize) -> &[usize] {
        let w = self.max_order + 1;
        &self.counts[node * w..(node + 1) * w]
    }

    /// Largest `k^(m)` over all nodes.
    pub fn max_k(&self, order: usize) -> usize {
        (0..self.node_count())
            .map(|i| self.k(i, order))
            .max()
            .unwrap_or(0)
    }
}
