//! Fibres of hypergraphs: the minimal balanced colouring of the incidence
//! bipartite graph, seeded with one colour per layer.

mod balance;
mod quotient;
mod refine;

pub use balance::{
    check_balance, is_balanced, node_signature, node_signatures, Imbalance, NodeSignature,
};
pub use quotient::{quotient, QuotientIncidence};
pub use refine::{refine, Refinement};

use crate::hypergraph::{incidence, Hypergraph};
use crate::partition::{FibreStats, Partition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationResult {
    pub node_partition: Partition,
    pub hyperedge_partition: Partition,
    pub round_count: usize,
}

/// Computes node fibres and hyperedge colours of `h`.
pub fn hypergraph_fibres(h: &Hypergraph) -> FibrationResult {
    let b = incidence(h);
    let r = refine(&b.adjacency(), &b.layer_colors());
    let labels = r.partition.labels();
    let (nodes, edges) = labels.split_at(b.left_count());
    FibrationResult {
        node_partition: Partition::from_keys(nodes),
        hyperedge_partition: Partition::from_keys(edges),
        round_count: r.rounds,
    }
}

/// Class count, mean class size, and number of classes with two or more members.
pub fn fibre_stats(p: &Partition) -> FibreStats {
    p.stats()
}
