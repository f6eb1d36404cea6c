//! Topology edits that keep, repair, or reinforce a fibre partition.

mod inject;
mod retarget;
mod sparsify;

pub use inject::{cyclic_batch, inject_redundancy, lcm};
pub use retarget::retarget;
pub use sparsify::sparsify;

use std::collections::BTreeSet;

use crate::fibration::hypergraph_fibres;
use crate::hypergraph::connectivity;
use crate::hypergraph::Hypergraph;
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EditConfig {
    pub seed: u64,
    /// Random orders of hyperedge colour groups tried by sparsification.
    pub n_orders: usize,
    /// Hyperedge indices that sparsification must keep.
    pub protected: BTreeSet<usize>,
    /// Iteration cap for retargeting.
    pub max_iter: usize,
    /// Trial cap for redundancy injection.
    pub trials: usize,
    /// Attempts per sampled class combination during injection.
    pub retry_limit: usize,
}

impl Default for EditConfig {
    fn default() -> Self {
        EditConfig {
            seed: 0,
            n_orders: 10,
            protected: BTreeSet::new(),
            max_iter: 50,
            trials: 100,
            retry_limit: 3,
        }
    }
}

impl EditConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub(crate) fn validate(&self) -> crate::Result<()> {
        if self.n_orders == 0 || self.max_iter == 0 || self.retry_limit == 0 {
            return Err(crate::Error::InvalidParameter(
                "n_orders, max_iter and retry_limit must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Outcome of an edit. `added` and `removed` hold member lists (node indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EditReport {
    pub hypergraph: Hypergraph,
    pub added: Vec<Vec<usize>>,
    pub removed: Vec<Vec<usize>>,
    pub converged: bool,
    pub iterations: usize,
}

/// True when `h` is connected and its fibres equal `target`.
pub(crate) fn keeps_structure(h: &Hypergraph, target: &Partition) -> bool {
    connectivity(h).is_connected && hypergraph_fibres(h).node_partition == *target
}
