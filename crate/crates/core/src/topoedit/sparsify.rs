use rand::seq::SliceRandom;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fibration::hypergraph_fibres;
use crate::hypergraph::connectivity;
use crate::hypergraph::Hypergraph;
use crate::rng::seeded;

use super::{keeps_structure, EditConfig, EditReport};

/// Greedy removal of whole hyperedge colour groups.
///
/// Each of `cfg.n_orders` seeded orders of the removable groups is walked
/// once; a group is dropped when the rest stays connected and keeps the
/// original node fibres. Groups holding a protected hyperedge are never
/// touched. The run with the fewest survivors wins (ties: lexicographically
/// smallest list of surviving indices).
pub fn sparsify(h: &Hypergraph, cfg: &EditConfig) -> Result<EditReport> {
    cfg.validate()?;
    if !connectivity(h).is_connected {
        return Err(Error::Disconnected);
    }
    let fib = hypergraph_fibres(h);
    let target = fib.node_partition;
    let groups: Vec<Vec<usize>> = fib
        .hyperedge_partition
        .classes()
        .iter()
        .filter(|g| !g.iter().any(|e| cfg.protected.contains(e)))
        .cloned()
        .collect();

    let mut rng = seeded(cfg.seed);
    let orders: Vec<Vec<usize>> = (0..cfg.n_orders)
        .map(|_| {
            let mut o: Vec<usize> = (0..groups.len()).collect();
            o.shuffle(&mut rng);
            o
        })
        .collect();

    let best = orders
        .par_iter()
        .map(|order| {
            let mut alive = vec![true; h.edge_count()];
            for &g in order {
                for &e in &groups[g] {
                    alive[e] = false;
                }
                if !keeps_structure(&h.retain_edges(|e| alive[e]), &target) {
                    for &e in &groups[g] {
                        alive[e] = true;
                    }
                }
            }
            (0..h.edge_count())
                .filter(|&e| alive[e])
                .collect::<Vec<usize>>()
        })
        .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
        .unwrap_or_else(|| (0..h.edge_count()).collect());

    let mut keep = vec![false; h.edge_count()];
    for &e in &best {
        keep[e] = true;
    }
    Ok(EditReport {
        hypergraph: h.retain_edges(|e| keep[e]),
        added: Vec::new(),
        removed: (0..h.edge_count())
            .filter(|&e| !keep[e])
            .map(|e| h.edge(e).to_vec())
            .collect(),
        converged: true,
        iterations: cfg.n_orders,
    })
}
