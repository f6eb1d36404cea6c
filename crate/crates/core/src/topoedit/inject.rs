use rand::seq::{index, SliceRandom};

use crate::error::Result;
use crate::fibration::hypergraph_fibres;
use crate::hypergraph::Hypergraph;
use crate::rng::{seeded, Rng};

use super::{EditConfig, EditReport};

pub use num_integer::lcm;

/// Candidate hyperedges joining one member of each class.
///
/// With `L` the lcm of the class sizes, every class's members are shuffled,
/// repeated cyclically to length `L`, and the sequences are zipped
/// position-wise. Each member of a class of size `s` lands in `L / s`
/// candidates, and no candidate repeats.
pub fn cyclic_batch(classes: &[&[usize]], rng: &mut Rng) -> Vec<Vec<usize>> {
    let l = classes.iter().fold(1, |acc, c| lcm(acc, c.len()));
    let shuffled: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| {
            let mut c = c.to_vec();
            c.shuffle(rng);
            c
        })
        .collect();
    (0..l)
        .map(|pos| {
            let mut e: Vec<usize> = shuffled.iter().map(|c| c[pos % c.len()]).collect();
            e.sort_unstable();
            e
        })
        .collect()
}

/// Adds batches of hyperedges that leave the fibres of `h` unchanged, until
/// at least `k` have been added or `cfg.trials` trials are spent.
///
/// A trial takes the next order from a shuffled cycle over `2..=rank`,
/// samples that many distinct fibres and builds their [`cyclic_batch`]. A
/// batch touching an existing hyperedge is redrawn (up to
/// `cfg.retry_limit` draws); a batch that would change the fibres is
/// dropped. `converged` reports whether `k` was reached.
pub fn inject_redundancy(h: &Hypergraph, k: usize, cfg: &EditConfig) -> Result<EditReport> {
    cfg.validate()?;
    let fibres = hypergraph_fibres(h).node_partition;
    let mut rng = seeded(cfg.seed);
    let mut orders: Vec<usize> = (2..=h.rank()).collect();
    orders.shuffle(&mut rng);

    let mut cur = h.clone();
    let mut existing = h.edge_set();
    let mut added: Vec<Vec<usize>> = Vec::new();
    let mut trials = 0;
    while added.len() < k && trials < cfg.trials && !orders.is_empty() {
        let r = orders[trials % orders.len()];
        trials += 1;
        if fibres.class_count() < r {
            continue;
        }
        let mut batch = None;
        for _ in 0..cfg.retry_limit {
            let picked = index::sample(&mut rng, fibres.class_count(), r);
            let classes: Vec<&[usize]> = picked.iter().map(|c| fibres.class(c)).collect();
            let candidate = cyclic_batch(&classes, &mut rng);
            if !candidate.iter().any(|e| existing.contains(e)) {
                batch = Some(candidate);
                break;
            }
        }
        let Some(batch) = batch else {
            continue;
        };
        let next = cur.extended(&batch)?;
        if hypergraph_fibres(&next).node_partition == fibres {
            existing.extend(batch.iter().cloned());
            added.extend(batch);
            cur = next;
        }
    }
    Ok(EditReport {
        hypergraph: cur,
        converged: added.len() >= k,
        added,
        removed: Vec::new(),
        iterations: trials,
    })
}
