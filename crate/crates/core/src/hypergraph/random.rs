use std::collections::HashSet;

use rand::seq::index;

use super::{largest_component, Hypergraph};
use crate::error::{Error, Result};
use crate::rng::{seeded, Rng};

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// All k-subsets of `0..n` in lexicographic order.
fn all_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// `count` distinct k-subsets of `0..n`, uniformly without replacement.
fn sample_subsets(rng: &mut Rng, n: usize, k: usize, count: usize) -> Vec<Vec<usize>> {
    let total = binomial(n, k);
    if count == 0 {
        return Vec::new();
    }
    // dense requests: enumerate and pick indices; sparse ones: rejection
    if total <= 1 << 16 || (count as u128) * 2 >= total {
        let all = all_subsets(n, k);
        return index::sample(rng, all.len(), count)
            .into_iter()
            .map(|i| all[i].clone())
            .collect();
    }
    let mut seen = HashSet::with_capacity(count);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut s = index::sample(rng, n, k).into_vec();
        s.sort_unstable();
        if seen.insert(s.clone()) {
            out.push(s);
        }
    }
    out
}

/// Draws `m2` distinct pairs and `m3` distinct triples over `n` nodes, then
/// keeps the largest connected component. Pairs come before triples in the
/// hyperedge list; each node's label is its index in the full draw.
pub fn random_hypergraph(n: usize, m2: usize, m3: usize, seed: u64) -> Result<Hypergraph> {
    if n < 3 {
        return Err(Error::InvalidCounts(format!(
            "need at least 3 nodes, got {n}"
        )));
    }
    if m2 + m3 == 0 {
        return Err(Error::InvalidCounts("no hyperedges requested".into()));
    }
    if m2 as u128 > binomial(n, 2) || m3 as u128 > binomial(n, 3) {
        return Err(Error::InvalidCounts(format!(
            "cannot draw {m2} pairs and {m3} triples from {n} nodes"
        )));
    }
    let mut rng = seeded(seed);
    let mut edges = sample_subsets(&mut rng, n, 2, m2);
    edges.extend(sample_subsets(&mut rng, n, 3, m3));
    let full = Hypergraph::new(n, edges)?.with_labels((0..n).map(|i| i.to_string()).collect())?;
    Ok(largest_component(&full).hypergraph)
}
