use std::collections::HashMap;

use petgraph::unionfind::UnionFind;
use rand::seq::index;

use crate::error::{Error, Result};
use crate::hypergraph::DegreeProfile;
use crate::partition::Partition;
use crate::rng::seeded;

use super::integrate::Trajectory;
use super::order::{order_parameter, wrapped_difference};

pub const DEFAULT_EPSILON: f64 = 1e-6;
pub const DEFAULT_SAMPLES: usize = 10;

/// Groups nodes that stay phase-locked along a trajectory.
///
/// Only nodes with the same degree sequence over all orders are compared. A
/// pair is linked when its wrapped phase difference is below `epsilon` at
/// `n_samples` random rows and its time-averaged two-node order parameter
/// satisfies `1 − ⟨R_ij⟩ < epsilon`. Clusters are the connected components
/// of the links; unlinked nodes stay singletons.
pub fn extract_sync_clusters(
    t: &Trajectory,
    d: &DegreeProfile,
    epsilon: f64,
    n_samples: usize,
    seed: u64,
) -> Result<Partition> {
    if epsilon.is_nan() || epsilon <= 0.0 {
        return Err(Error::InvalidParameter("epsilon must be positive".into()));
    }
    if n_samples == 0 {
        return Err(Error::InvalidParameter(
            "need at least one time sample".into(),
        ));
    }
    if t.is_empty() {
        return Err(Error::InvalidParameter("empty trajectory".into()));
    }
    let n = t.node_count();
    if d.node_count() != n {
        return Err(Error::InvalidParameter(format!(
            "degree profile has {} nodes, trajectory has {n}",
            d.node_count()
        )));
    }
    let mut rng = seeded(seed);
    let rows = t.len();
    let samples: Vec<usize> = if n_samples <= rows {
        index::sample(&mut rng, rows, n_samples).into_vec()
    } else {
        use rand::Rng;
        (0..n_samples).map(|_| rng.random_range(0..rows)).collect()
    };

    let mut groups: HashMap<&[usize], Vec<usize>> = HashMap::new();
    for i in 0..n {
        groups.entry(d.sequence(i)).or_default().push(i);
    }
    let mut group_list: Vec<Vec<usize>> = groups.into_values().collect();
    group_list.sort();

    let mut uf = UnionFind::<usize>::new(n);
    for g in &group_list {
        for (a, &i) in g.iter().enumerate() {
            for &j in &g[a + 1..] {
                if uf.equiv(i, j) {
                    continue;
                }
                let aligned = samples
                    .iter()
                    .all(|&k| wrapped_difference(t.phase(k, i), t.phase(k, j)).abs() < epsilon);
                if !aligned {
                    continue;
                }
                let mean_r = t
                    .rows()
                    .map(|row| order_parameter([row[i], row[j]]))
                    .sum::<f64>()
                    / rows as f64;
                if 1.0 - mean_r < epsilon {
                    uf.union(i, j);
                }
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|v| uf.find(v)).collect();
    Ok(Partition::from_keys(&roots))
}
