use std::f64::consts::FRAC_PI_2;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

use super::coupling::CouplingStructure;
use super::integrate::integrate_compiled;
use super::order::order_parameter;
use super::params::KuramotoParams;

/// Steps integrated per grid cell.
pub const SWEEP_STEPS: usize = 500;

/// Time-averaged global order parameter over a frustration grid.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepMatrix {
    pub alpha2: Vec<f64>,
    pub alpha3: Vec<f64>,
    /// `values[i][j]` belongs to `(alpha2[i], alpha3[j])`.
    pub values: Vec<Vec<f64>>,
}

/// For every `(α₂, α₃)` pair, integrates [`SWEEP_STEPS`] steps from `base`
/// (its own `t_max` is ignored) and averages the global order parameter over
/// all recorded rows, the initial one included. Cells run in parallel and
/// are merged by grid index.
pub fn sweep_frustration(
    h: &Hypergraph,
    alpha2: &[f64],
    alpha3: &[f64],
    base: &KuramotoParams,
) -> Result<SweepMatrix> {
    if let Some(a) = alpha2
        .iter()
        .chain(alpha3)
        .find(|a| !(0.0..FRAC_PI_2).contains(*a))
    {
        return Err(Error::InvalidParameter(format!(
            "frustration {a} outside [0, π/2)"
        )));
    }
    let c = CouplingStructure::compile(h)?;
    let mut params = base.clone();
    params.t_max = SWEEP_STEPS as f64 * params.dt;
    params.validate(h.node_count())?;

    let cells: Vec<(usize, usize)> = (0..alpha2.len())
        .flat_map(|i| (0..alpha3.len()).map(move |j| (i, j)))
        .collect();
    let results: Vec<Result<f64>> = cells
        .par_iter()
        .map(|&(i, j)| {
            let mut p = params.clone();
            p.coupling.alpha2 = alpha2[i];
            p.coupling.alpha3 = alpha3[j];
            let t = integrate_compiled(&c, &p)?;
            let sum: f64 = t.rows().map(|r| order_parameter(r.iter().copied())).sum();
            Ok(sum / t.len() as f64)
        })
        .collect();

    let mut values = vec![vec![0.0; alpha3.len()]; alpha2.len()];
    for (&(i, j), r) in cells.iter().zip(results) {
        values[i][j] = r?;
    }
    Ok(SweepMatrix {
        alpha2: alpha2.to_vec(),
        alpha3: alpha3.to_vec(),
        values,
    })
}
