//! Natural-frequency tuning for global frequency synchronization.
//!
//! With identical initial phases every coupling term of node `i` equals
//! `-σ_m k_i^(m) sin α_m`, so choosing
//! `ω_i = Ω + σ₂ k_i^(2) sin α₂ + σ₃ k_i^(3) sin α₃` makes every node turn at
//! exactly `Ω`. Small phase spreads are tolerated when the linearized
//! deviation `κ_i Δ` stays below `τ`, and they decay when both `cos α_m > 0`.

use serde::Serialize;

use crate::dynamics::CouplingParams;
use crate::error::{Error, Result};
use crate::hypergraph::DegreeProfile;

/// Largest initial phase spread ever suggested, whatever the tolerance.
pub const DELTA_CAP: f64 = 0.1;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FrequencyAssignment {
    pub omega: Vec<f64>,
    /// The common frequency the assignment targets.
    pub target: f64,
}

pub fn assign_frequencies(
    d: &DegreeProfile,
    target: f64,
    c: &CouplingParams,
) -> FrequencyAssignment {
    let shift2 = c.sigma2 * c.alpha2.sin();
    let shift3 = c.sigma3 * c.alpha3.sin();
    let omega = (0..d.node_count())
        .map(|i| target + shift2 * d.k(i, 2) as f64 + shift3 * d.k(i, 3) as f64)
        .collect();
    FrequencyAssignment { omega, target }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DeltaBound {
    /// `κ_i = |σ₂ cos α₂| k_i^(2) + 2 |σ₃ cos α₃| k_i^(3)`
    pub kappa: Vec<f64>,
    pub tau: f64,
    /// `min(τ / max κ_i, 0.1)`, or the cap when every `κ_i` is zero.
    pub delta_max: f64,
}

pub fn delta_max(d: &DegreeProfile, tau: f64, c: &CouplingParams) -> Result<DeltaBound> {
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "tau must be positive, got {tau}"
        )));
    }
    let w2 = (c.sigma2 * c.alpha2.cos()).abs();
    let w3 = 2.0 * (c.sigma3 * c.alpha3.cos()).abs();
    let kappa: Vec<f64> = (0..d.node_count())
        .map(|i| w2 * d.k(i, 2) as f64 + w3 * d.k(i, 3) as f64)
        .collect();
    let max_kappa = kappa.iter().copied().fold(0.0, f64::max);
    let delta_max = if max_kappa > 0.0 {
        (tau / max_kappa).min(DELTA_CAP)
    } else {
        DELTA_CAP
    };
    Ok(DeltaBound {
        kappa,
        tau,
        delta_max,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct StabilityMargin {
    pub cos2: f64,
    pub cos3: f64,
    /// Both cosines strictly positive.
    pub stable: bool,
}

pub fn stability_margin(alpha2: f64, alpha3: f64) -> StabilityMargin {
    let (cos2, cos3) = (alpha2.cos(), alpha3.cos());
    // cos(π/2) evaluates to ~6e-17; treat that as the marginal zero it is.
    let eps = 1e-12;
    StabilityMargin {
        cos2,
        cos3,
        stable: cos2 > eps && cos3 > eps,
    }
}
