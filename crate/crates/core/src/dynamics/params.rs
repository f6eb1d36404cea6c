use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coupling strengths and frustration (phase-lag) angles for orders 2 and 3.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CouplingParams {
    pub sigma2: f64,
    pub sigma3: f64,
    /// radians
    pub alpha2: f64,
    /// radians
    pub alpha3: f64,
}

impl CouplingParams {
    pub fn new(sigma2: f64, sigma3: f64, alpha2: f64, alpha3: f64) -> Self {
        CouplingParams {
            sigma2,
            sigma3,
            alpha2,
            alpha3,
        }
    }

    /// Same frustration angle for both orders.
    pub fn uniform_alpha(sigma2: f64, sigma3: f64, alpha: f64) -> Self {
        Self::new(sigma2, sigma3, alpha, alpha)
    }
}

pub const DEFAULT_DT: f64 = 0.1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KuramotoParams {
    pub coupling: CouplingParams,
    /// Natural frequencies, one per node.
    pub omega: Vec<f64>,
    /// Initial phases, one per node.
    pub theta0: Vec<f64>,
    pub dt: f64,
    pub t_max: f64,
}

impl KuramotoParams {
    /// Identical oscillators: every node gets the same `omega` and `theta0`.
    pub fn identical(
        node_count: usize,
        coupling: CouplingParams,
        omega: f64,
        theta0: f64,
        t_max: f64,
    ) -> Self {
        KuramotoParams {
            coupling,
            omega: vec![omega; node_count],
            theta0: vec![theta0; node_count],
            dt: DEFAULT_DT,
            t_max,
        }
    }

    pub fn with_dt(mut self, dt: f64) -> Self {
        self.dt = dt;
        self
    }

    /// Number of integration steps, `round(t_max / dt)`.
    pub fn steps(&self) -> usize {
        (self.t_max / self.dt).round() as usize
    }

    pub fn validate(&self, node_count: usize) -> Result<()> {
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "dt must be > 0, got {}",
                self.dt
            )));
        }
        if !(self.t_max >= self.dt && self.t_max.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "t_max ({}) must be at least dt ({})",
                self.t_max, self.dt
            )));
        }
        if self.omega.len() != node_count || self.theta0.len() != node_count {
            return Err(Error::InvalidParameter(format!(
                "omega/theta0 lengths ({}, {}) must equal node count {node_count}",
                self.omega.len(),
                self.theta0.len()
            )));
        }
        let c = &self.coupling;
        let all = [c.sigma2, c.sigma3, c.alpha2, c.alpha3];
        if all
            .iter()
            .chain(&self.omega)
            .chain(&self.theta0)
            .any(|x| !x.is_finite())
        {
            return Err(Error::InvalidParameter("parameters must be finite".into()));
        }
        Ok(())
    }
}
