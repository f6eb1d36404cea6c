use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

use super::coupling::CouplingStructure;
use super::params::KuramotoParams;

// Dormand–Prince 5(4) tableau. Only the 5th-order weights are used: the
// step size is fixed, so the embedded estimate is never needed.
const C: [f64; 6] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0];
const A: [&[f64]; 6] = [
    &[],
    &[1.0 / 5.0],
    &[3.0 / 40.0, 9.0 / 40.0],
    &[44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0],
    &[
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
    ],
    &[
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
    ],
];
const B: [f64; 6] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
];

/// Fixed-step Dormand–Prince integrator for autonomous systems.
pub struct Dopri5 {
    k: [Vec<f64>; 6],
    stage: Vec<f64>,
}

impl Dopri5 {
    pub fn new(dim: usize) -> Self {
        Dopri5 {
            k: std::array::from_fn(|_| vec![0.0; dim]),
            stage: vec![0.0; dim],
        }
    }

    /// Advances `y` by one step of size `h`.
    pub fn step<F: FnMut(&[f64], &mut [f64])>(&mut self, f: &mut F, y: &mut [f64], h: f64) {
        debug_assert_eq!(C.len(), A.len());
        for s in 0..6 {
            if s == 0 {
                self.stage.copy_from_slice(y);
            } else {
                for (i, st) in self.stage.iter_mut().enumerate() {
                    let mut acc = 0.0;
                    for (j, a) in A[s].iter().enumerate() {
                        acc += a * self.k[j][i];
                    }
                    *st = y[i] + h * acc;
                }
            }
            f(&self.stage, &mut self.k[s]);
        }
        for (i, yi) in y.iter_mut().enumerate() {
            let mut acc = 0.0;
            for (s, b) in B.iter().enumerate() {
                acc += b * self.k[s][i];
            }
            *yi += h * acc;
        }
    }
}

/// Time-indexed phases, unwrapped, one row per step (row 0 is the initial state).
#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory {
    node_count: usize,
    times: Vec<f64>,
    phases: Vec<f64>,
}

impl Trajectory {
    pub fn from_rows(times: Vec<f64>, rows: Vec<Vec<f64>>) -> Result<Self> {
        if times.len() != rows.len() || times.is_empty() {
            return Err(Error::InvalidParameter(
                "trajectory needs one or more rows, one time per row".into(),
            ));
        }
        if times.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidParameter(
                "times must increase strictly".into(),
            ));
        }
        let node_count = rows[0].len();
        if rows.iter().any(|r| r.len() != node_count) {
            return Err(Error::InvalidParameter("ragged trajectory rows".into()));
        }
        Ok(Trajectory {
            node_count,
            times,
            phases: rows.into_iter().flatten().collect(),
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// Number of stored rows (steps + 1).
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn row(&self, k: usize) -> &[f64] {
        &self.phases[k * self.node_count..(k + 1) * self.node_count]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.phases.chunks(self.node_count.max(1)).take(self.len())
    }

    pub fn last_row(&self) -> &[f64] {
        self.row(self.len() - 1)
    }

    pub fn phase(&self, k: usize, node: usize) -> f64 {
        self.phases[k * self.node_count + node]
    }
}

/// Integrates the higher-order Kuramoto model from `p.theta0` for
/// `p.steps()` fixed steps of size `p.dt`, recording every step.
pub fn integrate(h: &Hypergraph, p: &KuramotoParams) -> Result<Trajectory> {
    p.validate(h.node_count())?;
    let c = CouplingStructure::compile(h)?;
    integrate_compiled(&c, p)
}

pub fn integrate_compiled(c: &CouplingStructure, p: &KuramotoParams) -> Result<Trajectory> {
    p.validate(c.node_count())?;
    let n = c.node_count();
    let steps = p.steps();
    let mut y = p.theta0.clone();
    let mut times = Vec::with_capacity(steps + 1);
    let mut phases = Vec::with_capacity((steps + 1) * n);
    times.push(0.0);
    phases.extend_from_slice(&y);
    let mut solver = Dopri5::new(n);
    let mut f = |theta: &[f64], out: &mut [f64]| c.rhs_into(theta, p, out);
    for step in 1..=steps {
        solver.step(&mut f, &mut y, p.dt);
        if y.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFiniteState { step });
        }
        times.push(step as f64 * p.dt);
        phases.extend_from_slice(&y);
    }
    Ok(Trajectory {
        node_count: n,
        times,
        phases,
    })
}
