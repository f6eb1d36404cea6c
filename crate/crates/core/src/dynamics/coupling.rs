use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

use super::params::KuramotoParams;

/// Per-node interaction lists compiled from the hyperedge list.
///
/// A node gets one entry per occurrence in a hyperedge: the co-member for
/// a pair, the two co-members for a triple. Entries follow hyperedge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CouplingStructure {
    pairs: Vec<Vec<usize>>,
    triples: Vec<Vec<(usize, usize)>>,
}

impl CouplingStructure {
    pub fn compile(h: &Hypergraph) -> Result<Self> {
        let n = h.node_count();
        let mut pairs = vec![Vec::new(); n];
        let mut triples = vec![Vec::new(); n];
        for e in h.edges() {
            match e.len() {
                2 => {
                    pairs[e[0]].push(e[1]);
                    pairs[e[1]].push(e[0]);
                }
                3 => {
                    triples[e[0]].push((e[1], e[2]));
                    triples[e[1]].push((e[0], e[2]));
                    triples[e[2]].push((e[0], e[1]));
                }
                m => return Err(Error::UnsupportedOrder(m)),
            }
        }
        Ok(CouplingStructure { pairs, triples })
    }

    pub fn node_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair_partners(&self, node: usize) -> &[usize] {
        &self.pairs[node]
    }

    pub fn triple_partners(&self, node: usize) -> &[(usize, usize)] {
        &self.triples[node]
    }

    /// Phase velocities
    /// `ω_i + σ₂ Σ sin(θ_j − θ_i − α₂) + σ₃ Σ sin(θ_j + θ_k − 2θ_i − α₃)`
    /// written into `out`.
    pub fn rhs_into(&self, theta: &[f64], p: &KuramotoParams, out: &mut [f64]) {
        let c = &p.coupling;
        for (i, slot) in out.iter_mut().enumerate() {
            let ti = theta[i];
            let mut s2 = 0.0;
            for &j in &self.pairs[i] {
                s2 += (theta[j] - ti - c.alpha2).sin();
            }
            let mut s3 = 0.0;
            for &(j, k) in &self.triples[i] {
                s3 += (theta[j] + theta[k] - 2.0 * ti - c.alpha3).sin();
            }
            *slot = p.omega[i] + c.sigma2 * s2 + c.sigma3 * s3;
        }
    }
}

/// Allocating form of [`CouplingStructure::rhs_into`].
pub fn rhs(c: &CouplingStructure, theta: &[f64], p: &KuramotoParams) -> Vec<f64> {
    let mut out = vec![0.0; c.node_count()];
    c.rhs_into(theta, p, &mut out);
    out
}
