//! Higher-order Kuramoto model with frustration on hypergraphs of rank ≤ 3.
//!
//! ```text
//! θ̇_i = ω_i + σ₂ Σ_{ {i,j} } sin(θ_j − θ_i − α₂) + σ₃ Σ_{ {i,j,k} } sin(θ_j + θ_k − 2θ_i − α₃)
//! ```

mod clusters;
mod coupling;
mod integrate;
mod order;
mod params;
mod sweep;

pub use clusters::{extract_sync_clusters, DEFAULT_EPSILON, DEFAULT_SAMPLES};
pub use coupling::{rhs, CouplingStructure};
pub use integrate::{integrate, integrate_compiled, Dopri5, Trajectory};
pub use order::{order_parameter, order_parameters, wrapped_difference, OrderParameters};
pub use params::{CouplingParams, KuramotoParams, DEFAULT_DT};
pub use sweep::{sweep_frustration, SweepMatrix, SWEEP_STEPS};
