//! Fibration symmetries of hypergraphs and the dynamics they constrain.
//!
//! * [`hypergraph`]: multiset hypergraphs, formats, incidence graphs,
//!   projections, degrees, connectivity and seeded generators.
//! * [`fibration`]: fibres by colour refinement on the incidence graph,
//!   balance checks and quotients.
//! * [`dynamics`]: higher-order Kuramoto model with frustration, fixed-step
//!   Dormand–Prince integration, order parameters, synchrony clusters.
//! * [`topoedit`]: fibre-preserving sparsification, retargeting to a
//!   prescribed partition, and redundancy injection.
//! * [`freqtune`]: natural frequencies for global frequency synchronization.
//! * [`io`]: JSON/CSV emitters shared with the command-line tool.

pub mod dynamics;
pub mod error;
pub mod fibration;
pub mod freqtune;
pub mod hypergraph;
pub mod io;
pub mod partition;
pub mod rng;
pub mod topoedit;

pub use error::{Error, Result};
pub use fibration::{hypergraph_fibres, FibrationResult};
pub use hypergraph::Hypergraph;
pub use partition::Partition;
