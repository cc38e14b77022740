//! Topological summaries of weighted graphs and gridded scalar fields.
//!
//! The central objects are Euler characteristic curves and Betti curves:
//! for a nested family of subgraphs or sublevel/superlevel sets of a field,
//! track how the Euler characteristic `chi = sum_i (-1)^i beta_i` and the
//! Betti numbers evolve as the threshold sweeps through a fixed sequence.
//! On graphs `chi = |V| - |E| = beta_0 - beta_1`; on 2D and 3D grids the
//! complexes are cubical and `chi` is the alternating sum of cell counts.
//!
//! The crate is organized as:
//!
//! - [`types`]: shared domain types (graphs, fields, threshold specs, curves)
//! - [`graph`]: filtrations of edge- and node-weighted graphs
//! - [`cubical`]: filtrations of 1D/2D/3D scalar fields via cubical complexes
//! - [`homology`]: a small exact Betti-number oracle over Z/2 used to
//!   cross-check the fast counting routines
//! - [`stats`]: covariance, precision matrices, partial correlation graphs,
//!   kernel density estimates, spectral projection, and reference baselines
//! - [`synth`]: seeded synthetic data generators (reaction-diffusion fields,
//!   Gaussian time series, textured noise)
//! - [`rng`]: the fixed pseudo-random generator all synthetic data uses

pub mod cubical;
pub mod error;
pub mod graph;
pub mod homology;
mod linalg;
pub mod rng;
pub mod stats;
pub mod synth;
pub mod types;

pub use error::{Error, Result};
pub use types::{
    BettiCurve, Direction, ECCurve, FiltrationSpec, GridField, PointCloud2D, TimeSeriesMatrix,
    WeightedGraph,
};
