//! Fifth-order finite-volume WENO reconstruction kernels, a family of
//! Z-type nonlinear weights under one generalized-mapping decomposition,
//! the order-preserving (OP) weight transform, and the solvers/benchmark
//! problems used to exercise them.

pub mod critical;
pub mod error;
pub mod metrics;
pub mod physics;
pub mod problems;
pub mod recon;
pub mod solver;
pub mod stencil;
pub mod table;
pub mod weights;

pub use error::WenoError;
