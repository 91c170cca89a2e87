//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum WenoError {
    #[error("unknown scheme {0}")]
    UnknownScheme(String),

    #[error("the order-preserving mapping is not defined for `{0}`")]
    MopUnsupported(String),

    #[error("nonlinear weights lost positivity (non-positive alpha sum)")]
    InvalidWeights,

    #[error("solution diverged: non-finite value in cell {cell} at t = {time:.6e}")]
    Diverged { cell: usize, time: f64 },

    #[error("unphysical state (non-positive density or pressure) in cell {cell} at t = {time:.6e}")]
    Unphysical { cell: usize, time: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),
}
