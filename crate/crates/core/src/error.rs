//! Error taxonomy shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A vector or matrix has the wrong length for the space it is used with.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A structural input is invalid (zero vector where nonzero required, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A numeric parameter is out of its admissible range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An objective returned NaN or infinity during a search.
    #[error("objective returned non-finite value at {point:?}")]
    NonFiniteObjective { point: Vec<f64> },

    /// The denominator of a ratio objective vanished.
    #[error("degenerate family: {0}")]
    DegenerateFamily(String),

    /// Every restart of a search was skipped or failed.
    #[error("estimation failed: {0}")]
    EstimationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
