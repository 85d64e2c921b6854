//! Error type shared by all engine and oracle modules.

use thiserror::Error;

/// Errors raised by generators, oracles, engines, and the ensemble harness.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A configuration or argument value violates a precondition.
    #[error("invalid parameter `{name}`: {message}")]
    InvalidParameter {
        /// Name of the offending parameter.
        name: &'static str,
        /// What went wrong.
        message: String,
    },

    /// A quadrature or iteration failed to converge.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// Evaluation requested exactly at a non-differentiable point.
    #[error("singular input: {0}")]
    SingularInput(String),

    /// An accumulator was queried before any sample was pushed.
    #[error("empty ensemble: no samples accumulated")]
    EmptyEnsemble,

    /// More paths were skipped than the run tolerates.
    #[error("{skipped} of {total} paths skipped; limit is {limit:.1e} of paths")]
    TooManySkipped {
        /// Number of skipped paths.
        skipped: u64,
        /// Total paths attempted.
        total: u64,
        /// Maximum tolerated skipped fraction.
        limit: f64,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, message: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        message: message.into(),
    }
}
