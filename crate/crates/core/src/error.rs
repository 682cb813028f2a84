use thiserror::Error;

/// Error type shared by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("outside convergence region: {0}")]
    Region(String),
    #[error("accuracy target missed: achieved {achieved:e}, requested {requested:e}")]
    Accuracy { achieved: f64, requested: f64 },
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("xi = 1: use the zeta-at-negative-integers path")]
    UseZetaPath,
}

pub type Result<T> = std::result::Result<T, Error>;
