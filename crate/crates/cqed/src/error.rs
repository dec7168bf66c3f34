//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CqedError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("Fock truncation too small: need at least {needed}, got {got}")]
    TruncationTooSmall { needed: usize, got: usize },
    #[error("operator is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },
    #[error("linear solve failed: {0}")]
    SolveFailed(String),
    #[error("degenerate steady-state null space (dimension >= 2)")]
    DegenerateNullSpace,
    #[error("root finding failed: {0}")]
    RootFinding(String),
    #[error("integration step size underflow at t = {t:e}")]
    StepUnderflow { t: f64 },
    #[error("{0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, CqedError>;
