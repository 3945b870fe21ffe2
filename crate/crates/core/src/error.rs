//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("duplicate subsystem label `{0}`")]
    DuplicateLabel(String),

    #[error("subsystem `{label}` has invalid dimension {dim}")]
    InvalidDimension { label: String, dim: usize },

    #[error("unknown subsystem label `{0}`")]
    UnknownSlot(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operands live on different Hilbert spaces")]
    SpaceMismatch,

    #[error("matrix is not Hermitian (defect {defect:.3e} exceeds {tol:.3e})")]
    NotHermitian { defect: f64, tol: f64 },

    #[error("matrix is not unitary (defect {defect:.3e} exceeds {tol:.3e})")]
    NotUnitary { defect: f64, tol: f64 },

    #[error("state is not normalized (|norm^2 - 1| = {0:.3e})")]
    NotNormalized(f64),

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("invalid time interval: t_end {t_end} < t_start {t_start}")]
    InvalidInterval { t_start: f64, t_end: f64 },

    #[error("step size underflow at t = {t} (h = {h:.3e})")]
    StepUnderflow { t: f64, h: f64 },

    #[error("propagation exceeded {0} steps without reaching the horizon")]
    MaxStepsExceeded(usize),

    #[error("degenerate parameters: {denominator} = {value:.6e} meV vanishes")]
    DegenerateParameters { denominator: String, value: f64 },

    #[error("degenerate phases: conditional rate |Phi_+g - Phi_-g| = {0:.3e} meV")]
    DegeneratePhases(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
