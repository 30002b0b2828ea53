use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square: {len} entries cannot form a {dim}x{dim} matrix")]
    NotSquare { dim: usize, len: usize },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("non-finite entry at index {index}")]
    NonFinite { index: usize },

    #[error("matrix is not Hermitian (max deviation {deviation:e}, allowed {allowed:e})")]
    NotHermitian { deviation: f64, allowed: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("state is not normalized (norm^2 = {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("closed form not applicable: {0}")]
    ClosedFormDomain(String),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("step too large: dt * rate scale = {product} exceeds {limit}")]
    StepTooLarge { product: f64, limit: f64 },

    #[error("numerical invariant violated: {0}")]
    InvariantViolation(String),

    #[error("invalid density matrix: {0}")]
    InvalidState(String),
}
