use thiserror::Error;

use crate::spec::Engine;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] pairswap_core::Error),

    #[error("engine `{engine}` cannot run this configuration: {reason}")]
    EngineMismatch { engine: Engine, reason: String },

    #[error("invalid sweep: {0}")]
    InvalidSpec(String),

    #[error("config file, line {line}: {message}")]
    ConfigFile { line: usize, message: String },

    #[error("malformed CSV at line {line}: {message}")]
    Csv { line: usize, message: String },

    #[error("{count} bound violation(s); worst residual {residual:e} at {tuple}")]
    BoundViolation { count: usize, residual: f64, tuple: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit status: 1 usage, 2 bound/verification failure, 3 numerical invariant.
    pub fn exit_code(&self) -> i32 {
        use pairswap_core::Error as Core;
        match self {
            Error::BoundViolation { .. } => 2,
            Error::Core(
                Core::InvariantViolation(_)
                | Core::InvalidState(_)
                | Core::NotHermitian { .. }
                | Core::NoConvergence { .. }
                | Core::NonFinite { .. }
                | Core::NotNormalized { .. }
                | Core::StepTooLarge { .. },
            ) => 3,
            _ => 1,
        }
    }
}
