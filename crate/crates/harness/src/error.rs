use poincare_core::Error as CoreError;
use thiserror::Error;

/// Everything a command can fail with, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("verification failed: {0}")]
    VerifyFailed(String),
    #[error("input error: {0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl CliError {
    /// 1 verification failure, 2 input, 3 invariant, 4 E(2) fault, 5 chart.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Core(e) => match e {
                CoreError::NotInE2 { .. } => 4,
                CoreError::ChartViolation { .. } | CoreError::NotInOverlap => 5,
                _ => 3,
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
