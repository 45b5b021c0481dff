use thiserror::Error;

/// Errors produced by the distillation kernels, the trainer, and checkpoint I/O.
#[derive(Debug, Error)]
pub enum SamkdError {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("invalid region: {0}")]
    InvalidRegion(String),

    #[error("invalid hyperparameter: {0}")]
    InvalidHyperparameter(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("non-finite numeric input: {0}")]
    NumericInput(String),

    #[error("invalid scene spec: {0}")]
    InvalidSpec(String),

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("incompatible checkpoint: {0}")]
    Incompatible(String),

    #[error("training diverged: {0}")]
    Diverged(String),

    #[error("oracle refused input: {0}")]
    OracleRefused(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("serialization: {0}")]
    Serde(#[from] serde_json::Error),
}

impl SamkdError {
    /// Stable machine-parsable class tag, used by the CLI for one-line failure output.
    pub fn class(&self) -> &'static str {
        match self {
            SamkdError::InvalidDimension(_) => "invalid-dimension",
            SamkdError::InvalidRegion(_) => "invalid-region",
            SamkdError::InvalidHyperparameter(_) => "invalid-hyperparameter",
            SamkdError::InvalidShape(_) => "invalid-shape",
            SamkdError::NumericInput(_) => "numeric-input",
            SamkdError::InvalidSpec(_) => "invalid-spec",
            SamkdError::InvalidConfig(_) => "invalid-config",
            SamkdError::Incompatible(_) => "incompatible-checkpoint",
            SamkdError::Diverged(_) => "diverged",
            SamkdError::OracleRefused(_) => "oracle-refused",
            SamkdError::Io(_) => "io",
            SamkdError::Serde(_) => "serde",
        }
    }
}

pub type Result<T> = std::result::Result<T, SamkdError>;
