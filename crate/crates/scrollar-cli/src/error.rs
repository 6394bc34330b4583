use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] scrollar::Error),

    #[error("invalid input: {0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("verification failed: {0}")]
    Verdict(String),
}

impl CliError {
    /// 2 validation, 3 retry exhaustion, 4 failed internal check.
    pub fn exit_code(&self) -> i32 {
        use scrollar::Error as E;
        match self {
            CliError::Lib(E::RetryExhausted { .. }) => 3,
            CliError::Lib(E::Closure { .. } | E::Internal(_)) | CliError::Verdict(_) | CliError::Io { .. } => 4,
            CliError::Lib(_) | CliError::Usage(_) | CliError::Json(_) => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}
