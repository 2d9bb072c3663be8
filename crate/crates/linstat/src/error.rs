use linstat_core::Error as CoreError;

/// Failures of a run, each mapped to a process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("verification breach: {0}")]
    Breach(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 0 ok, 2 config, 3 degenerate input, 4 verification breach, 5 numeric
    /// failure. IO problems count as numeric failures of the run.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Degenerate(_) => 3,
            CliError::Breach(_) => 4,
            CliError::Numeric(_) | CliError::Io(_) => 5,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::InvalidSpec(_) | CoreError::TooLarge { .. } => CliError::Config(e.to_string()),
            CoreError::DegenerateVariance { .. } | CoreError::MissingTail { .. } => CliError::Degenerate(e.to_string()),
            _ => CliError::Numeric(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Numeric(format!("json: {e}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Numeric(format!("csv: {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;
