use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error (line {line}): {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Analysis(#[from] gotzmann_core::Error),
}

impl CliError {
    /// 2 for unreadable or malformed input, 1 when an analysis gives up
    /// (caps, non-stable input to a stable-only verb).
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } => 2,
            CliError::Analysis(_) => 1,
        }
    }
}
