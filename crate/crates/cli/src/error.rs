use std::path::PathBuf;

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Core(#[from] vogel_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Process exit code: 2 for genericity or instability failures, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_genericity() => 2,
            _ => 1,
        }
    }

    pub(crate) fn at(line: usize, e: impl std::fmt::Display) -> Self {
        CliError::Parse { line, msg: e.to_string() }
    }
}
