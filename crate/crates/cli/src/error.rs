use thiserror::Error;

/// A syntax error in an instance file, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(ParseError),

    #[error("embedding error: {0}")]
    Embedding(String),

    #[error(transparent)]
    Core(#[from] tutte_toughness::Error),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{0} counterexample(s) found")]
    Counterexample(usize),

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Embedding(_) => 2,
            CliError::Core(tutte_toughness::Error::Capacity { .. }) => 3,
            CliError::Counterexample(_) => 4,
            _ => 1,
        }
    }
}
