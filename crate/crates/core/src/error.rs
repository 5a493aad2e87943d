use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid forbidden word: {0}")]
    InvalidForbiddenWord(String),

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("operation not supported for this language backend: {0}")]
    UnsupportedBackend(String),

    #[error("the language is empty: {0}")]
    EmptyLanguage(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("word labels no path in the graph: {0}")]
    WordNotAllowable(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
