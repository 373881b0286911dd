use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error (line {line}): {msg}")]
    Parse { line: usize, msg: String },
    #[error("nonplanar diagram: {0}")]
    Nonplanar(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("rule set incomplete: {0}")]
    RuleIncomplete(String),
    #[error("invalid rule set: {0}")]
    RuleSet(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("decoration mismatch: {0}")]
    Decoration(String),
    #[error("move pattern mismatch: {0}")]
    Pattern(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("derivation failed: {0}")]
    Derivation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
