use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid dimension {0}: must be in [1, {max}]", max = crate::perm::MAX_DIM)]
    InvalidDimension(usize),

    #[error("invalid generator r_{i}: index must be in [1, {n}]")]
    InvalidGenerator { i: i64, n: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("parse error: {msg}")]
    Parse { msg: String },

    #[error("parse error at line {line}: {msg}")]
    ParseAt { line: usize, msg: String },

    #[error("no cycle of length {length} exists in BP_{n}: reachable lengths are [8, {max}]")]
    UnreachableLength { n: usize, length: u64, max: u64 },

    #[error("word contains no letter {letter}")]
    LetterAbsent { letter: u8 },

    #[error("internal construction failure: {0}")]
    Construction(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("corpus has no entry for n={n}, length={length}")]
    MissingLength { n: usize, length: u64 },

    #[error("not a simple cycle: {0}")]
    NotACycle(String),

    #[error("word is not in canonical form (lexicographically maximal traversal differs)")]
    NotCanonical,

    #[error("canonical form parameters out of range: {0}")]
    FormParams(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
