use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("column {col} of the pattern has no ones; column ranges are undefined")]
    DegeneratePattern { col: usize },

    #[error("sequence is not a permutation of 1..={0}")]
    NotPermutation(usize),

    #[error("{rows}x{cols} exceeds the exhaustive oracle limit of {limit} cells")]
    OracleLimit { rows: usize, cols: usize, limit: usize },

    #[error("no finiteness certificate applies for k={k}; refusing to search an unbounded column count")]
    UnknownBound { k: usize },

    #[error("every matrix of the requested size contains some pattern of the set")]
    NoAvoider,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("layout rejected: {0}")]
    LayoutRejected(String),
}

pub type Result<T> = std::result::Result<T, Error>;
