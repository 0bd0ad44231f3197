use thiserror::Error;

/// Errors raised by the crystal models and the verification harness.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrystalError {
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(u32),
    #[error("operator index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: u32 },
    #[error("rank mismatch: expected {expected}, got {actual}")]
    RankMismatch { expected: u32, actual: u32 },
    #[error("weight has length {actual}, expected {expected}")]
    WeightLength { expected: usize, actual: usize },
    #[error("partition with {rows} rows is unsupported for rank {rank} (at most {rank} rows)")]
    UnsupportedShape { rows: usize, rank: u32 },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid segment [{start},{end}] for rank {rank}")]
    InvalidSegment { start: u32, end: u32, rank: u32 },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid Lusztig datum: {0}")]
    InvalidDatum(String),
    #[error("integrity failure: {0}")]
    Integrity(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("missing parameter for suite `{suite}`: {what}")]
    MissingParameter { suite: String, what: String },
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("region is not connected: {0}")]
    Disconnected(String),
    #[error("{0}")]
    Usage(String),
}

/// Errors raised while decoding a JSON [`crate::Document`].
#[derive(Debug, Error)]
pub enum DocumentError {
    /// The input is not well-formed JSON of the expected shape.
    #[error("parse error: {0}")]
    Parse(String),
    /// The input is well-formed but violates a model invariant.
    #[error("validation error: {0}")]
    Validation(#[from] CrystalError),
}
