use thiserror::Error;

use crate::quandle::AxiomReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuandleError {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("table violates the quandle axioms: {0}")]
    AxiomViolation(AxiomReport),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("element {index} out of range for carrier of size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("carrier size must be at least 1")]
    EmptyCarrier,
    #[error("t is not a unit mod n (n = {n}, t = {t})")]
    NotAUnit { n: u64, t: i64 },
    #[error("1 - t is not invertible mod {n}; the quandle may be disconnected")]
    OneMinusTNotInvertible { n: u64 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("word syntax error: {0}")]
    WordSyntax(String),
    #[error("zero exponent in token `{0}`")]
    ZeroExponent(String),
    #[error("empty exponent sequence")]
    EmptyExponents,
    #[error("group closure exceeded cap of {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("carrier size {n} exceeds the brute-force limit of {limit}")]
    SearchTooLarge { n: usize, limit: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

pub type Result<T, E = QuandleError> = std::result::Result<T, E>;
