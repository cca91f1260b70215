use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precision of {requested} bits is unavailable (limit {limit} bits)")]
    PrecisionUnavailable { requested: u32, limit: u32 },
    #[error("invalid precision policy: {0}")]
    InvalidPolicy(String),
    #[error("invalid harmonic index {0}: must lie in 1..={max}", max = crate::harmonic::HarmonicIndex::MAX)]
    InvalidIndex(u64),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("tail series is not summable: deg(p) = {degree}, a = {a}, b = {b}")]
    NotSummable { degree: usize, a: u32, b: u32 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error("report encoding error: {0}")]
    Report(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
