use thiserror::Error;

/// Errors raised by partition, symbol, orbit, and basic-set operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("sequence lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid symbol row: {0}")]
    InvalidRow(String),

    #[error("symbol row contains consecutive integers: {0}")]
    ConsecutiveEntries(String),

    #[error("symbol entry sum does not match the rank constraint: expected {expected}, found {found}")]
    WrongSum { expected: i64, found: i64 },

    #[error("symbol row lengths are incompatible with the defect convention: {0}")]
    WrongDefectParity(String),

    #[error("symbol defect {found} lies outside the Springer range (expected {expected})")]
    WrongDefect { expected: usize, found: usize },

    #[error("symbol is not distinguished")]
    NotDistinguished,

    #[error("not a nilpotent orbit partition: {0}")]
    NotAnOrbitPartition(String),

    #[error("ell = {0} is not supported here (an odd prime is required)")]
    UnsupportedPrime(u32),

    #[error("label is not {ell}-regular: {label}")]
    NotLRegular { ell: u32, label: String },

    #[error("labels are inconsistent between inputs: {0}")]
    InconsistentLabels(String),

    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("inputs do not form a basic set datum: {0}")]
    NotABasicSetDatum(String),

    #[error("rank {n} exceeds the enumeration guard {max} (set SPRINGER_MAX_N to raise it)")]
    RankGuard { n: u64, max: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}
