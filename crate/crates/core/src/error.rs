use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown symbol {symbol:?} at position {position}")]
    UnknownSymbol { position: usize, symbol: char },

    /// A prefix dips below level 0, or the path does not end at level 0.
    /// `position` is the offending step index, or the step count when the
    /// path ends off the axis.
    #[error("geometry violation at position {position}: {reason}")]
    GeometryViolation {
        position: usize,
        reason: &'static str,
    },

    #[error("constraint violation: {0}")]
    ConstraintViolation(String),

    #[error("family mismatch: {0}")]
    FamilyMismatch(String),

    #[error("index {index} out of range for path with {len} steps")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("operation requires a nonempty path")]
    EmptyPath,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size {n} exceeds the configured guard bound {limit}")]
    SizeLimitExceeded { n: usize, limit: usize },

    #[error("input outside the bijection's domain: {0}")]
    DomainViolation(String),

    #[error("series has zero constant term")]
    ZeroConstantTerm,

    #[error("coefficient x^{requested} requested from a series truncated at order {order}")]
    TruncationExceeded { requested: usize, order: usize },

    #[error("invalid Riordan pair: {0}")]
    InvalidRiordan(&'static str),

    #[error("expected an integer, found {0}")]
    NonInteger(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
