use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed arguments (zero where a nonzero value is required, non-prime modulus, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A named hypothesis of the evaluated result does not hold.
    #[error("inapplicable({0})")]
    Inapplicable(String),

    /// An interval was too wide to decide a predicate at the current precision.
    /// Callers that own a precision loop retry at doubled precision.
    #[error("unresolved at current precision: {0}")]
    Unresolved(String),

    /// Precision doubling reached the hard cap without deciding the predicate.
    #[error("undecidable at precision cap ({cap} bits): {what}")]
    UndecidableAtCap { cap: u32, what: String },

    /// An intermediate quantity exceeded a configured size cap.
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
