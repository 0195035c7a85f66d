use thiserror::Error;

/// Errors produced by the library and surfaced by the command line tool.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or mismatched input: wrong shapes, moduli, indices or ids.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The erasure pattern cannot be corrected by the code. The witness is a
    /// vector of `C^⊥ ∩ F_p^I` that is not in `C ∩ F_p^I`, laid out as `(a|b)`.
    #[error("erasures are not correctable (witness {witness:?})")]
    NotCorrectable { witness: Vec<u32> },

    /// The syndrome admits no error supported on the erased positions.
    #[error("inconsistent syndrome: no error supported on the erasures matches it")]
    InconsistentSyndrome,

    /// A quantity that is only defined under a precondition that does not hold.
    #[error("undefined: {0}")]
    Undefined(String),

    /// An exhaustive computation was refused because the instance is too large.
    #[error("instance too large for {what}: {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    /// A surface whose vertex and face operators do not commute.
    #[error("malformed surface: {0}")]
    MalformedSurface(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
