//! Error type shared by all modules of the crate.

/// Everything that can go wrong while building or operating on values.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// n in {-1, 0, 1} does not give a group this crate handles.
    #[error("unsupported modulus n = {0}: |n| must be at least 2")]
    UnsupportedModulus(i64),

    /// An operation that needs a nonzero argument got zero.
    #[error("argument must be nonzero")]
    ZeroArgument,

    /// A fraction whose reduced denominator has a prime not dividing n.
    #[error("{0} is not an element of Z[1/n] for this context")]
    NotInRing(String),

    /// An automorphism was requested with a non-invertible alpha.
    #[error("{0} is not a unit of Z[1/n]")]
    NotAUnit(String),

    /// Parse failure, reported at a byte offset of the input.
    #[error("syntax error at byte {position}: expected {expected}")]
    Syntax { position: usize, expected: String },

    /// A t-exponent or power-form exponent left the machine-integer range.
    #[error("exponent overflow")]
    Overflow,

    /// An element or automorphism does not belong to the ring of the
    /// context it was passed with.
    #[error("value is incompatible with the arithmetic context")]
    ContextMismatch,
}

impl Error {
    pub(crate) fn syntax(position: usize, expected: impl Into<String>) -> Self {
        Error::Syntax {
            position,
            expected: expected.into(),
        }
    }
}
