use thiserror::Error;

use crate::report::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("{value} is not an element of {ring}")]
    NotInRing { value: String, ring: String },

    #[error("prime {0} is inverted in the ground ring")]
    PrimeInverted(u64),

    #[error("ambient rank mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("lattice is not a subcoalgebra")]
    NotSubcoalgebra,

    #[error("lattice is not pure")]
    NotPure,

    #[error("vector is not group-like")]
    NotGroupLike,

    #[error("image of a group-like is not group-like")]
    NotGroupLikeImage,

    #[error("coalgebra is not pointed")]
    NotPointed,

    #[error("coalgebra is not irreducible ({0} group-like elements)")]
    NotIrreducible(usize),

    #[error("filtration stabilized at rank {stable} below full rank {full}")]
    NotExhaustive { stable: usize, full: usize },

    #[error("enumeration too large: {0}")]
    TooLarge(String),

    #[error("degree {requested} exceeds the valid range (at most {max})")]
    DegreeTooHigh { requested: usize, max: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("validation failed:\n{0}")]
    Validation(ValidationReport),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    pub(crate) fn invariant(message: impl Into<String>) -> Self {
        Error::Invariant(message.into())
    }
}
