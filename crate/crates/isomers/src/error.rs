use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("degree {degree} outside the supported range 1..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("cycle notation error at byte {position}: {message}")]
    ParseCycles { position: usize, message: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tabloid: {0}")]
    InvalidTabloid(String),

    #[error("shape {lower} is not one substitution step below {upper}")]
    ShapesNotAdjacent { upper: String, lower: String },

    #[error("degree {degree} too large for subgroup enumeration (limit {limit})")]
    DegreeTooLarge { degree: usize, limit: usize },

    #[error("invalid constraint: {0}")]
    InvalidConstraint(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
