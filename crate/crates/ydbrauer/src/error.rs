use thiserror::Error;

/// Everything that can go wrong while building or checking structures.
///
/// Check *failures* (an axiom that does not hold, a rank that comes out
/// short) are not errors; they are reported through return values. Errors
/// mean the request itself was malformed: mismatched dimensions, objects
/// from different parent algebras, invalid parameters, unparseable input.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("singular matrix: {0}")]
    Singular(String),

    #[error("parent mismatch: {0}")]
    Parent(String),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("tensor pair mismatch: {0}")]
    PairMismatch(String),

    #[error("axiom failure: {0}")]
    Axiom(String),

    #[error("pair in involution check failed: {0}")]
    Involution(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("validation error at {location}: {message}")]
    Validation { location: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { location: location.into(), message: message.into() }
    }

    pub fn validation(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation { location: location.into(), message: message.into() }
    }
}
