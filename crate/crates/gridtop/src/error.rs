//! Error type shared by the whole crate.
//!
//! Errors split into two families that the CLI maps to different exit codes:
//! *domain* errors (bad arguments, undefined operations) and *capacity* errors
//! (the request is well-posed but exceeds a configured enumeration bound).

use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A vertex index is out of range for the graph or complex at hand.
    #[error("vertex {0} out of range (universe has {1} vertices)")]
    VertexOutOfRange(usize, usize),

    /// A vertex label was not found in the universe.
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),

    /// The operation is undefined for the given parameters.
    #[error("{0}")]
    Domain(String),

    /// The given set is not a face of the complex.
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<String>),

    /// The request is well-posed but exceeds an enumeration bound.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A text payload (facet list, order file, family spec) failed to parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// Underlying I/O failure while reading or writing files.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Convenience constructor for domain errors.
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Convenience constructor for capacity errors.
    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    /// True when the error means "raise the bound", not "fix the input".
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity(_))
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
