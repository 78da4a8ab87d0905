use thiserror::Error;

/// Errors raised by constructors, solvers and builders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two objects from rings with different variable counts were combined.
    #[error("ring mismatch: expected {expected} variables, found {found}")]
    RingMismatch { expected: usize, found: usize },

    /// Input is well-formed but outside the domain of the operation.
    #[error("{0}")]
    Domain(String),

    /// Text input could not be parsed.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A generator of the submodule ideal is not in the ambient ideal.
    #[error("I is not contained in J: generator {witness} of I does not lie in J")]
    NotContained { witness: String },

    /// The characteristic poset is too large for exact search.
    #[error("characteristic poset has {size} elements, above the limit of {limit}")]
    SizeLimit { size: usize, limit: usize },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
