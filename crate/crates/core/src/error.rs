use alloc::string::String;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two polynomials (or a polynomial and a context) use different variable lists.
    #[error("variable lists do not match")]
    VariableMismatch,
    /// Matrix dimensions are incompatible with the operation.
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// A matrix that had to be inverted is singular.
    #[error("singular matrix")]
    Singular,
    /// Input outside the domain of the operation (e.g. `c` not positive definite).
    #[error("domain error: {0}")]
    Domain(String),
    /// A resource guard was hit. Results are never silently truncated.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// A construction whose mathematical precondition failed.
    #[error("construction failed: {0}")]
    Construction(String),
    /// Malformed input data.
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = core::result::Result<T, Error>;
