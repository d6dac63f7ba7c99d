use thiserror::Error;

/// Errors raised by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// `|Im(q)|` is not a rational number; use the `(x, y^2)` sphere form instead.
    #[error("non-rational sphere radius: |Im(q)|^2 = {0} is not a rational square")]
    NonRationalRadius(String),

    #[error("{0}: the zero polynomial is not allowed here")]
    ZeroPolynomial(&'static str),

    #[error("all inputs are zero")]
    AllZero,

    #[error("expected a vector of even length, got {0}")]
    OddLength(usize),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("index out of range: {0}")]
    Index(String),

    /// `F_1, G_1, ..., F_n, G_n` share a root, so the first split equation has no solution.
    #[error("split components share the factor {0}: common zero on the slice")]
    CommonSliceZero(String),

    #[error("certificate does not match the matrix: {0}")]
    InvalidCertificate(String),

    /// A post-condition check failed. This always indicates a bug.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
