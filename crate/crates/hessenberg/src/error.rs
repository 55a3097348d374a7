//! Error type shared across the crate.

use crate::qpoly::QPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The (family, rank) pair is not a valid finite type.
    #[error("unsupported type {family}{rank}: {reason}")]
    UnsupportedType {
        family: String,
        rank: usize,
        reason: String,
    },

    /// A coefficient vector that is neither a positive nor a negative root.
    #[error("not a root: {0:?}")]
    NotARoot(Vec<i64>),

    /// An enumeration outgrew its configured cap.
    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    /// A (partial) Hessenberg function violating its defining constraints.
    #[error("invalid Hessenberg function: {0}")]
    InvalidHessenbergFunction(String),

    /// The candidate Weyl-type subset is not contained in the ambient ideal.
    #[error("not a subset of the ambient ideal")]
    NotSubset,

    /// Precondition failure on a map whose domain is restricted.
    #[error("domain violation: {0}")]
    DomainViolation(String),

    /// The given root subset is not a lower ideal / Θ-ideal as required.
    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),

    /// Polynomial division left a nonzero remainder.
    #[error("non-exact division, remainder {0}")]
    NonExactDivision(QPolynomial),

    /// Malformed argument outside the cases above.
    #[error("invalid argument: {0}")]
    InvalidArgs(String),
}
