use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed slope `{0}`")]
    MalformedSlope(String),
    #[error("non-primitive slope: gcd({0}, {1}) != 1")]
    NonPrimitive(i64, i64),
    #[error("zero vector is not a slope")]
    ZeroVector,
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(i64),
    #[error("adjacency violation at position {0}")]
    AdjacencyViolation(usize),
    #[error("diagram too short")]
    TooShort,
    #[error("degenerate diagram")]
    DegenerateDiagram,
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("no reduction step available; diagram violates a loop invariant")]
    NoReduction,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("degree must be at least 1")]
    NonPositiveDegree,
    #[error("cover multiplicity must be at least 1")]
    NonPositiveCover,
    #[error("{n} does not divide gcd({p}, {q})")]
    DivisibilityViolation { n: i64, p: i64, q: i64 },
    #[error("non-generic basepoint placement in shadow construction")]
    NonGenericPlacement,
    #[error("enumeration length {0} exceeds the configured limit {1}")]
    EnumerationLimit(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
