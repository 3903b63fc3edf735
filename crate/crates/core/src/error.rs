use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected {expected} entries for a square matrix, got {actual}")]
    NotSquare { expected: usize, actual: usize },

    #[error("matrix of order {order} is not symmetric")]
    NotSymmetric { order: usize },

    #[error("central weight k must be a positive integer")]
    ZeroWeight,

    #[error("arm lengths must be positive integers")]
    ZeroArm,

    #[error("a star needs at least two arms, got {0}")]
    TooFewArms(usize),

    #[error("matrix of dimension {dimension} is too large to materialize (threshold {threshold})")]
    TooLarge { dimension: BigInt, threshold: usize },

    #[error("star is not of affine type (S = {0})")]
    NotAffine(BigRational),

    #[error("arm reciprocal sum {0} is not a positive integer")]
    NotIntegral(BigRational),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("labels do not fit the shape: {0}")]
    LabelMismatch(String),

    #[error("graph is not simple: {0}")]
    NotSimple(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("denominator {0} does not fit in a 64-bit arm length")]
    ArmOverflow(BigInt),

    #[error("unknown output format `{0}`")]
    UnknownFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
