use thiserror::Error;

use crate::catalog::ClassInstance;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("argument must be positive, got 0")]
    Zero,

    #[error("{what} must be odd, got {value}")]
    NotOdd { what: &'static str, value: u64 },

    #[error("{l} does not divide {n}")]
    NotDivisor { l: u64, n: u64 },

    #[error("R(3^{n}) is not a simple small Ree group (need odd n >= 3)")]
    UnsupportedRank { n: u64 },

    #[error("class {instance} does not exist in R(3^{n})")]
    Inapplicable { instance: ClassInstance, n: u64 },

    #[error("element order {0} is not tabulated (supported: 2, 3, 6, 9)")]
    UnsupportedElementOrder(u32),

    #[error("unsupported probability specification: {0}")]
    UnsupportedProbability(String),

    #[error("unknown target group: {0}")]
    UnknownTarget(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("generators have different degrees ({expected} vs {found})")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("at least one generator is required")]
    NoGenerators,

    #[error("group of order {order} exceeds the subgroup-search bound {bound}")]
    BoundExceeded { order: usize, bound: usize },

    #[error("target arity {0} exceeds the brute-force limit of 3")]
    ArityTooLarge(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
