use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("modulus must be an odd prime, got {0}")]
    NotOddPrime(u64),

    #[error("the transposition s1 needs at least 2 points, got a partition of {0}")]
    NoTransposition(usize),

    #[error("the element e1 needs at least 1 point, got n = 0")]
    NoDiagonalGenerator,

    #[error("r must be at least 1")]
    ZeroRank,

    #[error("expected {expected} components, got {found}")]
    ComponentCount { expected: usize, found: usize },

    #[error("sizes sum to {found}, expected {expected}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("enumeration of {estimated} multipartitions exceeds the cap of {cap}")]
    CapExceeded { estimated: u128, cap: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
