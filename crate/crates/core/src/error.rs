use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid configuration n={n}, n1={n1}, n2={n2}: need n >= 2 and 1 <= n1 <= n2 <= n")]
    InvalidConfig { n: i64, n1: i64, n2: i64 },

    #[error("dimension mismatch: expected {expected} variables per block, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index ({i}, {j}) out of range 1..={n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("polynomial is not a weight vector: {0}")]
    NotWeightVector(String),

    #[error("index unavailable: {0}")]
    IndexUnavailable(&'static str),

    #[error("Laurent construction left improper terms: {0}")]
    LaurentResidue(String),

    #[error("sequence of length {len} is too short for window {window}")]
    SequenceTooShort { len: usize, window: usize },

    #[error("highest-weight vector failed validation: {0}")]
    InvalidHighestWeightVector(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
