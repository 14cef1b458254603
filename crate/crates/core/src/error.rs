//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Divisor sums are defined for n >= 1 only.
    #[error("divisor sum is undefined for n = 0")]
    ZeroArgument,

    #[error("not-divisible flavor needs a modulus of at least 2, got {0}")]
    BadModulus(u64),

    #[error("sequence must contain at least one term")]
    EmptySequence,

    #[error("seed sequence must start with s_0 = 0, got {0}")]
    SeedStartNotZero(String),

    #[error("transformed sequence must start with t_0 = 1, got {0}")]
    TransformedStartNotOne(String),

    #[error("matrix order must be at least 1")]
    ZeroOrder,

    #[error("matrix order {order} exceeds the available sequence length {len}")]
    OrderExceedsSequence { order: usize, len: usize },

    #[error("matrix orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("matrix exponential needs a zero diagonal, found band[0] = {0}")]
    DiagonalNotZero(String),

    #[error("matrix logarithm needs a unit diagonal, found band[0] = {0}")]
    DiagonalNotOne(String),

    #[error("entry ({i}, {j}) is out of range for order {order}")]
    EntryOutOfRange { i: usize, j: usize, order: usize },

    #[error("index {index} is out of range for a sequence of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    /// Signals an arithmetic bug: the transform of an integer divisor-sum seed
    /// must stay integral.
    #[error("term {index} should be an integer but came out as {value}")]
    NonIntegralTerm { index: usize, value: String },

    #[error("matrix is not strictly upper triangular: nonzero entry at ({i}, {j})")]
    NotStrictlyUpper { i: usize, j: usize },

    #[error("matrix is not square")]
    NotSquare,

    #[error("invalid partition: {0}")]
    InvalidPartition(&'static str),

    #[error("invalid rational literal {0:?}")]
    BadRational(String),

    #[error("rational literal {0:?} has a zero denominator")]
    ZeroDenominator(String),

    #[error("band length {len} does not match the declared order {order}")]
    BandLengthMismatch { len: usize, order: usize },

    #[error("invalid band matrix JSON: {0}")]
    BadJson(#[from] serde_json::Error),
}
