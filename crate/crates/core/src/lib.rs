//! Exact arithmetic for the correspondence between divisor-sum sequences,
//! upper-triangular Toeplitz matrix exponentials, and partition counting.
//!
//! One transform sits at the center: a seed sequence `s` with `s_0 = 0`
//! determines `t` through `t_0 = 1`, `n t_n = sum_{k<n} s_{n-k} t_k`. Packaged
//! as an upper-triangular Toeplitz matrix `S` with band `s_n/n`, the same data
//! satisfies `exp(S) = T` where `T` has band `t_n`, and when `s_n` is a
//! divisor sum, `t_n` counts partitions. The crate computes both sides by
//! independent algorithms and checks that they agree exactly:
//!
//! - [`sequences`]: divisor-sum seeds, the O(N²) recurrence in both
//!   directions, partition-count tables;
//! - [`toeplitz`]: band-stored matrices with exact nilpotent `exp`/`log`;
//! - [`partitions`]: explicit enumeration and closed-form partition sums;
//! - [`oracle`]: naive counting and dense matrix arithmetic for
//!   cross-checking the fast paths.
//!
//! Every value is an arbitrary-precision [`Rational`]; there is no floating
//! point and no tolerance anywhere.

pub mod error;
pub mod oracle;
pub mod partitions;
pub mod rational;
pub mod sequences;
pub mod toeplitz;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_traits::{One, Zero};
pub use partitions::Partition;
pub use rational::Rational;
pub use sequences::{DivisorFlavor, SeedSequence, TransformedSequence};
pub use toeplitz::BandMatrix;
