//! Divisor-sum seed sequences and the recurrence transform between seeds and
//! partition-type sequences.
//!
//! A seed sequence `s` (with `s_0 = 0`) determines a transformed sequence `t`
//! through
//!
//! ```text
//! t_0 = 1,    t_n = (1/n) * sum_{k=0}^{n-1} s_{n-k} * t_k
//! ```
//!
//! and the relation inverts exactly. Seeding with a divisor sum turns `t` into
//! a partition counting sequence: all divisors give p(n), odd divisors give
//! the count of partitions into odd parts, divisors coprime to the modulus q
//! give the count of partitions into parts not divisible by q.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Which divisors (or partition parts) are admitted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DivisorFlavor {
    /// Every divisor.
    All,
    /// Odd divisors only.
    Odd,
    /// Divisors not divisible by the modulus, which must be at least 2.
    /// Build through [`DivisorFlavor::not_div`] to keep that invariant.
    NotDiv(u64),
}

impl DivisorFlavor {
    /// Checked constructor for the not-divisible flavor.
    pub fn not_div(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::BadModulus(modulus));
        }
        Ok(DivisorFlavor::NotDiv(modulus))
    }

    /// Does this flavor admit `d` as a divisor or partition part?
    pub fn admits(self, d: u64) -> bool {
        match self {
            DivisorFlavor::All => true,
            DivisorFlavor::Odd => d % 2 == 1,
            DivisorFlavor::NotDiv(q) => !d.is_multiple_of(q),
        }
    }
}

impl fmt::Display for DivisorFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivisorFlavor::All => write!(f, "all"),
            DivisorFlavor::Odd => write!(f, "odd"),
            DivisorFlavor::NotDiv(q) => write!(f, "not-div {q}"),
        }
    }
}

/// Finite prefix `s_0..s_N` of a seed sequence; `s_0 = 0` always.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedSequence {
    terms: Vec<Rational>,
}

impl SeedSequence {
    pub fn new(terms: Vec<Rational>) -> Result<Self> {
        match terms.first() {
            None => Err(Error::EmptySequence),
            Some(first) if !first.is_zero() => Err(Error::SeedStartNotZero(first.to_string())),
            Some(_) => Ok(SeedSequence { terms }),
        }
    }

    pub fn terms(&self) -> &[Rational] {
        &self.terms
    }

    /// Largest index carried by this prefix (`N` for terms `s_0..s_N`).
    pub fn max_index(&self) -> usize {
        self.terms.len() - 1
    }
}

/// Finite prefix `t_0..t_N` of a transformed sequence; `t_0 = 1` always.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformedSequence {
    terms: Vec<Rational>,
}

impl TransformedSequence {
    pub fn new(terms: Vec<Rational>) -> Result<Self> {
        match terms.first() {
            None => Err(Error::EmptySequence),
            Some(first) if !first.is_one() => Err(Error::TransformedStartNotOne(first.to_string())),
            Some(_) => Ok(TransformedSequence { terms }),
        }
    }

    pub fn terms(&self) -> &[Rational] {
        &self.terms
    }

    pub fn max_index(&self) -> usize {
        self.terms.len() - 1
    }
}

/// Sum over the divisors of `n`, internal path that assumes `n >= 1`.
fn divisor_sum_positive(n: u64, flavor: DivisorFlavor) -> BigInt {
    debug_assert!(n >= 1);
    let mut sum = BigInt::zero();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            if flavor.admits(d) {
                sum += d;
            }
            let paired = n / d;
            if paired != d && flavor.admits(paired) {
                sum += paired;
            }
        }
        d += 1;
    }
    sum
}

/// Sum of the divisors of `n` admitted by `flavor`.
///
/// ```
/// use partex::{sequences::divisor_sum, DivisorFlavor};
/// assert_eq!(divisor_sum(15, DivisorFlavor::Odd).unwrap(), 24u32.into());
/// ```
pub fn divisor_sum(n: u64, flavor: DivisorFlavor) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(divisor_sum_positive(n, flavor))
}

/// Sum of the reciprocals of the divisors of `n`, i.e. `sigma(n)/n` reduced.
pub fn reciprocal_divisor_sum(n: u64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(Rational::new(
        divisor_sum_positive(n, DivisorFlavor::All),
        BigInt::from(n),
    ))
}

/// Seed sequence `[0, sigma_f(1), ..., sigma_f(n_max)]` for the given flavor.
///
/// The terms are the plain divisor sums; the division by the index happens
/// where it is consumed (the recurrence and the matrix band), which keeps the
/// table integral and printable.
pub fn seed_from_flavor(n_max: usize, flavor: DivisorFlavor) -> SeedSequence {
    let mut terms = Vec::with_capacity(n_max + 1);
    terms.push(Rational::zero());
    for n in 1..=n_max {
        terms.push(Rational::from_integer(divisor_sum_positive(
            n as u64, flavor,
        )));
    }
    SeedSequence { terms }
}

/// Run the recurrence forward: `t_0 = 1`, `t_n = (1/n) sum s_{n-k} t_k`.
pub fn transform_from_seed(seed: &SeedSequence) -> TransformedSequence {
    let s = seed.terms();
    let mut t: Vec<Rational> = Vec::with_capacity(s.len());
    t.push(Rational::one());
    for n in 1..s.len() {
        let mut acc = Rational::zero();
        for k in 0..n {
            acc += &s[n - k] * &t[k];
        }
        t.push(acc / BigInt::from(n));
    }
    TransformedSequence { terms: t }
}

/// Invert the recurrence: `s_n = n t_n - sum_{k=1}^{n-1} s_{n-k} t_k`.
///
/// Exact inverse of [`transform_from_seed`] on prefixes of equal length.
pub fn seed_from_transform(transformed: &TransformedSequence) -> SeedSequence {
    let t = transformed.terms();
    let mut s: Vec<Rational> = Vec::with_capacity(t.len());
    s.push(Rational::zero());
    for n in 1..t.len() {
        let mut acc = &t[n] * &Rational::from_integer(BigInt::from(n));
        for k in 1..n {
            acc -= &s[n - k] * &t[k];
        }
        s.push(acc);
    }
    SeedSequence { terms: s }
}

/// Partition counting table `[p_f(0), ..., p_f(n_max)]` for the flavor `f`,
/// computed through the recurrence transform of the divisor-sum seed.
///
/// Every term of the transform is integral here; a non-integral term would
/// mean an arithmetic bug and is reported as an error rather than truncated.
///
/// ```
/// use partex::{sequences::partition_count, DivisorFlavor};
/// let p = partition_count(6, DivisorFlavor::All).unwrap();
/// assert_eq!(p.last().unwrap(), &11u32.into());
/// ```
pub fn partition_count(n_max: usize, flavor: DivisorFlavor) -> Result<Vec<BigInt>> {
    let transformed = transform_from_seed(&seed_from_flavor(n_max, flavor));
    transformed
        .terms()
        .iter()
        .enumerate()
        .map(|(index, value)| {
            if value.is_integer() {
                Ok(value.to_integer())
            } else {
                Err(Error::NonIntegralTerm {
                    index,
                    value: value.to_string(),
                })
            }
        })
        .collect()
}
