//! Explicit partition enumeration and the closed-form partition sums that
//! express the recurrence transform and its inverse directly.
//!
//! These evaluators walk every partition of `n`, so their cost grows with the
//! partition numbers themselves; they are reference implementations meant to
//! cross-validate the O(N^2) recurrences, not to replace them. Practical
//! limit is around `n <= 30`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sequences::{DivisorFlavor, SeedSequence, TransformedSequence};

/// A partition of `n` into `summands` positive parts, stored as
/// `(part, multiplicity)` pairs with strictly decreasing parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<(u64, u64)>,
    n: u64,
    summands: u64,
}

impl Partition {
    /// Build from `(part, multiplicity)` pairs; parts must be strictly
    /// decreasing, all parts and multiplicities positive.
    pub fn new(parts: Vec<(u64, u64)>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts"));
        }
        for window in parts.windows(2) {
            if window[0].0 <= window[1].0 {
                return Err(Error::InvalidPartition("parts must strictly decrease"));
            }
        }
        let mut n = 0u64;
        let mut summands = 0u64;
        for &(part, multiplicity) in &parts {
            if part == 0 || multiplicity == 0 {
                return Err(Error::InvalidPartition(
                    "parts and multiplicities must be positive",
                ));
            }
            n += part * multiplicity;
            summands += multiplicity;
        }
        Ok(Partition { parts, n, summands })
    }

    /// Run-length encode a non-increasing list of parts.
    fn from_expanded(expanded: &[u64]) -> Self {
        debug_assert!(!expanded.is_empty());
        let mut parts: Vec<(u64, u64)> = Vec::new();
        for &part in expanded {
            match parts.last_mut() {
                Some((value, multiplicity)) if *value == part => *multiplicity += 1,
                _ => parts.push((part, 1)),
            }
        }
        let n = expanded.iter().sum();
        Partition {
            parts,
            n,
            summands: expanded.len() as u64,
        }
    }

    /// `(part, multiplicity)` pairs, parts strictly decreasing.
    pub fn parts(&self) -> &[(u64, u64)] {
        &self.parts
    }

    /// The partitioned integer.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Total number of summands, multiplicities counted.
    pub fn summands(&self) -> u64 {
        self.summands
    }

    /// Parts written out with repetition, non-increasing.
    pub fn expanded(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.summands as usize);
        for &(part, multiplicity) in &self.parts {
            for _ in 0..multiplicity {
                out.push(part);
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &(part, multiplicity) in &self.parts {
            for _ in 0..multiplicity {
                if !first {
                    write!(f, "+")?;
                }
                write!(f, "{part}")?;
                first = false;
            }
        }
        Ok(())
    }
}

fn descend(
    remaining: u64,
    max_part: u64,
    slots: Option<u64>,
    filter: DivisorFlavor,
    stack: &mut Vec<u64>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        if slots.is_none_or(|s| s == 0) {
            out.push(Partition::from_expanded(stack));
        }
        return;
    }
    if slots == Some(0) {
        return;
    }
    let slots_left = slots.map(|s| s - 1);
    for part in (1..=max_part.min(remaining)).rev() {
        if !filter.admits(part) {
            continue;
        }
        if let Some(left) = slots_left {
            let rest = remaining - part;
            // `left` further parts, each between 1 and `part`
            if rest < left || rest > left * part {
                continue;
            }
        }
        stack.push(part);
        descend(remaining - part, part, slots_left, filter, stack, out);
        stack.pop();
    }
}

/// Every partition of `n` whose parts pass `filter`, restricted to exactly
/// `summands` parts when given, in lexicographically decreasing order of the
/// expanded part lists.
///
/// `DivisorFlavor::All` means no part filter. Returns an empty list when
/// nothing qualifies (including `n = 0`).
pub fn enumerate_partitions(
    n: u64,
    summands: Option<u64>,
    filter: DivisorFlavor,
) -> Vec<Partition> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut stack = Vec::new();
    descend(n, n, summands, filter, &mut stack, &mut out);
    out
}

fn factorial(k: u64) -> BigInt {
    let mut out = BigInt::one();
    for i in 2..=k {
        out *= i;
    }
    out
}

fn rational_pow(base: &Rational, exponent: u64) -> Rational {
    let mut out = Rational::one();
    for _ in 0..exponent {
        out *= base;
    }
    out
}

/// The transform term `t_n` evaluated directly as a sum over all partitions
/// of `n`: each partition contributes the product over its distinct parts
/// `(part, multiplicity)` of `(s_part / part)^multiplicity / multiplicity!`.
///
/// The factorial divides once per distinct part value, while the
/// `s_part / part` factor repeats per copy; folding the factorial into every
/// copy would overcount repeated parts. Agrees exactly with
/// [`crate::sequences::transform_from_seed`].
pub fn partition_sum_transform(seed: &SeedSequence, n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let terms = seed.terms();
    if n >= terms.len() {
        return Err(Error::IndexOutOfRange {
            index: n,
            len: terms.len(),
        });
    }
    let mut total = Rational::zero();
    for partition in enumerate_partitions(n as u64, None, DivisorFlavor::All) {
        let mut product = Rational::one();
        for &(part, multiplicity) in partition.parts() {
            let base = terms[part as usize].clone() / BigInt::from(part);
            product *= rational_pow(&base, multiplicity) / factorial(multiplicity);
        }
        total += product;
    }
    Ok(total)
}

/// The inverse closed form: `s_n / n` evaluated from the transformed sequence
/// as an alternating sum over all partitions of `n`, the partition with `r`
/// summands weighted by `(-1)^{r-1} (r-1)!` and contributing the product over
/// distinct parts of `t_part^multiplicity / multiplicity!`.
///
/// `n * partition_sum_inverse(t, n)` equals
/// [`crate::sequences::seed_from_transform`]`(t)[n]` exactly.
pub fn partition_sum_inverse(transformed: &TransformedSequence, n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let terms = transformed.terms();
    if n >= terms.len() {
        return Err(Error::IndexOutOfRange {
            index: n,
            len: terms.len(),
        });
    }
    let mut total = Rational::zero();
    for partition in enumerate_partitions(n as u64, None, DivisorFlavor::All) {
        let summands = partition.summands();
        let mut product = Rational::from_integer(factorial(summands - 1));
        if summands % 2 == 0 {
            product = -product;
        }
        for &(part, multiplicity) in partition.parts() {
            product *= rational_pow(&terms[part as usize], multiplicity) / factorial(multiplicity);
        }
        total += product;
    }
    Ok(total)
}
