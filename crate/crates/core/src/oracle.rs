//! Deliberately naive reference implementations: counting by recursive
//! enumeration and matrix arithmetic on dense arrays.
//!
//! Nothing here is fast, and nothing here shares code with the band or
//! recurrence paths it is used to cross-check.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sequences::DivisorFlavor;
use crate::toeplitz::BandMatrix;

/// Dense square matrix of rationals, row major.
pub type DenseMatrix = Vec<Vec<Rational>>;

fn count_with_max(
    remaining: u64,
    max_part: u64,
    filter: DivisorFlavor,
    memo: &mut HashMap<(u64, u64), BigInt>,
) -> BigInt {
    if remaining == 0 {
        return BigInt::one();
    }
    if max_part == 0 {
        return BigInt::zero();
    }
    if let Some(cached) = memo.get(&(remaining, max_part)) {
        return cached.clone();
    }
    let mut total = BigInt::zero();
    for part in (1..=max_part.min(remaining)).rev() {
        if filter.admits(part) {
            total += count_with_max(remaining - part, part, filter, memo);
        }
    }
    memo.insert((remaining, max_part), total.clone());
    total
}

/// Number of partitions of `n` into parts admitted by `filter`, counted by
/// direct recursion on (remaining, largest allowed part); `n = 0` counts the
/// empty partition. The memo table lives and dies with one invocation, so the
/// function is externally pure.
pub fn brute_partition_count(n: u64, filter: DivisorFlavor) -> BigInt {
    let mut memo = HashMap::new();
    count_with_max(n, n, filter, &mut memo)
}

/// Materialize a band matrix as the full square array it represents.
pub fn dense_expand(matrix: &BandMatrix) -> DenseMatrix {
    let order = matrix.order();
    let band = matrix.band();
    (0..order)
        .map(|i| {
            (0..order)
                .map(|j| {
                    if j >= i {
                        band[j - i].clone()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn check_square(matrix: &DenseMatrix) -> Result<usize> {
    let order = matrix.len();
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    if matrix.iter().any(|row| row.len() != order) {
        return Err(Error::NotSquare);
    }
    Ok(order)
}

/// Plain dense matrix product.
pub fn dense_mul(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    let order = check_square(a)?;
    if check_square(b)? != order {
        return Err(Error::OrderMismatch(order, b.len()));
    }
    let mut out = vec![vec![Rational::zero(); order]; order];
    for i in 0..order {
        for k in 0..order {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..order {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    Ok(out)
}

fn dense_identity(order: usize) -> DenseMatrix {
    let mut out = vec![vec![Rational::zero(); order]; order];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    out
}

/// Exponential series evaluated with literal dense matrix powers. The input
/// must be strictly upper triangular (zero on and below the diagonal), which
/// makes the series a finite sum of at most `order` terms.
pub fn dense_exp(matrix: &DenseMatrix) -> Result<DenseMatrix> {
    let order = check_square(matrix)?;
    for (i, row) in matrix.iter().enumerate() {
        for (j, value) in row.iter().enumerate().take(i + 1) {
            if !value.is_zero() {
                return Err(Error::NotStrictlyUpper { i, j });
            }
        }
    }
    let mut acc = dense_identity(order);
    let mut term = dense_identity(order);
    for r in 1..order {
        term = dense_mul(&term, matrix)?;
        let divisor = BigInt::from(r);
        for row in &mut term {
            for value in row {
                if !value.is_zero() {
                    *value = value.clone() / divisor.clone();
                }
            }
        }
        for (acc_row, term_row) in acc.iter_mut().zip(&term) {
            for (slot, value) in acc_row.iter_mut().zip(term_row) {
                *slot += value;
            }
        }
    }
    Ok(acc)
}
