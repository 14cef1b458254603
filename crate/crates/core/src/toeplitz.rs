//! Upper-triangular Toeplitz matrices stored by their band, with exact
//! exponential and logarithm.
//!
//! An order-N matrix here is determined by its first row `b_0..b_{N-1}`:
//! entry (i, j) is `b[j-i]` for `j >= i` and zero below the diagonal. The
//! product of two such matrices is again one of them, and its band is the
//! truncated convolution of the bands, so every operation runs on O(N) data
//! instead of O(N^2) entries; the dense route exists only as a cross-check in
//! [`crate::oracle`].
//!
//! For a strictly upper-triangular `S` (band starting with 0) the power `S^r`
//! vanishes within distance `r` of the diagonal, so `S^N = 0` and the
//! exponential series is a finite sum: no truncation error, every computed
//! entry is exact. The logarithm inverts it on bands starting with 1.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{frac_string, parse_rational, Rational};
use crate::sequences::SeedSequence;

/// Upper-triangular Toeplitz matrix of order `band.len()`, stored as its band.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandMatrix {
    band: Vec<Rational>,
}

/// Serialized shape: `{"order": N, "band": ["0/1", "1/1", "3/2", ...]}`.
#[derive(Serialize, Deserialize)]
struct BandMatrixJson {
    order: usize,
    band: Vec<String>,
}

impl BandMatrix {
    /// Matrix with the given band; the order is the band length.
    pub fn new(band: Vec<Rational>) -> Result<Self> {
        if band.is_empty() {
            return Err(Error::ZeroOrder);
        }
        Ok(BandMatrix { band })
    }

    pub fn identity(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut band = vec![Rational::zero(); order];
        band[0] = Rational::one();
        Ok(BandMatrix { band })
    }

    pub fn order(&self) -> usize {
        self.band.len()
    }

    pub fn band(&self) -> &[Rational] {
        &self.band
    }

    pub fn into_band(self) -> Vec<Rational> {
        self.band
    }

    /// Entry (i, j): `band[j - i]` on and above the diagonal, zero below.
    pub fn entry(&self, i: usize, j: usize) -> Result<Rational> {
        let order = self.order();
        if i >= order || j >= order {
            return Err(Error::EntryOutOfRange { i, j, order });
        }
        if j >= i {
            Ok(self.band[j - i].clone())
        } else {
            Ok(Rational::zero())
        }
    }

    pub fn to_json(&self) -> String {
        let repr = BandMatrixJson {
            order: self.order(),
            band: self.band.iter().map(frac_string).collect(),
        };
        serde_json::to_string(&repr).expect("band matrix serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let repr: BandMatrixJson = serde_json::from_str(text)?;
        if repr.order == 0 {
            return Err(Error::ZeroOrder);
        }
        if repr.band.len() != repr.order {
            return Err(Error::BandLengthMismatch {
                len: repr.band.len(),
                order: repr.order,
            });
        }
        let band = repr
            .band
            .iter()
            .map(|entry| parse_rational(entry))
            .collect::<Result<Vec<_>>>()?;
        Ok(BandMatrix { band })
    }
}

/// Truncated band convolution: `out[n] = sum_{k} a[k] * b[n-k]`, `n < a.len()`.
fn convolve(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let order = a.len();
    let mut out = vec![Rational::zero(); order];
    for i in 0..order {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..order - i {
            if b[j].is_zero() {
                continue;
            }
            out[i + j] += &a[i] * &b[j];
        }
    }
    out
}

/// Matrix with band `[0, s_1/1, s_2/2, ..., s_{order-1}/(order-1)]`: the seed
/// terms spread along the diagonals, each divided by its distance.
pub fn seed_matrix(seed: &SeedSequence, order: usize) -> Result<BandMatrix> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    let terms = seed.terms();
    if order > terms.len() {
        return Err(Error::OrderExceedsSequence {
            order,
            len: terms.len(),
        });
    }
    let mut band = Vec::with_capacity(order);
    band.push(Rational::zero());
    for (n, term) in terms.iter().enumerate().take(order).skip(1) {
        band.push(term.clone() / BigInt::from(n));
    }
    Ok(BandMatrix { band })
}

/// Product of two band matrices of equal order (a truncated convolution;
/// agrees entrywise with the dense product).
pub fn band_mul(a: &BandMatrix, b: &BandMatrix) -> Result<BandMatrix> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch(a.order(), b.order()));
    }
    Ok(BandMatrix {
        band: convolve(a.band(), b.band()),
    })
}

/// Exponential `sum_r S^r / r!` of a strictly upper-triangular band matrix.
///
/// The series terminates on its own: `S^r` vanishes within distance `r` of
/// the diagonal, so at most `order - 1` products are taken and the result is
/// exact. The running term is multiplied by `S` and divided by `r` at step
/// `r`, which keeps it equal to `S^r / r!` without forming factorials
/// separately.
///
/// ```
/// use partex::{sequences::seed_from_flavor, toeplitz, DivisorFlavor};
/// let seed = seed_from_flavor(6, DivisorFlavor::All);
/// let exp = toeplitz::toeplitz_exp(&toeplitz::seed_matrix(&seed, 7).unwrap()).unwrap();
/// let band: Vec<String> = exp.band().iter().map(|v| v.to_string()).collect();
/// assert_eq!(band, ["1", "1", "2", "3", "5", "7", "11"]);
/// ```
pub fn toeplitz_exp(matrix: &BandMatrix) -> Result<BandMatrix> {
    if !matrix.band[0].is_zero() {
        return Err(Error::DiagonalNotZero(matrix.band[0].to_string()));
    }
    let order = matrix.order();
    let mut acc = vec![Rational::zero(); order];
    acc[0] = Rational::one();
    let mut term = acc.clone();
    for r in 1..order {
        term = convolve(&term, matrix.band());
        let divisor = BigInt::from(r);
        for value in &mut term {
            if !value.is_zero() {
                *value = value.clone() / divisor.clone();
            }
        }
        if term.iter().all(Zero::is_zero) {
            break;
        }
        for (slot, value) in acc.iter_mut().zip(&term) {
            *slot += value;
        }
    }
    Ok(BandMatrix { band: acc })
}

/// Logarithm `sum_r (-1)^{r-1} (T - E)^r / r` of a band matrix with unit
/// diagonal; exact for the same nilpotency reason as [`toeplitz_exp`], and its
/// inverse on that domain.
pub fn toeplitz_log(matrix: &BandMatrix) -> Result<BandMatrix> {
    if !matrix.band[0].is_one() {
        return Err(Error::DiagonalNotOne(matrix.band[0].to_string()));
    }
    let order = matrix.order();
    let mut offset = matrix.band.clone();
    offset[0] = Rational::zero();
    let mut acc = vec![Rational::zero(); order];
    let mut power = offset.clone();
    for r in 1..order {
        let coefficient = Rational::new(
            if r % 2 == 1 {
                BigInt::one()
            } else {
                -BigInt::one()
            },
            BigInt::from(r),
        );
        for (slot, value) in acc.iter_mut().zip(&power) {
            if !value.is_zero() {
                *slot += value * &coefficient;
            }
        }
        if r + 1 < order {
            power = convolve(&power, &offset);
            if power.iter().all(Zero::is_zero) {
                break;
            }
        }
    }
    Ok(BandMatrix { band: acc })
}
