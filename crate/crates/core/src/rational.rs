//! The scalar type: arbitrary-precision rationals, always in reduced form.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Exact rational scalar.
///
/// Kept canonical by construction: the denominator is positive and shares no
/// factor with the numerator. Every constructor and arithmetic operation of
/// [`num_rational::Ratio`] preserves that form, so equality is plain value
/// equality.
pub type Rational = num_rational::BigRational;

/// Rational with the given integer value.
pub fn from_int<T: Into<BigInt>>(value: T) -> Rational {
    Rational::from_integer(value.into())
}

/// Parse a rational literal: either `num/den` or a bare integer, with an
/// optional leading sign. A negative denominator is folded into the sign of
/// the numerator; the result is reduced.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let bad = || Error::BadRational(text.to_owned());
    match trimmed.split_once('/') {
        Some((numer_text, denom_text)) => {
            let numer = BigInt::from_str(numer_text.trim()).map_err(|_| bad())?;
            let denom = BigInt::from_str(denom_text.trim()).map_err(|_| bad())?;
            if denom.is_zero() {
                return Err(Error::ZeroDenominator(text.to_owned()));
            }
            Ok(Rational::new(numer, denom))
        }
        None => BigInt::from_str(trimmed)
            .map(Rational::from_integer)
            .map_err(|_| bad()),
    }
}

/// Format with the denominator always written out (`0/1`, `3/2`), the form
/// used inside band matrix JSON. The `Display` impl of [`Rational`] is the
/// human-facing one and drops a unit denominator.
pub fn frac_string(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}
