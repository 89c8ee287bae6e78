//! The numeric contract behind every ranking function, plus its two backends.
//!
//! All formulas in this crate are rational expressions over the triplet
//! components, so they are written once against the [`Scalar`] trait and
//! instantiated with either backend:
//!
//! - [`Rational`], arbitrary-precision fractions. Decimal input like `"0.47"`
//!   becomes the exact fraction `47/100`, every operation is exact, and the
//!   comparator laws (totality, antisymmetry, transitivity) hold without
//!   qualification. This is the default and the backend the law tests run on.
//! - `f64`, the fast path. Results carry ordinary IEEE rounding; tests that
//!   check float results use an absolute tolerance of `1e-12`.
//!
//! Comparators deliberately use raw comparison rather than an epsilon band:
//! an "equal within epsilon" relation is not transitive and would forfeit the
//! total-order guarantees the rest of the crate is built on.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::ops::{Div, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::error::DomainError;

/// Exact rational backend: arbitrary-precision fractions.
pub type Rational = BigRational;

/// A string did not parse as a decimal literal.
///
/// The accepted grammar is an optional sign, digits with an optional
/// fractional part (`7`, `0.47`, `.5`), and an optional power-of-ten
/// exponent (`4.7e-1`). Anything else, including `inf` and `NaN`, is
/// rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{text:?} is not a decimal literal")]
pub struct DecimalError {
    /// The rejected input.
    pub text: String,
}

/// Arithmetic and ordering required of a backing number type.
///
/// Implementations must satisfy, for values reachable from inputs in
/// `[0, 1]`:
///
/// - `cmp_total` is a total order consistent with `PartialEq` and
///   `PartialOrd`;
/// - `+`, `-`, `*`, `/` (nonzero divisor) stay closed over finite values;
/// - `parse_decimal` reads the decimal grammar described on
///   [`DecimalError`], exactly where the representation allows it.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + PartialOrd
    + Zero
    + One
    + Sub<Output = Self>
    + Div<Output = Self>
{
    /// The fraction `numer / denom`.
    ///
    /// `denom` must be nonzero; this is for fixed formula constants such as
    /// `2/3`, not for user input.
    fn from_ratio(numer: i64, denom: i64) -> Self;

    /// Parse a decimal literal such as `"0.47"` or `"4.7e-1"`.
    fn parse_decimal(text: &str) -> Result<Self, DecimalError>;

    /// Total comparison of two values.
    fn cmp_total(&self, other: &Self) -> Ordering;

    /// Nearest `f64`, for display only.
    fn to_f64(&self) -> f64;

    /// Exact finite decimal representation, when one exists.
    ///
    /// `3/5` yields `"0.6"`; `1/3` has no finite decimal expansion and
    /// yields `None`. Parsing the returned string with [`parse_decimal`]
    /// reproduces the value exactly.
    ///
    /// [`parse_decimal`]: Scalar::parse_decimal
    fn decimal_string(&self) -> Option<String>;
}

impl Scalar for Rational {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn parse_decimal(text: &str) -> Result<Self, DecimalError> {
        let parts = split_decimal(text)?;
        let digits: String = [parts.int_digits, parts.frac_digits].concat();
        let mut numer: BigInt = digits.parse().expect("digit validation");
        if parts.negative {
            numer = -numer;
        }
        // value = numer / 10^scale, where a negative scale multiplies instead
        let scale = parts.frac_digits.len() as i64 - i64::from(parts.exponent);
        Ok(if scale >= 0 {
            BigRational::new(numer, pow10(scale as usize))
        } else {
            BigRational::from_integer(numer * pow10(-scale as usize))
        })
    }

    fn cmp_total(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn decimal_string(&self) -> Option<String> {
        if self.is_zero() {
            return Some("0".to_string());
        }
        // A reduced fraction has a finite decimal expansion exactly when its
        // denominator is of the form 2^a * 5^b.
        let mut rest = self.denom().magnitude().clone();
        let (two, five) = (BigUint::from(2u32), BigUint::from(5u32));
        let mut twos = 0u32;
        while (&rest % &two).is_zero() {
            rest /= &two;
            twos += 1;
        }
        let mut fives = 0u32;
        while (&rest % &five).is_zero() {
            rest /= &five;
            fives += 1;
        }
        if !rest.is_one() {
            return None;
        }
        let places = twos.max(fives);
        // Scale the numerator so the denominator becomes 10^places.
        let mut digits = self.numer().magnitude().clone();
        digits *= num_traits::pow(two, (places - twos) as usize);
        digits *= num_traits::pow(five, (places - fives) as usize);
        let mut text = digits.to_string();
        if places > 0 {
            let places = places as usize;
            if text.len() <= places {
                text.insert_str(0, &"0".repeat(places + 1 - text.len()));
            }
            text.insert(text.len() - places, '.');
        }
        if self.is_negative() {
            text.insert(0, '-');
        }
        Some(text)
    }
}

impl Scalar for f64 {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        numer as f64 / denom as f64
    }

    fn parse_decimal(text: &str) -> Result<Self, DecimalError> {
        split_decimal(text)?;
        let value: f64 = text.trim().parse().map_err(|_| DecimalError {
            text: text.to_string(),
        })?;
        if !value.is_finite() {
            return Err(DecimalError {
                text: text.to_string(),
            });
        }
        // Normalize -0.0 so parsed zeros are indistinguishable.
        Ok(if value == 0.0 { 0.0 } else { value })
    }

    fn cmp_total(&self, other: &Self) -> Ordering {
        // Values reachable from validated inputs are always finite.
        self.partial_cmp(other)
            .expect("comparison on a non-finite value")
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn decimal_string(&self) -> Option<String> {
        // Display for f64 is the shortest decimal string that parses back to
        // the same bits, and it never uses exponent notation.
        Some(self.to_string())
    }
}

/// Validated pieces of a decimal literal.
struct DecimalParts<'a> {
    negative: bool,
    int_digits: &'a str,
    frac_digits: &'a str,
    exponent: i32,
}

/// Check `text` against the decimal grammar and split it into parts.
fn split_decimal(text: &str) -> Result<DecimalParts<'_>, DecimalError> {
    let reject = || DecimalError {
        text: text.to_string(),
    };
    let trimmed = text.trim();
    let (negative, unsigned) = match trimmed.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, trimmed.strip_prefix('+').unwrap_or(trimmed)),
    };
    let (mantissa, exponent) = match unsigned.find(['e', 'E']) {
        Some(at) => {
            let exp: i32 = unsigned[at + 1..].parse().map_err(|_| reject())?;
            (&unsigned[..at], exp)
        }
        None => (unsigned, 0),
    };
    // Guard against pathological exponents before any bignum is allocated.
    if exponent.abs() > 4096 {
        return Err(reject());
    }
    let (int_digits, frac_digits) = match mantissa.split_once('.') {
        Some((int, frac)) => (int, frac),
        None => (mantissa, ""),
    };
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if int_digits.is_empty() && frac_digits.is_empty() {
        return Err(reject());
    }
    if !all_digits(int_digits) || !all_digits(frac_digits) {
        return Err(reject());
    }
    Ok(DecimalParts {
        negative,
        int_digits,
        frac_digits,
        exponent,
    })
}

fn pow10(exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(10), exp)
}

/// Reject values outside `[0, 1]`.
pub(crate) fn ensure_unit<S: Scalar>(value: &S) -> Result<(), DomainError> {
    // A float NaN compares as unordered even against itself; catch it here
    // so cmp_total below only ever sees ordered values.
    if value.partial_cmp(value).is_none() {
        return Err(DomainError::OutsideUnit {
            value: value.to_string(),
        });
    }
    if value.cmp_total(&S::zero()) == Ordering::Less
        || value.cmp_total(&S::one()) == Ordering::Greater
    {
        return Err(DomainError::OutsideUnit {
            value: value.to_string(),
        });
    }
    Ok(())
}

pub(crate) fn max_scalar<S: Scalar>(a: S, b: S) -> S {
    if a.cmp_total(&b) == Ordering::Less {
        b
    } else {
        a
    }
}

pub(crate) fn min_scalar<S: Scalar>(a: S, b: S) -> S {
    if a.cmp_total(&b) == Ordering::Greater {
        b
    } else {
        a
    }
}

/// `|a - b|` without a `Neg` bound.
pub(crate) fn abs_diff<S: Scalar>(a: &S, b: &S) -> S {
    if a.cmp_total(b) == Ordering::Less {
        b.clone() - a.clone()
    } else {
        a.clone() - b.clone()
    }
}

/// `(a + b) / 2`.
pub(crate) fn midpoint_of<S: Scalar>(a: &S, b: &S) -> S {
    (a.clone() + b.clone()) / S::from_ratio(2, 1)
}
