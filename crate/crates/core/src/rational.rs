//! Exact rational arithmetic helpers shared by every domain.
//!
//! All quantities in this crate are [`BigRational`] values; there is no
//! floating point anywhere. This module adds parsing, the simplest-rational
//! choice inside an open interval, and a few small constructors.

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The rational type used throughout the crate.
pub type Rational = BigRational;

/// Builds `p/q` from machine integers.
///
/// # Panics
/// Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Builds the integer `p` as a rational.
pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// `2^-k` as an exact rational.
pub fn pow2_neg(k: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << k)
}

/// Error returned by [`parse_rational`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseRationalError {
    /// The text that failed to parse.
    pub input: String,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse {:?} as an exact rational", self.input)
    }
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"-0.25"` exactly.
///
/// ```
/// use ordbase_core::rational::{parse_rational, ratio};
/// assert_eq!(parse_rational("6/8").unwrap(), ratio(3, 4));
/// assert_eq!(parse_rational("0.35").unwrap(), ratio(7, 20));
/// ```
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError { input: String::from(text) };
    let s = text.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| err())?;
        let q: BigInt = q.trim().parse().map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !whole_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let mut digits = String::from(whole_digits);
        digits.push_str(frac);
        let mantissa: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| err())?
        };
        let scale = num_traits::pow(BigInt::from(10u8), frac.len());
        let value = Rational::new(mantissa, scale);
        return Ok(if negative { -value } else { value });
    }
    let p: BigInt = s.parse().map_err(|_| err())?;
    Ok(Rational::from_integer(p))
}

/// Returns the rational with the smallest denominator in the open interval
/// `(lo, hi)`; ties between integers go to the one closest to zero.
///
/// This is the Stern–Brocot (continued fraction) choice, so the answer is
/// deterministic and has small height.
///
/// # Panics
/// Panics if `lo >= hi`.
///
/// ```
/// use ordbase_core::rational::{ratio, simplest_between};
/// assert_eq!(simplest_between(&ratio(2, 5), &ratio(1, 2)), ratio(3, 7));
/// assert_eq!(simplest_between(&ratio(-1, 3), &ratio(1, 7)), ratio(0, 1));
/// ```
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo < hi, "simplest_between needs lo < hi");
    if hi.is_positive() && lo.is_negative() {
        return Rational::zero();
    }
    if !hi.is_positive() {
        return -simplest_nonneg(&-hi, Some(&-lo));
    }
    simplest_nonneg(lo, Some(hi))
}

/// Simplest rational in `(lo, hi)` with `lo >= 0`; `hi = None` means `+inf`.
fn simplest_nonneg(lo: &Rational, hi: Option<&Rational>) -> Rational {
    let floor = lo.floor();
    let next = &floor + Rational::one();
    match hi {
        None => next,
        Some(h) if &next < h => next,
        Some(h) => {
            // No integer strictly inside: both ends lie in [floor, floor + 1].
            let a = lo - &floor;
            let b = h - &floor;
            let inner = if a.is_zero() {
                simplest_nonneg(&b.recip(), None)
            } else {
                let upper = a.recip();
                simplest_nonneg(&b.recip(), Some(&upper))
            };
            floor + inner.recip()
        }
    }
}

/// Least common multiple of the denominators of `values`.
pub fn common_denominator<'a, I>(values: I) -> BigInt
where
    I: IntoIterator<Item = &'a Rational>,
{
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Minimum of two rationals by reference, cloned.
pub fn min_ref(a: &Rational, b: &Rational) -> Rational {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_three_forms() {
        assert_eq!(parse_rational("1/2").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational(" -4/6 ").unwrap(), ratio(-2, 3));
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("0.6").unwrap(), ratio(3, 5));
        assert_eq!(parse_rational("-.5").unwrap(), ratio(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn simplest_between_examples() {
        assert_eq!(simplest_between(&int(0), &int(1)), ratio(1, 2));
        assert_eq!(simplest_between(&int(0), &int(3)), int(1));
        assert_eq!(simplest_between(&ratio(1, 3), &ratio(1, 2)), ratio(2, 5));
        assert_eq!(simplest_between(&ratio(-1, 2), &ratio(-1, 3)), ratio(-2, 5));
        assert_eq!(simplest_between(&int(2), &ratio(5, 2)), ratio(7, 3));
    }

    #[test]
    fn pow2_is_exact() {
        assert_eq!(pow2_neg(0), int(1));
        assert_eq!(pow2_neg(10), ratio(1, 1024));
    }
}
