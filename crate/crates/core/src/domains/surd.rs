//! Reals of the form `p + r·√d` with rational `p`, `r`, `d`, compared
//! exactly against rationals.

use core::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::rational::{int, ratio, Rational};

/// The real number `rational + coeff·√radicand`.
///
/// Comparisons with rationals reduce to sign tests on squares, so they are
/// exact and always terminate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticSurd {
    /// Rational part `p`.
    pub rational: Rational,
    /// Coefficient `r` of the root.
    pub coeff: Rational,
    /// Radicand `d ≥ 0`.
    pub radicand: Rational,
}

impl QuadraticSurd {
    /// `p + r·√d`.
    ///
    /// # Panics
    /// Panics if `d < 0`.
    pub fn new(rational: Rational, coeff: Rational, radicand: Rational) -> Self {
        assert!(!radicand.is_negative(), "radicand must be non-negative");
        Self { rational, coeff, radicand }
    }

    /// `√2`.
    pub fn sqrt2() -> Self {
        Self::new(int(0), int(1), int(2))
    }

    /// `√2 / 2`.
    pub fn half_sqrt2() -> Self {
        Self::new(int(0), ratio(1, 2), int(2))
    }

    /// `1 − √2 / 2`.
    pub fn one_minus_half_sqrt2() -> Self {
        Self::new(int(1), ratio(-1, 2), int(2))
    }

    /// Exact comparison of `q` with this number.
    ///
    /// ```
    /// use core::cmp::Ordering;
    /// use ordbase_core::domains::QuadraticSurd;
    /// use ordbase_core::rational::ratio;
    /// let s = QuadraticSurd::sqrt2();
    /// assert_eq!(s.cmp_rational(&ratio(7, 5)), Ordering::Less);
    /// assert_eq!(s.cmp_rational(&ratio(3, 2)), Ordering::Greater);
    /// ```
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        // Compare t = q - p against r·√d.
        let t = q - &self.rational;
        let rhs_sign = if self.coeff.is_zero() || self.radicand.is_zero() {
            0
        } else if self.coeff.is_positive() {
            1
        } else {
            -1
        };
        let lhs_sign = sign(&t);
        if lhs_sign != rhs_sign || lhs_sign == 0 {
            return lhs_sign.cmp(&rhs_sign);
        }
        // Same nonzero sign: compare squares, flipping for negatives.
        let lhs_sq = &t * &t;
        let rhs_sq = &self.coeff * &self.coeff * &self.radicand;
        let by_magnitude = lhs_sq.cmp(&rhs_sq);
        if lhs_sign > 0 {
            by_magnitude
        } else {
            by_magnitude.reverse()
        }
    }

    /// `q < self`.
    pub fn gt_rational(&self, q: &Rational) -> bool {
        self.cmp_rational(q) == Ordering::Less
    }

    /// `q > self`.
    pub fn lt_rational(&self, q: &Rational) -> bool {
        self.cmp_rational(q) == Ordering::Greater
    }
}

fn sign(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_matches_squares() {
        let s = QuadraticSurd::sqrt2();
        for num in -40..40 {
            let q = ratio(num, 10);
            let below = q < int(0) || &q * &q < int(2);
            assert_eq!(s.gt_rational(&q), below, "q = {q}");
        }
    }

    #[test]
    fn one_minus_half_sqrt2() {
        let s = QuadraticSurd::one_minus_half_sqrt2();
        assert!(s.gt_rational(&ratio(29, 100)));
        assert!(s.lt_rational(&ratio(30, 100)));
    }

    #[test]
    fn rational_surd_compares_like_a_rational() {
        let s = QuadraticSurd::new(ratio(1, 3), int(0), int(5));
        assert_eq!(s.cmp_rational(&ratio(1, 3)), Ordering::Equal);
        assert_eq!(s.cmp_rational(&ratio(1, 4)), Ordering::Less);
    }
}
