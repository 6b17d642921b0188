//! The Cantor pairing function `⟨n, m⟩ = ½(n² + 2nm + m² + 3n + m)`.

use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::{One, Zero};

/// `⟨n, m⟩`, or `None` if the code does not fit in a `u64`.
///
/// ```
/// use ordbase_core::effective::{pair, unpair};
/// assert_eq!(pair(0, 0), Some(0));
/// assert_eq!(pair(0, 1), Some(1));
/// assert_eq!(pair(1, 0), Some(2));
/// assert_eq!(unpair(pair(17, 4).unwrap()), (17, 4));
/// ```
pub fn pair(n: u64, m: u64) -> Option<u64> {
    let w = (n as u128) + (m as u128);
    let code = triangle(w).checked_add(n as u128)?;
    u64::try_from(code).ok()
}

/// `w(w+1)/2` without intermediate overflow, for `w ≤ 2⁶⁵`.
fn triangle(w: u128) -> u128 {
    if w.is_multiple_of(2) {
        (w / 2) * (w + 1)
    } else {
        w * w.div_ceil(2)
    }
}

/// Inverse of [`pair`]; total on `u64`.
pub fn unpair(code: u64) -> (u64, u64) {
    let c = code as u128;
    // Largest w with w(w+1)/2 <= c.
    let mut w = ((8 * c + 1).sqrt() - 1) / 2;
    while triangle(w) > c {
        w -= 1;
    }
    while triangle(w + 1) <= c {
        w += 1;
    }
    let n = c - triangle(w);
    let m = w - n;
    (n as u64, m as u64)
}

/// `⟨n, m⟩` on arbitrary-precision naturals.
pub fn pair_big(n: &BigUint, m: &BigUint) -> BigUint {
    let w = n + m;
    (&w * (&w + BigUint::one())) / BigUint::from(2u8) + n
}

/// Inverse of [`pair_big`].
pub fn unpair_big(code: &BigUint) -> (BigUint, BigUint) {
    let two = BigUint::from(2u8);
    let tri = |w: &BigUint| (w * (w + BigUint::one())) / &two;
    let disc = code * BigUint::from(8u8) + BigUint::one();
    let mut w = (disc.sqrt() - BigUint::one()) / &two;
    while tri(&w) > *code {
        w -= BigUint::one();
    }
    while tri(&(&w + BigUint::one())) <= *code {
        w += BigUint::one();
    }
    let n = code - tri(&w);
    let m = &w - &n;
    (n, m)
}

/// Whether the code equals the closed form `½(n² + 2nm + m² + 3n + m)`.
pub fn matches_closed_form(n: &BigUint, m: &BigUint, code: &BigUint) -> bool {
    let sum = n * n + BigUint::from(2u8) * n * m + m * m + BigUint::from(3u8) * n + m;
    (&sum % BigUint::from(2u8)).is_zero() && &(sum / BigUint::from(2u8)) == code
}
