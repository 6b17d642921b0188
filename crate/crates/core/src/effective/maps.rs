//! Finite maps: computable bijections between `ℕ` and a countable carrier.

use alloc::boxed::Box;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::pairing::{pair, unpair};
use crate::domains::{MajorizationPoint, RationalInterval, SigmaString};
use crate::rational::{common_denominator, Rational};

/// A bijection `α: ℕ → carrier` with computable inverse.
///
/// `decode` is total. `encode` returns `None` for values outside the
/// carrier, or whose index does not fit in a `u64`.
pub trait FiniteMap {
    /// Carrier elements.
    type Item;

    /// `α(index)`.
    fn decode(&self, index: u64) -> Self::Item;

    /// `α⁻¹(item)`.
    fn encode(&self, item: &Self::Item) -> Option<u64>;

    /// `α(start), α(start + 1), …`.
    fn iter_from(&self, start: u64) -> Box<dyn Iterator<Item = Self::Item> + '_> {
        Box::new((start..).map(move |i| self.decode(i)))
    }
}

impl<M: FiniteMap + ?Sized> FiniteMap for &M {
    type Item = M::Item;
    fn decode(&self, index: u64) -> Self::Item {
        (**self).decode(index)
    }
    fn encode(&self, item: &Self::Item) -> Option<u64> {
        (**self).encode(item)
    }
    fn iter_from(&self, start: u64) -> Box<dyn Iterator<Item = Self::Item> + '_> {
        (**self).iter_from(start)
    }
}

/// `φ(0..=max)` by a sieve.
fn totients(max: u64) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=max).collect();
    for p in 2..=max as usize {
        if phi[p] == p as u64 {
            for k in (p..=max as usize).step_by(p) {
                phi[k] -= phi[k] / p as u64;
            }
        }
    }
    phi
}

fn mobius(mut e: u64) -> i64 {
    let mut sign = 1;
    let mut f = 2;
    while f * f <= e {
        if e.is_multiple_of(f) {
            e /= f;
            if e.is_multiple_of(f) {
                return 0;
            }
            sign = -sign;
        }
        f += 1;
    }
    if e > 1 {
        sign = -sign;
    }
    sign
}

fn small_rational(p: u64, q: u64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `α₀`: the rationals of `[0, 1]` as `0, 1`, then reduced fractions by
/// increasing denominator and, within a denominator, increasing numerator.
///
/// ```
/// use ordbase_core::effective::{Alpha0, FiniteMap};
/// use ordbase_core::rational::ratio;
/// let a = Alpha0;
/// assert_eq!(a.decode(2), ratio(1, 2));
/// assert_eq!(a.decode(4), ratio(2, 3));
/// assert_eq!(a.encode(&ratio(3, 4)), Some(6));
/// ```
#[derive(Clone, Copy, Debug, Default)]
pub struct Alpha0;

impl FiniteMap for Alpha0 {
    type Item = Rational;

    fn decode(&self, index: u64) -> Rational {
        match index {
            0 => Rational::zero(),
            1 => Rational::one(),
            _ => {
                let mut rest = index - 2;
                let mut max = 64;
                let mut phi = totients(max);
                let mut q = 2;
                loop {
                    if q > max {
                        max *= 2;
                        phi = totients(max);
                    }
                    let count = phi[q as usize];
                    if rest < count {
                        let p = (1..q)
                            .filter(|p| p.gcd(&q) == 1)
                            .nth(rest as usize)
                            .expect("rest < totient(q)");
                        return small_rational(p, q);
                    }
                    rest -= count;
                    q += 1;
                }
            }
        }
    }

    fn encode(&self, item: &Rational) -> Option<u64> {
        if item.is_negative() || item > &Rational::one() {
            return None;
        }
        if item.is_zero() {
            return Some(0);
        }
        if item.is_one() {
            return Some(1);
        }
        let p = item.numer().to_u64()?;
        let q = item.denom().to_u64()?;
        let before: u64 = totients(q)[2..q as usize].iter().sum();
        let within = (1..p).filter(|a| a.gcd(&q) == 1).count() as u64;
        Some(2 + before + within)
    }
}

/// Partitions of `s` into at most `r` parts, each at most `cap`.
fn bounded_partitions(s: u64, r: u64, cap: u64) -> u128 {
    if s == 0 {
        return 1;
    }
    if r == 0 || cap == 0 {
        return 0;
    }
    if r == 1 {
        return u128::from(s <= cap);
    }
    if r == 2 {
        // a ≥ b ≥ 0, a ≤ cap, a + b = s.
        let lo = s.div_ceil(2);
        let hi = cap.min(s);
        return if hi >= lo { u128::from(hi - lo + 1) } else { 0 };
    }
    let lo = s.div_ceil(r);
    (lo..=cap.min(s))
        .map(|first| bounded_partitions(s - first, r - 1, first))
        .sum()
}

/// `αₘ`: the rational points of `Λⁿ`.
///
/// Index 0 is `⊥`. The remaining points are listed by increasing reduced
/// common denominator `d`, and within one `d` by the lexicographic order of
/// the numerator vectors `(d·x₁, …, d·xₙ)`.
///
/// ```
/// use ordbase_core::effective::{AlphaMajorization, FiniteMap};
/// use ordbase_core::domains::MajorizationPoint;
/// let a = AlphaMajorization::new(2);
/// assert_eq!(a.decode(0), MajorizationPoint::bottom(2));
/// assert_eq!(a.decode(1), MajorizationPoint::top(2));
/// assert_eq!(a.encode(&a.decode(57)), Some(57));
/// ```
#[derive(Clone, Copy, Debug)]
pub struct AlphaMajorization {
    n: usize,
}

impl AlphaMajorization {
    /// The enumeration of `ℚⁿ ∩ Λⁿ`.
    ///
    /// # Panics
    /// Panics if `n < 2`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "majorization needs n >= 2");
        Self { n }
    }

    /// Dimension `n`.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Partitions of `0..=max` into at most `n` parts.
    fn partition_table(&self, max: u64) -> Vec<u128> {
        let mut p = alloc::vec![0u128; max as usize + 1];
        p[0] = 1;
        for part in 1..=(self.n as u64) {
            for s in part..=max {
                p[s as usize] += p[(s - part) as usize];
            }
        }
        p
    }

    /// Number of points with reduced common denominator exactly `d`, not
    /// counting `⊥`.
    fn count_denominator(&self, d: u64, table: &[u128]) -> u128 {
        let primitive: i128 = (1..=d)
            .filter(|e| d.is_multiple_of(*e))
            .map(|e| mobius(d / e) as i128 * table[e as usize] as i128)
            .sum();
        let primitive = primitive as u128;
        if d == self.n as u64 {
            primitive - 1
        } else {
            primitive
        }
    }

    /// Completions of a numerator prefix with gcd `g` by `r` more parts, each
    /// at most `cap`, summing to `s`, such that the whole vector has gcd 1.
    fn primitive_completions(g: u64, s: u64, r: u64, cap: u64) -> u128 {
        let mut total: i128 = 0;
        for e in 1..=g {
            if !g.is_multiple_of(e) || !s.is_multiple_of(e) {
                continue;
            }
            let mu = mobius(e);
            if mu != 0 {
                total += mu as i128 * bounded_partitions(s / e, r, cap / e) as i128;
            }
        }
        total as u128
    }

    /// Count of vectors in denominator `d` beginning with `prefix`.
    fn count_prefix(&self, prefix: &[u64], d: u64) -> u128 {
        let used: u64 = prefix.iter().sum();
        let g = prefix.iter().fold(0u64, |a, &b| a.gcd(&b));
        let cap = *prefix.last().expect("nonempty prefix");
        let r = (self.n - prefix.len()) as u64;
        if g == 0 {
            return 0;
        }
        Self::primitive_completions(g, d - used, r, cap)
    }

    /// Value range `(lo, hi)` for the next numerator after `prefix`.
    fn next_range(&self, prefix: &[u64], d: u64) -> (u64, u64) {
        let used: u64 = prefix.iter().sum();
        let rem = d - used;
        let slots = (self.n - prefix.len()) as u64;
        let hi = prefix.last().map_or(rem, |&p| p.min(rem));
        (rem.div_ceil(slots), hi)
    }
}

impl FiniteMap for AlphaMajorization {
    type Item = MajorizationPoint;

    fn decode(&self, index: u64) -> MajorizationPoint {
        if index == 0 {
            return MajorizationPoint::bottom(self.n);
        }
        let mut rest = (index - 1) as u128;
        let mut max = 64u64;
        let mut table = self.partition_table(max);
        let mut d = 1u64;
        loop {
            if d > max {
                max *= 2;
                table = self.partition_table(max);
            }
            let count = self.count_denominator(d, &table);
            if rest < count {
                break;
            }
            rest -= count;
            d += 1;
        }
        if d == self.n as u64 {
            rest += 1;
        }
        let mut prefix: Vec<u64> = Vec::with_capacity(self.n);
        while prefix.len() < self.n {
            let (lo, hi) = self.next_range(&prefix, d);
            let mut chosen = None;
            for v in lo..=hi {
                prefix.push(v);
                let c = if prefix.len() == self.n {
                    u128::from(prefix.iter().fold(0u64, |a, &b| a.gcd(&b)) == 1)
                } else {
                    self.count_prefix(&prefix, d)
                };
                if rest < c {
                    chosen = Some(v);
                    break;
                }
                rest -= c;
                prefix.pop();
            }
            assert!(chosen.is_some(), "rank within denominator {d} out of range");
        }
        let coords = prefix.iter().map(|&c| small_rational(c, d)).collect();
        MajorizationPoint::from_valid(coords)
    }

    fn iter_from(&self, start: u64) -> Box<dyn Iterator<Item = MajorizationPoint> + '_> {
        let first = self.decode(start);
        let n = self.n;
        let (mut d, mut nums) = if first.is_bottom() {
            (0, alloc::vec![0; n])
        } else {
            let d = common_denominator(first.coords());
            let scale = Rational::from_integer(d.clone());
            let nums: Vec<u64> = first
                .coords()
                .iter()
                .map(|c| (c * &scale).to_integer().to_u64().expect("numerator fits in u64"))
                .collect();
            (d.to_u64().expect("denominator fits in u64"), nums)
        };
        let mut pending = Some(first);
        Box::new(core::iter::from_fn(move || {
            if let Some(p) = pending.take() {
                return Some(p);
            }
            loop {
                if !next_partition(&mut nums) {
                    d += 1;
                    nums = balanced(d, n);
                }
                let primitive = nums.iter().fold(0u64, |a, &b| a.gcd(&b)) == 1;
                let bottom = d == n as u64 && nums.iter().all(|&c| c == 1);
                if primitive && !bottom {
                    let coords = nums.iter().map(|&c| small_rational(c, d)).collect();
                    return Some(MajorizationPoint::from_valid(coords));
                }
            }
        }))
    }

    fn encode(&self, item: &MajorizationPoint) -> Option<u64> {
        if item.dim() != self.n {
            return None;
        }
        if item.is_bottom() {
            return Some(0);
        }
        let d_big = common_denominator(item.coords());
        let d = d_big.to_u64()?;
        let nums: Vec<u64> = item
            .coords()
            .iter()
            .map(|c| (c * Rational::from_integer(d_big.clone())).to_integer().to_u64())
            .collect::<Option<_>>()?;
        let table = self.partition_table(d);
        let mut index: u128 = 1;
        for e in 1..d {
            index += self.count_denominator(e, &table);
        }
        let mut prefix: Vec<u64> = Vec::with_capacity(self.n);
        for &c in &nums {
            let (lo, _) = self.next_range(&prefix, d);
            for v in lo..c {
                prefix.push(v);
                index += if prefix.len() == self.n {
                    u128::from(prefix.iter().fold(0u64, |a, &b| a.gcd(&b)) == 1)
                } else {
                    self.count_prefix(&prefix, d)
                };
                prefix.pop();
            }
            prefix.push(c);
        }
        if d == self.n as u64 {
            index -= 1;
        }
        u64::try_from(index).ok()
    }
}

/// The lexicographically least non-increasing vector of `n` naturals with
/// sum `d`.
fn balanced(d: u64, n: usize) -> Vec<u64> {
    let (q, extra) = (d / n as u64, (d % n as u64) as usize);
    (0..n).map(|i| if i < extra { q + 1 } else { q }).collect()
}

/// Advances `c` to the lexicographically next non-increasing vector with the
/// same sum, returning `false` if `c` was the last one.
fn next_partition(c: &mut [u64]) -> bool {
    let n = c.len();
    for i in (0..n.saturating_sub(1)).rev() {
        let suffix: u64 = c[i + 1..].iter().sum();
        if suffix >= 1 && (i == 0 || c[i] < c[i - 1]) {
            c[i] += 1;
            let fill = balanced(suffix - 1, n - 1 - i);
            c[i + 1..].copy_from_slice(&fill);
            return true;
        }
    }
    false
}

/// `Σ*` for `Σ = {0, …, k−1}`, listed by length and then lexicographically:
/// `ε, 0, 1, 00, 01, …` for `k = 2`.
#[derive(Clone, Copy, Debug)]
pub struct CantorStrings {
    alphabet: u8,
}

impl CantorStrings {
    /// Finite strings over an alphabet of `alphabet ≥ 1` symbols.
    pub fn new(alphabet: u8) -> Self {
        assert!(alphabet >= 1, "alphabet must be nonempty");
        Self { alphabet }
    }
}

impl FiniteMap for CantorStrings {
    type Item = SigmaString;

    fn decode(&self, index: u64) -> SigmaString {
        let k = u128::from(self.alphabet);
        let mut rest = u128::from(index);
        let mut len = 0u32;
        let mut block = 1u128;
        while rest >= block {
            rest -= block;
            len += 1;
            block *= k;
        }
        let mut symbols = alloc::vec![0u8; len as usize];
        for slot in symbols.iter_mut().rev() {
            *slot = (rest % k) as u8;
            rest /= k;
        }
        SigmaString::finite(self.alphabet, symbols)
    }

    fn encode(&self, item: &SigmaString) -> Option<u64> {
        if item.alphabet() != self.alphabet {
            return None;
        }
        let len = item.len()?;
        let k = u128::from(self.alphabet);
        let mut offset = 0u128;
        let mut block = 1u128;
        for _ in 0..len {
            offset = offset.checked_add(block)?;
            block = block.checked_mul(k)?;
        }
        let mut value = 0u128;
        for i in 0..len {
            value = value.checked_mul(k)?.checked_add(u128::from(item.symbol(i)?))?;
        }
        u64::try_from(offset.checked_add(value)?).ok()
    }
}

/// `ℚ ∩ [0, 1)`: `0`, then `α₀(2), α₀(3), …`.
fn unit_decode(j: u64) -> Rational {
    if j == 0 {
        Rational::zero()
    } else {
        Alpha0.decode(j + 1)
    }
}

fn unit_encode(r: &Rational) -> Option<u64> {
    if r.is_zero() {
        Some(0)
    } else if r.is_one() {
        None
    } else {
        Alpha0.encode(r).map(|i| i - 1)
    }
}

/// Nonzero integers as `1, −1, 2, −2, …`.
fn zigzag(a: u64) -> BigInt {
    let k = BigInt::from(a / 2 + 1);
    if a.is_multiple_of(2) {
        k
    } else {
        -k
    }
}

fn unzigzag(z: &BigInt) -> Option<u64> {
    let k = z.abs().to_u64()?;
    if k == 0 {
        return None;
    }
    Some(if z.is_positive() { 2 * (k - 1) } else { 2 * (k - 1) + 1 })
}

/// All rationals: even indices list `ℚ ∩ [0, 1)`, odd index `2j + 1`
/// decodes `j = ⟨a, b⟩` to the `a`-th nonzero integer plus the `b`-th
/// element of `ℚ ∩ [0, 1)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl FiniteMap for Rationals {
    type Item = Rational;

    fn decode(&self, index: u64) -> Rational {
        if index.is_multiple_of(2) {
            return unit_decode(index / 2);
        }
        let (a, b) = unpair(index / 2);
        Rational::from_integer(zigzag(a)) + unit_decode(b)
    }

    fn encode(&self, item: &Rational) -> Option<u64> {
        let whole = item.floor();
        let frac = item - &whole;
        let f = unit_encode(&frac)?;
        if whole.is_zero() {
            return f.checked_mul(2);
        }
        let a = unzigzag(&whole.to_integer())?;
        pair(a, f)?.checked_mul(2)?.checked_add(1)
    }
}

/// Non-negative rationals: even index `2j` is the `j`-th element of
/// `ℚ ∩ [0, 1)`, odd index `2j + 1` decodes `j = ⟨a, b⟩` to `a + 1` plus the
/// `b`-th element of `ℚ ∩ [0, 1)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct NonNegativeRationals;

impl FiniteMap for NonNegativeRationals {
    type Item = Rational;

    fn decode(&self, index: u64) -> Rational {
        if index.is_multiple_of(2) {
            return unit_decode(index / 2);
        }
        let (a, b) = unpair(index / 2);
        Rational::from_integer(BigInt::from(a + 1)) + unit_decode(b)
    }

    fn encode(&self, item: &Rational) -> Option<u64> {
        if item.is_negative() {
            return None;
        }
        let whole = item.floor();
        let frac = item - &whole;
        let f = unit_encode(&frac)?;
        if whole.is_zero() {
            return f.checked_mul(2);
        }
        let a = whole.to_integer().to_u64()? - 1;
        pair(a, f)?.checked_mul(2)?.checked_add(1)
    }
}

/// `B_I`: index 0 is `⊥`; index `i + 1` decodes `i = ⟨a, b⟩` to
/// `[r, r + w]` with `r` the `a`-th rational and `w` the `b`-th non-negative
/// rational.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntervalBasis;

impl FiniteMap for IntervalBasis {
    type Item = RationalInterval;

    fn decode(&self, index: u64) -> RationalInterval {
        if index == 0 {
            return RationalInterval::Bottom;
        }
        let (a, b) = unpair(index - 1);
        let lo = Rationals.decode(a);
        let hi = &lo + NonNegativeRationals.decode(b);
        RationalInterval::Closed { lo, hi }
    }

    fn encode(&self, item: &RationalInterval) -> Option<u64> {
        match item {
            RationalInterval::Bottom => Some(0),
            RationalInterval::Closed { lo, hi } => {
                let a = Rationals.encode(lo)?;
                let b = NonNegativeRationals.encode(&(hi - lo))?;
                pair(a, b)?.checked_add(1)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn alpha0_prefix() {
        let got: Vec<Rational> = (0..8).map(|i| Alpha0.decode(i)).collect();
        let want = [int(0), int(1), ratio(1, 2), ratio(1, 3), ratio(2, 3), ratio(1, 4), ratio(3, 4), ratio(1, 5)];
        assert_eq!(got, want);
        assert_eq!(Alpha0.encode(&ratio(3, 2)), None);
    }

    #[test]
    fn majorization_n2_prefix() {
        let a = AlphaMajorization::new(2);
        let got: Vec<Vec<Rational>> = (0..6).map(|i| a.decode(i).coords().to_vec()).collect();
        let want = [
            [ratio(1, 2), ratio(1, 2)],
            [int(1), int(0)],
            [ratio(2, 3), ratio(1, 3)],
            [ratio(3, 4), ratio(1, 4)],
            [ratio(3, 5), ratio(2, 5)],
            [ratio(4, 5), ratio(1, 5)],
        ];
        for (g, w) in got.iter().zip(want.iter()) {
            assert_eq!(g.as_slice(), w.as_slice());
        }
    }

    #[test]
    fn sequential_iteration_matches_decode() {
        for n in [2, 3, 4] {
            let a = AlphaMajorization::new(n);
            for start in [0, 1, 5, 40] {
                let seq: Vec<MajorizationPoint> = a.iter_from(start).take(300).collect();
                for (k, p) in seq.iter().enumerate() {
                    assert_eq!(p, &a.decode(start + k as u64), "n={n} index {}", start + k as u64);
                }
            }
        }
    }

    #[test]
    fn bounded_partition_counts() {
        // Partitions of 6 into at most 3 parts: 6, 51, 42, 411, 33, 321, 222.
        assert_eq!(bounded_partitions(6, 3, 6), 7);
        assert_eq!(bounded_partitions(6, 3, 3), 3);
        assert_eq!(bounded_partitions(0, 0, 0), 1);
    }

    #[test]
    fn cantor_prefix() {
        let c = CantorStrings::new(2);
        let got: Vec<Option<usize>> = (0..4).map(|i| c.decode(i).len()).collect();
        assert_eq!(got, [Some(0), Some(1), Some(1), Some(2)]);
        assert_eq!(c.encode(&SigmaString::binary("10")), Some(5));
    }

    #[test]
    fn rationals_cover_negatives() {
        for i in 0..500 {
            let r = Rationals.decode(i);
            assert_eq!(Rationals.encode(&r), Some(i), "{r}");
            let w = NonNegativeRationals.decode(i);
            assert_eq!(NonNegativeRationals.encode(&w), Some(i), "{w}");
        }
        assert!(Rationals.encode(&ratio(-7, 3)).is_some());
    }

    #[test]
    fn interval_basis_round_trip() {
        for i in 0..500 {
            let iv = IntervalBasis.decode(i);
            assert_eq!(IntervalBasis.encode(&iv), Some(i));
        }
    }
}
