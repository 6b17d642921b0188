//! Majorization `Λⁿ`: decreasing probability vectors ordered by partial
//! sums, with the rational approximation, interpolation and basis-chain
//! constructions.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::DomainError;
use crate::rational::{int, min_ref, simplest_between, Rational};

/// A point `(x₁, …, xₙ)` of `Λⁿ`: `n ≥ 2`, `x₁ ≥ … ≥ xₙ ≥ 0`, `Σxᵢ = 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MajorizationPoint {
    coords: Vec<Rational>,
}

impl fmt::Debug for MajorizationPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for MajorizationPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl MajorizationPoint {
    /// Validates the simplex conditions.
    ///
    /// ```
    /// use ordbase_core::domains::MajorizationPoint;
    /// use ordbase_core::rational::ratio;
    /// assert!(MajorizationPoint::new(vec![ratio(1, 2), ratio(1, 2), ratio(0, 1)]).is_ok());
    /// assert!(MajorizationPoint::new(vec![ratio(1, 3), ratio(2, 3)]).is_err());
    /// ```
    pub fn new(coords: Vec<Rational>) -> Result<Self, DomainError> {
        if coords.len() < 2 {
            return Err(DomainError::NotInSimplex("needs at least two coordinates"));
        }
        if coords.iter().any(|c| c.is_negative() || c > &Rational::one()) {
            return Err(DomainError::NotInSimplex("coordinates must lie in [0, 1]"));
        }
        if coords.windows(2).any(|w| w[0] < w[1]) {
            return Err(DomainError::NotInSimplex("coordinates must be decreasing"));
        }
        if coords.iter().fold(Rational::zero(), |a, c| a + c) != Rational::one() {
            return Err(DomainError::NotInSimplex("coordinates must sum to 1"));
        }
        Ok(Self { coords })
    }

    /// Builds a point from coordinates already known to be valid.
    pub(crate) fn from_valid(coords: Vec<Rational>) -> Self {
        debug_assert!(Self::new(coords.clone()).is_ok(), "invalid point {coords:?}");
        Self { coords }
    }

    /// `⊥ = (1/n, …, 1/n)`.
    pub fn bottom(n: usize) -> Self {
        assert!(n >= 2, "majorization needs n >= 2");
        Self { coords: alloc::vec![Rational::new(1.into(), (n as i64).into()); n] }
    }

    /// `(1, 0, …, 0)`, the top element.
    pub fn top(n: usize) -> Self {
        assert!(n >= 2, "majorization needs n >= 2");
        let mut coords = alloc::vec![Rational::zero(); n];
        coords[0] = Rational::one();
        Self { coords }
    }

    /// Dimension `n`.
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Coordinates.
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Whether this is `⊥`.
    pub fn is_bottom(&self) -> bool {
        self.coords.iter().all(|c| c == &self.coords[0])
    }

    /// `s_k = x₁ + … + x_k` for `0 ≤ k ≤ n`.
    pub fn partial_sum(&self, k: usize) -> Rational {
        self.coords[..k].iter().fold(Rational::zero(), |a, c| a + c)
    }

    /// `(s₁, …, s_{n−1})`.
    pub fn partial_sums(&self) -> Vec<Rational> {
        let mut acc = Rational::zero();
        self.coords[..self.dim() - 1]
            .iter()
            .map(|c| {
                acc += c;
                acc.clone()
            })
            .collect()
    }
}

fn same_dim(x: &MajorizationPoint, y: &MajorizationPoint) -> Result<(), DomainError> {
    if x.dim() != y.dim() {
        return Err(DomainError::DimensionMismatch { left: x.dim(), right: y.dim() });
    }
    Ok(())
}

/// `x ≼_M y`: `s_k(x) ≤ s_k(y)` for every `k < n`.
pub fn leq_m(x: &MajorizationPoint, y: &MajorizationPoint) -> Result<bool, DomainError> {
    same_dim(x, y)?;
    Ok(x.partial_sums().iter().zip(y.partial_sums()).all(|(a, b)| a <= &b))
}

/// `x ≪ y`: `x = ⊥`, or `s_k(x) < s_k(y)` for every `k < n`.
///
/// ```
/// use ordbase_core::domains::{way_below_m, MajorizationPoint};
/// use ordbase_core::rational::ratio;
/// let x = MajorizationPoint::new(vec![ratio(2, 5), ratio(7, 20), ratio(1, 4)]).unwrap();
/// let y = MajorizationPoint::new(vec![ratio(1, 2), ratio(3, 10), ratio(1, 5)]).unwrap();
/// assert!(way_below_m(&x, &y).unwrap());
/// ```
pub fn way_below_m(x: &MajorizationPoint, y: &MajorizationPoint) -> Result<bool, DomainError> {
    same_dim(x, y)?;
    Ok(x.is_bottom() || x.partial_sums().iter().zip(y.partial_sums()).all(|(a, b)| a < &b))
}

/// Simplest rational in `(0, bound)`.
fn small_positive_below(bound: &Rational) -> Rational {
    simplest_between(&Rational::zero(), bound)
}

/// A rational point `q` with `s_k(x) − ε < s_k(q) < s_k(x)` for every
/// `k < n`.
///
/// Three cases: `x` uniform on its support, `x` with no trailing zeros after
/// its last block of equal coordinates, and `x` with trailing zeros, where
/// mass `β` is moved onto the zero coordinates.
///
/// Free choices inside open intervals take the simplest rational there.
pub fn approx_below(x: &MajorizationPoint, eps: &Rational) -> Result<MajorizationPoint, DomainError> {
    if x.is_bottom() {
        return Err(DomainError::BottomInput);
    }
    if !eps.is_positive() {
        return Err(DomainError::NonPositiveEpsilon);
    }
    let n = x.dim();
    let c = x.coords();
    let support = c.iter().take_while(|v| v.is_positive()).count();
    if c[..support].iter().all(|v| v == &c[0]) {
        return Ok(approx_uniform(n, support, eps));
    }
    Ok(approx_general(x, eps))
}

/// `x = (1/m, …, 1/m, 0, …, 0)` with `m < n`.
fn approx_uniform(n: usize, m: usize, eps: &Rational) -> MajorizationPoint {
    let mq = int(m as i64);
    let nq = int(n as i64);
    let inv_m = mq.recip();
    let eps = if eps < &inv_m { eps.clone() } else { &inv_m / int(2) };
    let bound = min_ref(&(&eps / &mq), &(&eps * (&nq - &mq) / &nq));
    let eps1 = small_positive_below(&bound);
    let beta = &mq * &eps1 / (&nq - &mq);
    let mut coords = alloc::vec![&inv_m - &eps1; m];
    coords.extend(core::iter::repeat_n(beta, n - m));
    MajorizationPoint::from_valid(coords)
}

/// Every other `x ≠ ⊥`.
fn approx_general(x: &MajorizationPoint, eps: &Rational) -> MajorizationPoint {
    let n = x.dim();
    let c = x.coords();
    // 1-based k: least i < n whose tail is constant apart from zeros.
    let k = (1..n)
        .find(|&i| c[i - 1..].iter().all(|v| v == &c[i - 1] || v.is_zero()))
        .unwrap_or(n);
    // 1-based h: last nonzero coordinate.
    let h = c.iter().rposition(|v| v.is_positive()).map_or(n, |i| i + 1);
    let alpha = int((h - k + 1) as i64);
    let kq = int(k as i64);
    let xk = &c[k - 1];
    let xk1 = &c[k - 2];
    let spread = (xk1 - xk) / (int(1) + (&kq - int(1)) / &alpha);
    let eps1 = small_positive_below(&min_ref(&(eps / &kq), &spread));

    let mut q: Vec<Rational> = Vec::with_capacity(n);
    for ci in &c[..k - 1] {
        let pick = simplest_between(&(ci - &eps1), ci);
        let v = match q.last() {
            Some(prev) if prev < &pick => prev.clone(),
            _ => pick,
        };
        q.push(v);
    }
    let head: Rational = q.iter().fold(Rational::zero(), |a, v| a + v);
    let tau = (int(1) - &head) / &alpha;
    for _ in k..=h {
        q.push(tau.clone());
    }
    if h == n {
        return MajorizationPoint::from_valid(q);
    }

    let tail = int((n - h) as i64);
    let sk_q = q[..k].iter().fold(Rational::zero(), |a, v| a + v);
    let sk_x = x.partial_sum(k);
    let slack = &sk_q - (&sk_x - eps);
    let b1 = eps / &tail;
    let b2 = &q[k - 1] / (int(1) + &tail / &alpha);
    let b3 = &slack / &tail;
    let beta = small_positive_below(&min_ref(&min_ref(&b1, &b2), &b3));
    let beta_shift = &tail * &beta / &alpha;
    for v in &mut q[k - 1..h] {
        *v -= &beta_shift;
    }
    q.extend(core::iter::repeat_n(beta, n - h));
    MajorizationPoint::from_valid(q)
}

/// A rational `b` with `x ≪ b ≪ y`, for `x ≪ y`.
///
/// For `x = ⊥` the answer is `⊥`. Otherwise, with `g` the least gap
/// `s_k(y) − s_k(x)` over `k < n`, each `bᵢ` (`i < n`) is picked in
/// `(xᵢ, xᵢ + g·2⁻ⁱ⁻¹)`, so every partial sum of `b` exceeds that of `x` by
/// less than `g`.
pub fn interpolate(x: &MajorizationPoint, y: &MajorizationPoint) -> Result<MajorizationPoint, DomainError> {
    if !way_below_m(x, y)? {
        return Err(DomainError::NotWayBelow);
    }
    if x.is_bottom() {
        return Ok(x.clone());
    }
    let n = x.dim();
    let sx = x.partial_sums();
    let sy = y.partial_sums();
    let g = sx[..n - 1].iter().zip(&sy).map(|(a, b)| b - a).min().expect("n >= 2");
    let mut b: Vec<Rational> = Vec::with_capacity(n);
    for i in 0..(n - 1) {
        let eps_i = &g * crate::rational::pow2_neg(i as u32 + 1);
        let xi = &x.coords()[i];
        let pick = simplest_between(xi, &(xi + &eps_i));
        let v = match b.last() {
            Some(prev) if prev < &pick => prev.clone(),
            _ => pick,
        };
        b.push(v);
    }
    let last = int(1) - b.iter().fold(Rational::zero(), |a, v| a + v);
    b.push(last);
    Ok(MajorizationPoint::from_valid(b))
}

/// Increasing chain `q₀ ≪ q₁ ≪ …` of rational points way-below `x` whose
/// partial sums converge to those of `x`. See [`basis_chain_m`].
#[derive(Clone, Debug)]
pub struct BasisChainM {
    target: MajorizationPoint,
    gap: Rational,
    step: u32,
    last: Option<MajorizationPoint>,
}

/// The chain `qᵢ = approx_below(x, εᵢ)` with
/// `εᵢ = min(gap·2⁻ⁱ⁻¹, minₖ(s_k(x) − s_k(qᵢ₋₁)))` and
/// `gap = minₖ(s_k(x) − k/n)`, so that `s_k(qᵢ) > s_k(x) − gap·2⁻ⁱ⁻¹` and
/// `qᵢ₋₁ ≪ qᵢ ≪ x`. For `x = ⊥` the chain is constantly `⊥`.
///
/// ```
/// use ordbase_core::domains::{basis_chain_m, MajorizationPoint};
/// let chain: Vec<_> = basis_chain_m(&MajorizationPoint::top(3)).take(3).collect();
/// assert!(chain[0].partial_sum(1) < chain[1].partial_sum(1));
/// ```
pub fn basis_chain_m(x: &MajorizationPoint) -> BasisChainM {
    let n = x.dim();
    let gap = x
        .partial_sums()
        .iter()
        .enumerate()
        .map(|(i, s)| s - Rational::new(((i + 1) as i64).into(), (n as i64).into()))
        .min()
        .expect("n >= 2");
    BasisChainM { target: x.clone(), gap, step: 0, last: None }
}

impl Iterator for BasisChainM {
    type Item = MajorizationPoint;

    fn next(&mut self) -> Option<MajorizationPoint> {
        if self.target.is_bottom() {
            return Some(self.target.clone());
        }
        let mut eps = &self.gap * crate::rational::pow2_neg(self.step + 1);
        if let Some(prev) = &self.last {
            let room = self
                .target
                .partial_sums()
                .iter()
                .zip(prev.partial_sums())
                .map(|(a, b)| a - b)
                .min()
                .expect("n >= 2");
            eps = min_ref(&eps, &room);
        }
        let q = approx_below(&self.target, &eps).expect("target is not bottom and eps > 0");
        self.step += 1;
        self.last = Some(q.clone());
        Some(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn pt(v: &[(i64, i64)]) -> MajorizationPoint {
        MajorizationPoint::new(v.iter().map(|&(p, q)| ratio(p, q)).collect()).unwrap()
    }

    fn sandwich(x: &MajorizationPoint, q: &MajorizationPoint, eps: &Rational) -> bool {
        x.partial_sums()
            .iter()
            .zip(q.partial_sums())
            .all(|(sx, sq)| (sx - eps) < sq && &sq < sx)
    }

    #[test]
    fn incomparable_pair_from_the_text() {
        let x = pt(&[(6, 10), (2, 10), (2, 10)]);
        let y = pt(&[(5, 10), (4, 10), (1, 10)]);
        assert!(!leq_m(&x, &y).unwrap());
        assert!(!leq_m(&y, &x).unwrap());
    }

    #[test]
    fn bottom_is_way_below_everything() {
        let b = MajorizationPoint::bottom(3);
        assert!(way_below_m(&b, &b).unwrap());
        assert!(way_below_m(&b, &pt(&[(1, 2), (1, 2), (0, 1)])).unwrap());
    }

    #[test]
    fn approx_below_uniform_case() {
        let x = pt(&[(1, 2), (1, 2), (0, 1)]);
        let eps = ratio(1, 10);
        let q = approx_below(&x, &eps).unwrap();
        assert!(sandwich(&x, &q, &eps), "{q:?}");
    }

    #[test]
    fn approx_below_general_cases() {
        let x = pt(&[(3, 5), (3, 10), (1, 10)]);
        let eps = ratio(1, 20);
        assert!(sandwich(&x, &approx_below(&x, &eps).unwrap(), &eps));
        let x = pt(&[(1, 2), (1, 4), (1, 4), (0, 1), (0, 1)]);
        let eps = ratio(1, 100);
        assert!(sandwich(&x, &approx_below(&x, &eps).unwrap(), &eps));
        let x = pt(&[(1, 2), (1, 3), (1, 6)]);
        assert!(sandwich(&x, &approx_below(&x, &eps).unwrap(), &eps));
    }

    #[test]
    fn approx_below_rejects_bottom() {
        assert_eq!(
            approx_below(&MajorizationPoint::bottom(3), &ratio(1, 10)),
            Err(DomainError::BottomInput)
        );
    }

    #[test]
    fn interpolate_example() {
        let x = pt(&[(4, 10), (35, 100), (25, 100)]);
        let y = pt(&[(5, 10), (3, 10), (2, 10)]);
        let b = interpolate(&x, &y).unwrap();
        assert!(way_below_m(&x, &b).unwrap() && way_below_m(&b, &y).unwrap());
        assert_eq!(interpolate(&y, &x), Err(DomainError::NotWayBelow));
        let bot = MajorizationPoint::bottom(3);
        assert_eq!(interpolate(&bot, &y).unwrap(), bot);
    }

    #[test]
    fn basis_chain_of_top() {
        let chain: Vec<_> = basis_chain_m(&MajorizationPoint::top(4)).take(20).collect();
        for (i, q) in chain.iter().enumerate() {
            assert!(q.partial_sum(1) > int(1) - crate::rational::pow2_neg(i as u32));
            assert!(way_below_m(q, &MajorizationPoint::top(4)).unwrap());
        }
        for w in chain.windows(2) {
            assert!(w[0].partial_sums().iter().zip(w[1].partial_sums()).all(|(a, b)| a < &b));
        }
    }
}
