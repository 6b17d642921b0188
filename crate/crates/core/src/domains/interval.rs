//! The interval domain: compact rational intervals under reverse inclusion,
//! plus a bottom element.

use alloc::vec::Vec;

use super::DomainError;
use crate::rational::{int, Rational};

/// Either `⊥` or a closed interval `[lo, hi]` with `lo ≤ hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RationalInterval {
    /// The bottom element, less informative than every interval.
    Bottom,
    /// The closed interval `[lo, hi]`.
    Closed {
        /// Left endpoint.
        lo: Rational,
        /// Right endpoint.
        hi: Rational,
    },
}

impl RationalInterval {
    /// `[lo, hi]`, rejecting `lo > hi`.
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, DomainError> {
        if lo > hi {
            return Err(DomainError::InvalidInterval);
        }
        Ok(RationalInterval::Closed { lo, hi })
    }

    /// The degenerate interval `[x, x]`.
    pub fn point(x: Rational) -> Self {
        RationalInterval::Closed { lo: x.clone(), hi: x }
    }

    /// `hi - lo`, or `None` for `⊥`.
    pub fn width(&self) -> Option<Rational> {
        match self {
            RationalInterval::Bottom => None,
            RationalInterval::Closed { lo, hi } => Some(hi - lo),
        }
    }

    /// Endpoints, or `None` for `⊥`.
    pub fn endpoints(&self) -> Option<(&Rational, &Rational)> {
        match self {
            RationalInterval::Bottom => None,
            RationalInterval::Closed { lo, hi } => Some((lo, hi)),
        }
    }
}

/// `x ⊑ y`: `x = ⊥`, or `x = [a,b]`, `y = [c,d]` with `a ≤ c` and `d ≤ b`.
///
/// ```
/// use ordbase_core::domains::{leq_i, RationalInterval};
/// use ordbase_core::rational::{int, ratio};
/// let wide = RationalInterval::new(int(0), int(2)).unwrap();
/// let narrow = RationalInterval::new(ratio(1, 2), int(1)).unwrap();
/// assert!(leq_i(&wide, &narrow));
/// assert!(leq_i(&RationalInterval::Bottom, &wide));
/// ```
pub fn leq_i(x: &RationalInterval, y: &RationalInterval) -> bool {
    match (x, y) {
        (RationalInterval::Bottom, _) => true,
        (_, RationalInterval::Bottom) => false,
        (RationalInterval::Closed { lo: a, hi: b }, RationalInterval::Closed { lo: c, hi: d }) => a <= c && d <= b,
    }
}

/// `x ≪ y`: `x = ⊥`, or `y` lies in the interior of `x` (`a < c` and
/// `d < b`).
pub fn way_below_i(x: &RationalInterval, y: &RationalInterval) -> bool {
    match (x, y) {
        (RationalInterval::Bottom, _) => true,
        (_, RationalInterval::Bottom) => false,
        (RationalInterval::Closed { lo: a, hi: b }, RationalInterval::Closed { lo: c, hi: d }) => a < c && d < b,
    }
}

/// Position of a rational relative to the limit of an interval chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    /// Strictly left of every point of the limit.
    Below,
    /// Strictly right of every point of the limit.
    Above,
    /// Inside the limit of a chain that has ended.
    Inside,
}

/// The supremum of a `⊑`-increasing chain of intervals, that is the
/// intersection of its members, exposed through rational queries.
///
/// The chain is consumed lazily; every consumed element is checked to be
/// `⊒` its predecessor.
#[derive(Debug)]
pub struct IntervalLimit<I> {
    chain: I,
    current: RationalInterval,
    consumed: usize,
    exhausted: bool,
}

/// Wraps an increasing chain of intervals as its supremum.
pub fn sup_interval_chain<I>(chain: I) -> IntervalLimit<I::IntoIter>
where
    I: IntoIterator<Item = RationalInterval>,
{
    IntervalLimit {
        chain: chain.into_iter(),
        current: RationalInterval::Bottom,
        consumed: 0,
        exhausted: false,
    }
}

impl<I: Iterator<Item = RationalInterval>> IntervalLimit<I> {
    /// The most informative interval consumed so far.
    pub fn current(&self) -> &RationalInterval {
        &self.current
    }

    /// Number of chain elements consumed so far.
    pub fn consumed(&self) -> usize {
        self.consumed
    }

    /// Consumes one more chain element. Returns `Ok(false)` once the chain
    /// has ended.
    pub fn advance(&mut self) -> Result<bool, DomainError> {
        if self.exhausted {
            return Ok(false);
        }
        match self.chain.next() {
            None => {
                self.exhausted = true;
                Ok(false)
            }
            Some(next) => {
                if !leq_i(&self.current, &next) {
                    return Err(DomainError::NotDirected { index: self.consumed });
                }
                self.current = next;
                self.consumed += 1;
                Ok(true)
            }
        }
    }

    /// Locates `q` relative to the limit, consuming at most `budget` further
    /// chain elements. If `q` stays inside every consumed interval of an
    /// unfinished chain, the answer is [`DomainError::DepthBounded`].
    pub fn locate(&mut self, q: &Rational, budget: usize) -> Result<Location, DomainError> {
        let mut spent = 0;
        loop {
            if let RationalInterval::Closed { lo, hi } = &self.current {
                if q < lo {
                    return Ok(Location::Below);
                }
                if q > hi {
                    return Ok(Location::Above);
                }
            }
            if spent == budget {
                return Err(DomainError::DepthBounded { depth: self.consumed });
            }
            if !self.advance()? {
                return match &self.current {
                    RationalInterval::Bottom => Err(DomainError::DepthBounded { depth: 0 }),
                    RationalInterval::Closed { .. } => Ok(Location::Inside),
                };
            }
            spent += 1;
        }
    }
}

/// The bisection chain for a real `x ∈ (lo, hi)` given the exact predicate
/// `below(q) ⇔ q < x`: starts at `[lo, hi]` and keeps the half containing
/// `x`. The `k`-th element has width `(hi − lo)·2⁻ᵏ`.
///
/// Midpoints where `below` is false are kept as right endpoints, so when
/// `x` is irrational both endpoints stay strictly away from it.
pub fn bisection_chain<F>(lo: Rational, hi: Rational, below: F) -> impl Iterator<Item = RationalInterval>
where
    F: Fn(&Rational) -> bool,
{
    let mut state = Some((lo, hi));
    core::iter::from_fn(move || {
        let (lo, hi) = state.take()?;
        let out = RationalInterval::Closed { lo: lo.clone(), hi: hi.clone() };
        let mid = (&lo + &hi) / int(2);
        state = Some(if below(&mid) { (mid, hi) } else { (lo, mid) });
        Some(out)
    })
}

/// Collects the first `steps + 1` elements of a bisection chain.
pub fn bisection_prefix<F>(lo: Rational, hi: Rational, below: F, steps: usize) -> Vec<RationalInterval>
where
    F: Fn(&Rational) -> bool,
{
    bisection_chain(lo, hi, below).take(steps + 1).collect()
}
