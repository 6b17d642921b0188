//! Effectivity: pairing, finite maps and emitters modelling recursively
//! enumerable sets.
//!
//! An [`Emitter`] is a total function `ℕ → ℕ`; the set it models is its range.
//! Every emitter built here follows the "emit 0 on reject" convention: step
//! `c` emits `c` when the pair coded by `c` is accepted and `0` otherwise.
//! Index 0 of every basis enumeration is a bottom element or otherwise
//! accepted by reflexivity, so `0 = ⟨0, 0⟩` never adds a false pair.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

mod maps;
mod pairing;

pub use maps::{AlphaMajorization, Alpha0, CantorStrings, FiniteMap, IntervalBasis, NonNegativeRationals, Rationals};
pub use pairing::{matches_closed_form, pair, pair_big, unpair, unpair_big};

/// A total step function whose range models an r.e. set.
pub trait Emitter {
    /// Output at step `k`.
    fn step(&self, k: u64) -> u64;
}

impl<E: Emitter + ?Sized> Emitter for &E {
    fn step(&self, k: u64) -> u64 {
        (**self).step(k)
    }
}

/// The outputs of the first `steps` steps.
pub fn trace<E: Emitter + ?Sized>(emitter: &E, steps: u64) -> Vec<u64> {
    (0..steps).map(|k| emitter.step(k)).collect()
}

/// Emits `⟨p, q⟩` when `rel(α(p), α(q))`.
pub struct RelationEmitter<M, R> {
    map: M,
    rel: R,
}

/// The emitter of `{⟨p, q⟩ : rel(α(p), α(q))} ∪ {0}`.
///
/// ```
/// use ordbase_core::effective::{relation_emitter, pair, AlphaMajorization, Emitter};
/// use ordbase_core::domains::leq_m;
/// let e = relation_emitter(AlphaMajorization::new(2), |a, b| leq_m(a, b).unwrap());
/// assert_eq!(e.step(0), 0);
/// let c = pair(0, 1).unwrap();
/// assert_eq!(e.step(c), c);
/// assert_eq!(e.step(pair(1, 0).unwrap()), 0);
/// ```
pub fn relation_emitter<M, R>(map: M, rel: R) -> RelationEmitter<M, R>
where
    M: FiniteMap,
    R: Fn(&M::Item, &M::Item) -> bool,
{
    RelationEmitter { map, rel }
}

impl<M, R> Emitter for RelationEmitter<M, R>
where
    M: FiniteMap,
    R: Fn(&M::Item, &M::Item) -> bool,
{
    fn step(&self, k: u64) -> u64 {
        let (p, q) = unpair(k);
        if (self.rel)(&self.map.decode(p), &self.map.decode(q)) {
            k
        } else {
            0
        }
    }
}

/// Emits `n` when `bₙ ≪ x`.
pub struct ElementEmitter<M, W> {
    map: M,
    way_below_x: W,
}

/// The emitter of `{n : bₙ ≪ x} ∪ {0}` for a computable element `x`, given
/// the decision procedure `b ↦ (b ≪ x)`. The basis must have `b₀ = ⊥`.
pub fn computable_element_emitter<M, W>(map: M, way_below_x: W) -> ElementEmitter<M, W>
where
    M: FiniteMap,
    W: Fn(&M::Item) -> bool,
{
    ElementEmitter { map, way_below_x }
}

impl<M, W> Emitter for ElementEmitter<M, W>
where
    M: FiniteMap,
    W: Fn(&M::Item) -> bool,
{
    fn step(&self, k: u64) -> u64 {
        if (self.way_below_x)(&self.map.decode(k)) {
            k
        } else {
            0
        }
    }
}

/// Emits `⟨n, m⟩` when `b'ₙ ≪ f(bₘ)`.
pub struct FunctionRelationEmitter<P, Q, F, W> {
    basis_p: P,
    basis_q: Q,
    f: F,
    way_below_q: W,
}

/// The emitter of `{⟨n, m⟩ : b'ₙ ≪ f(bₘ)} ∪ {0}` for a function `f` from the
/// basis of `P` into `Q`. The basis of `Q` must have `b'₀ = ⊥`.
pub fn computable_function_relation<P, Q, F, W, T>(f: F, basis_p: P, basis_q: Q, way_below_q: W) -> FunctionRelationEmitter<P, Q, F, W>
where
    P: FiniteMap,
    Q: FiniteMap,
    F: Fn(&P::Item) -> T,
    W: Fn(&Q::Item, &T) -> bool,
{
    FunctionRelationEmitter { basis_p, basis_q, f, way_below_q }
}

impl<P, Q, F, W, T> Emitter for FunctionRelationEmitter<P, Q, F, W>
where
    P: FiniteMap,
    Q: FiniteMap,
    F: Fn(&P::Item) -> T,
    W: Fn(&Q::Item, &T) -> bool,
{
    fn step(&self, k: u64) -> u64 {
        let (n, m) = unpair(k);
        let image = (self.f)(&self.basis_p.decode(m));
        if (self.way_below_q)(&self.basis_q.decode(n), &image) {
            k
        } else {
            0
        }
    }
}

/// Wraps an emitter and emits `0` instead at every step `k` with
/// `k mod period = period − 1`. Used to inject faults into checks.
pub struct DropEvery<E> {
    inner: E,
    period: u64,
}

impl<E> DropEvery<E> {
    /// Drops one step in every `period ≥ 1`.
    pub fn new(inner: E, period: u64) -> Self {
        assert!(period >= 1, "period must be positive");
        Self { inner, period }
    }
}

impl<E: Emitter> Emitter for DropEvery<E> {
    fn step(&self, k: u64) -> u64 {
        if k % self.period == self.period - 1 {
            0
        } else {
            self.inner.step(k)
        }
    }
}

/// Result of one clause of an effectivity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClauseOutcome {
    /// Verified up to the bound.
    Pass,
    /// Refuted, with a description of the counterexample.
    Fail(String),
    /// A required code was not emitted and lies at or beyond the bound, so
    /// the check is inconclusive.
    BoundExceeded {
        /// The missing code.
        code: u64,
    },
}

impl ClauseOutcome {
    /// Whether the clause passed.
    pub fn is_pass(&self) -> bool {
        matches!(self, ClauseOutcome::Pass)
    }
}

impl fmt::Display for ClauseOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClauseOutcome::Pass => write!(f, "pass"),
            ClauseOutcome::Fail(why) => write!(f, "fail: {why}"),
            ClauseOutcome::BoundExceeded { code } => write!(f, "bound exceeded at code {code}"),
        }
    }
}

/// Outcome of [`verify_effective_weak_basis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EffectiveBasisReport {
    /// Every nonzero emission within the bound decodes to an ordered pair.
    pub soundness: ClauseOutcome,
    /// Every pair of a witness set is dominated inside the set, with both
    /// codes emitted within the bound.
    pub completeness: ClauseOutcome,
}

impl EffectiveBasisReport {
    /// Whether both clauses passed.
    pub fn all_pass(&self) -> bool {
        self.soundness.is_pass() && self.completeness.is_pass()
    }
}

/// Checks the effective weak basis conditions up to `bound` steps.
///
/// * Soundness: for `k < bound`, a nonzero `emitter.step(k)` decodes to
///   `⟨n, m⟩` with `bₙ ≼ bₘ`.
/// * Completeness: for every `B_x` in `x_family` and all `bₙ, bₘ` in `B_x`
///   other than its greatest element `x`, some `b_p ∈ B_x` has
///   `bₙ, bₘ ≺ b_p`, and `⟨n, p⟩`, `⟨m, p⟩` are emitted before `bound`.
///
/// Each `B_x` lists a finite directed witness set whose last element is `x`.
pub fn verify_effective_weak_basis<M, E, L>(map: &M, emitter: &E, leq: L, x_family: &[Vec<M::Item>], bound: u64) -> EffectiveBasisReport
where
    M: FiniteMap,
    M::Item: fmt::Debug,
    E: Emitter + ?Sized,
    L: Fn(&M::Item, &M::Item) -> bool,
{
    let mut emitted = BTreeSet::new();
    let mut soundness = ClauseOutcome::Pass;
    for k in 0..bound {
        let c = emitter.step(k);
        emitted.insert(c);
        if c != 0 && soundness.is_pass() {
            let (n, m) = unpair(c);
            let (bn, bm) = (map.decode(n), map.decode(m));
            if !leq(&bn, &bm) {
                soundness = ClauseOutcome::Fail(format!("step {k} emitted <{n},{m}> but {bn:?} is not below {bm:?}"));
            }
        }
    }
    let completeness = completeness_clause(map, &emitted, &leq, x_family, bound);
    EffectiveBasisReport { soundness, completeness }
}

fn completeness_clause<M, L>(map: &M, emitted: &BTreeSet<u64>, leq: &L, x_family: &[Vec<M::Item>], bound: u64) -> ClauseOutcome
where
    M: FiniteMap,
    M::Item: fmt::Debug,
    L: Fn(&M::Item, &M::Item) -> bool,
{
    let mut exceeded = None;
    for bx in x_family {
        let Some((_, below)) = bx.split_last() else {
            return ClauseOutcome::Fail(String::from("empty witness set"));
        };
        let mut codes = Vec::with_capacity(bx.len());
        for b in bx {
            match map.encode(b) {
                Some(i) => codes.push(i),
                None => return ClauseOutcome::Fail(format!("{b:?} is not a basis element")),
            }
        }
        let strictly_below = |a: usize, b: usize| leq(&bx[a], &bx[b]) && !leq(&bx[b], &bx[a]);
        for n in 0..below.len() {
            for m in n..below.len() {
                let Some(p) = (0..bx.len()).find(|&p| strictly_below(n, p) && strictly_below(m, p)) else {
                    return ClauseOutcome::Fail(format!("{:?} and {:?} have no strict upper bound in the witness set", bx[n], bx[m]));
                };
                for i in [n, m] {
                    let Some(code) = pair(codes[i], codes[p]) else {
                        exceeded.get_or_insert(u64::MAX);
                        continue;
                    };
                    if emitted.contains(&code) {
                        continue;
                    }
                    if code < bound {
                        return ClauseOutcome::Fail(format!("code {code} for {:?} below {:?} was not emitted", bx[i], bx[p]));
                    }
                    exceeded.get_or_insert(code);
                }
            }
        }
    }
    match exceeded {
        Some(code) => ClauseOutcome::BoundExceeded { code },
        None => ClauseOutcome::Pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::{leq_m, way_below_i, way_below_m, MajorizationPoint, QuadraticSurd, RationalInterval};
    use crate::rational::ratio;
    use alloc::vec;

    #[test]
    fn element_emitter_for_bottom_is_singleton() {
        let bottom = MajorizationPoint::bottom(3);
        let e = computable_element_emitter(AlphaMajorization::new(3), |b: &MajorizationPoint| way_below_m(b, &bottom).unwrap());
        assert!(trace(&e, 2000).iter().all(|&c| c == 0));
    }

    #[test]
    fn element_emitter_for_sqrt2() {
        let root = QuadraticSurd::sqrt2();
        let e = computable_element_emitter(IntervalBasis, |b: &RationalInterval| match b.endpoints() {
            None => true,
            Some((lo, hi)) => root.gt_rational(lo) && root.lt_rational(hi),
        });
        let hits: Vec<u64> = trace(&e, 1000).into_iter().filter(|&c| c != 0).collect();
        assert!(!hits.is_empty());
        for c in hits {
            let iv = IntervalBasis.decode(c);
            assert!(way_below_i(&iv, &RationalInterval::Bottom) || iv.endpoints().is_some());
        }
    }

    #[test]
    fn majorization_element_example() {
        let x = MajorizationPoint::new(vec![ratio(1, 2), ratio(3, 10), ratio(1, 5)]).unwrap();
        let b = MajorizationPoint::new(vec![ratio(2, 5), ratio(7, 20), ratio(1, 4)]).unwrap();
        let map = AlphaMajorization::new(3);
        let i = map.encode(&b).unwrap();
        let e = computable_element_emitter(map, |b: &MajorizationPoint| way_below_m(b, &x).unwrap());
        assert_eq!(e.step(i), i);
    }

    #[test]
    fn constant_bottom_function() {
        let map = AlphaMajorization::new(2);
        let bottom = MajorizationPoint::bottom(2);
        let e = computable_function_relation(|_: &MajorizationPoint| bottom.clone(), map, map, |b, y| way_below_m(b, y).unwrap());
        for k in 0..3000 {
            let c = e.step(k);
            let (n, m) = unpair(k);
            assert_eq!(c != 0 || k == 0, n == 0, "k={k} m={m}");
        }
    }

    #[test]
    fn trivial_witness_passes() {
        let map = AlphaMajorization::new(2);
        let e = relation_emitter(map, |a, b| leq_m(a, b).unwrap());
        let x = map.decode(17);
        let r = verify_effective_weak_basis(&map, &e, |a, b| leq_m(a, b).unwrap(), &[vec![x]], 1000);
        assert!(r.all_pass(), "{r:?}");
    }
}
