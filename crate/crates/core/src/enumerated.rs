//! Countable posets presented by an enumeration and a decidable order, with
//! lazy chain constructions over them.
//!
//! Searches that are only semi-decidable take an explicit step budget and
//! report [`Stall`] as an ordinary value when it runs out.

use alloc::boxed::Box;
use alloc::format;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::effective::{unpair, FiniteMap};
use crate::poset::{is_directed, supremum, ElementSubset, ExhaustiveOracle, FinitePoset, PosetError, FAMILY_ENUMERATION_BOUND};
use crate::report::{PosetReport, Witness};

/// A countable poset: a finite map onto the carrier and a decidable `≼`.
pub struct EnumeratedPoset<M, L> {
    map: M,
    leq: L,
}

impl<M, L> EnumeratedPoset<M, L>
where
    M: FiniteMap,
    L: Fn(&M::Item, &M::Item) -> bool,
{
    /// Wraps an enumeration and an order.
    pub fn new(map: M, leq: L) -> Self {
        Self { map, leq }
    }

    /// The enumeration.
    pub fn map(&self) -> &M {
        &self.map
    }

    /// `α(index)`.
    pub fn decode(&self, index: u64) -> M::Item {
        self.map.decode(index)
    }

    /// `α⁻¹(x)`.
    pub fn encode(&self, x: &M::Item) -> Option<u64> {
        self.map.encode(x)
    }

    /// `x ≼ y`.
    pub fn leq(&self, x: &M::Item, y: &M::Item) -> bool {
        (self.leq)(x, y)
    }

    /// `x ≺ y`.
    pub fn lt(&self, x: &M::Item, y: &M::Item) -> bool {
        (self.leq)(x, y) && !(self.leq)(y, x)
    }
}

/// A semi-decidable search ran out of budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stall {
    /// The exhausted budget.
    pub budget: u64,
    /// Position in the output stream at which the search stalled.
    pub position: usize,
}

impl fmt::Display for Stall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "search for element {} exceeded its budget of {} steps", self.position, self.budget)
    }
}

type Source<'a, T> = Box<dyn FnMut(usize) -> Result<T, Stall> + 'a>;
type Order<'a, T> = Box<dyn Fn(&T, &T) -> bool + 'a>;

/// An increasing sequence, produced lazily.
///
/// Every produced element is checked against its predecessor. A decrease
/// means a construction broke its postcondition and aborts with a panic.
/// After a [`Stall`] the stream ends.
pub struct ChainStream<'a, T> {
    source: Source<'a, T>,
    leq: Order<'a, T>,
    strict: bool,
    last: Option<T>,
    position: usize,
    stalled: bool,
}

impl<'a, T: Clone + fmt::Debug> ChainStream<'a, T> {
    /// Wraps a generator called with positions `0, 1, …`. With `strict`, each
    /// element must also differ from its predecessor.
    pub fn new<S, L>(source: S, leq: L, strict: bool) -> Self
    where
        S: FnMut(usize) -> Result<T, Stall> + 'a,
        L: Fn(&T, &T) -> bool + 'a,
    {
        Self { source: Box::new(source), leq: Box::new(leq), strict, last: None, position: 0, stalled: false }
    }

    /// Collects the first `k` elements, stopping at a stall.
    pub fn prefix(&mut self, k: usize) -> Result<Vec<T>, Stall> {
        self.take(k).collect()
    }
}

impl<T: Clone + fmt::Debug> Iterator for ChainStream<'_, T> {
    type Item = Result<T, Stall>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.stalled {
            return None;
        }
        match (self.source)(self.position) {
            Err(stall) => {
                self.stalled = true;
                Some(Err(stall))
            }
            Ok(x) => {
                if let Some(prev) = &self.last {
                    let up = (self.leq)(prev, &x);
                    let strict_ok = !self.strict || !(self.leq)(&x, prev);
                    assert!(
                        up && strict_ok,
                        "internal error: chain is not increasing at position {}: {prev:?} then {x:?}",
                        self.position
                    );
                }
                self.last = Some(x.clone());
                self.position += 1;
                Some(Ok(x))
            }
        }
    }
}

/// Dovetailed semi-decision of `D_A = {d ∈ D : ∃ a, b ∈ A, a ≼ d ≼ b}`.
///
/// Step `t` decodes `t = ⟨i, j⟩` and tests the `i`-th element of `D` against
/// the first `j + 1` elements of `A`. Elements of `D_A` are recorded in
/// discovery order.
struct DirectedCover<'a, M: FiniteMap, L> {
    host: &'a EnumeratedPoset<M, L>,
    stream: &'a dyn Fn(u64) -> M::Item,
    candidates: Vec<M::Item>,
    a_prefix: Vec<M::Item>,
    t: u64,
    seen: BTreeSet<u64>,
    found: Vec<M::Item>,
}

impl<'a, M, L> DirectedCover<'a, M, L>
where
    M: FiniteMap,
    M::Item: Clone,
    L: Fn(&M::Item, &M::Item) -> bool,
{
    fn new(host: &'a EnumeratedPoset<M, L>, stream: &'a dyn Fn(u64) -> M::Item) -> Self {
        Self { host, stream, candidates: Vec::new(), a_prefix: Vec::new(), t: 0, seen: BTreeSet::new(), found: Vec::new() }
    }

    fn step(&mut self) {
        let (i, j) = unpair(self.t);
        self.t += 1;
        if self.seen.contains(&i) {
            return;
        }
        while self.candidates.len() as u64 <= i {
            let next = self.host.decode(self.candidates.len() as u64);
            self.candidates.push(next);
        }
        while self.a_prefix.len() as u64 <= j {
            let next = (self.stream)(self.a_prefix.len() as u64);
            self.a_prefix.push(next);
        }
        let d = &self.candidates[i as usize];
        let prefix = &self.a_prefix[..=j as usize];
        // A is directed, so separate witnesses below and above d can be
        // replaced by a single pair.
        if prefix.iter().any(|a| self.host.leq(a, d)) && prefix.iter().any(|b| self.host.leq(d, b)) {
            self.seen.insert(i);
            self.found.push(d.clone());
        }
    }

    /// Steps until `D_A` has more than `k` known elements.
    fn ensure(&mut self, k: usize, spent: &mut u64, budget: u64, position: usize) -> Result<(), Stall> {
        while self.found.len() <= k {
            if *spent >= budget {
                return Err(Stall { budget, position });
            }
            self.step();
            *spent += 1;
        }
        Ok(())
    }
}

/// State of the `d'ₙ` recursion: `d'₀ = d₀` and `d'ₙ = d_{mₙ}` for the least
/// `mₙ > mₙ₋₁` with `d'ₙ₋₁ ≼ d_{mₙ}` and `dₙ ≼ d_{mₙ}`, where `(dₙ)` lists
/// `D_A` in discovery order.
struct CoverChain<'a, M: FiniteMap, L> {
    cover: DirectedCover<'a, M, L>,
    last: Option<(usize, M::Item)>,
    budget: u64,
}

impl<M, L> CoverChain<'_, M, L>
where
    M: FiniteMap,
    M::Item: Clone,
    L: Fn(&M::Item, &M::Item) -> bool,
{
    fn next_element(&mut self, n: usize) -> Result<M::Item, Stall> {
        let mut spent = 0;
        self.cover.ensure(n, &mut spent, self.budget, n)?;
        let Some((m_prev, prev)) = self.last.clone() else {
            let first = self.cover.found[0].clone();
            self.last = Some((0, first.clone()));
            return Ok(first);
        };
        let mut m = m_prev + 1;
        loop {
            self.cover.ensure(m, &mut spent, self.budget, n)?;
            let cand = &self.cover.found[m];
            if self.cover.host.leq(&prev, cand) && self.cover.host.leq(&self.cover.found[n], cand) {
                let out = cand.clone();
                self.last = Some((m, out.clone()));
                return Ok(out);
            }
            m += 1;
        }
    }
}

/// The increasing chain `d'₀ ≼ d'₁ ≼ …` in `D` built from a non-trivial
/// directed set `A` given as a stream, where `D` is the enumerated host
/// (assumed Debreu dense).
///
/// Every element of `A` is below some `d'ₙ` and every `d'ₙ` is below some
/// element of `A`, so the chain has the same supremum as `A`. Successive
/// elements are distinct. `budget` bounds the dovetailing steps spent per
/// element.
///
/// When `⊔A ∈ A` the set `D_A` may be finite and the stream stalls; classify
/// such inputs with [`classify_trivial`] first.
pub fn chain_from_directed<'a, M, L>(host: &'a EnumeratedPoset<M, L>, stream: &'a dyn Fn(u64) -> M::Item, budget: u64) -> ChainStream<'a, M::Item>
where
    M: FiniteMap,
    M::Item: Clone + fmt::Debug,
    L: Fn(&M::Item, &M::Item) -> bool,
{
    let mut state = CoverChain { cover: DirectedCover::new(host, stream), last: None, budget };
    ChainStream::new(move |n| state.next_element(n), move |a, b| host.leq(a, b), true)
}

/// Like [`chain_from_directed`], but every emitted element is taken from
/// `A` itself: each `d'ₙ` is replaced by the least-index stream element
/// above both `d'ₙ` and the previous output.
pub fn chain_inside_directed<'a, M, L>(host: &'a EnumeratedPoset<M, L>, stream: &'a dyn Fn(u64) -> M::Item, budget: u64) -> ChainStream<'a, M::Item>
where
    M: FiniteMap,
    M::Item: Clone + fmt::Debug,
    L: Fn(&M::Item, &M::Item) -> bool,
{
    let mut chain = CoverChain { cover: DirectedCover::new(host, stream), last: None, budget };
    let mut last: Option<M::Item> = None;
    ChainStream::new(
        move |n| {
            let d = chain.next_element(n)?;
            let found = (0..budget).map(stream).find(|b| host.leq(&d, b) && last.as_ref().is_none_or(|l| host.leq(l, b)));
            let b = found.ok_or(Stall { budget, position: n })?;
            last = Some(b.clone());
            Ok(b)
        },
        move |a, b| host.leq(a, b),
        false,
    )
}

/// The chain `x ≺ d'₀ ≺ d'₁ ≺ … ≺ y` where `d'ₖ` is the least-index element
/// of `D` strictly between `d'ₖ₋₁` (or `x`) and `y`.
///
/// Chosen indices strictly increase, so the enumeration is scanned once.
/// `budget` bounds the number of indices scanned per element; running out
/// means no strict intermediate was found, as happens at a jump.
pub fn order_dense_chain<'a, M, L>(host: &'a EnumeratedPoset<M, L>, x: M::Item, y: M::Item, budget: u64) -> ChainStream<'a, M::Item>
where
    M: FiniteMap,
    M::Item: Clone + fmt::Debug + 'a,
    L: Fn(&M::Item, &M::Item) -> bool,
{
    least_index_chain(host, Some(x), Box::new(move |d| host.lt(d, &y)), budget)
}

type Predicate<'a, T> = Box<dyn Fn(&T) -> bool + 'a>;

/// Least-index chain inside `{d ∈ D : upper(d)}`, starting strictly above
/// `start` when given.
fn least_index_chain<'a, M, L>(
    host: &'a EnumeratedPoset<M, L>,
    start: Option<M::Item>,
    upper: Predicate<'a, M::Item>,
    budget: u64,
) -> ChainStream<'a, M::Item>
where
    M: FiniteMap,
    M::Item: Clone + fmt::Debug + 'a,
    L: Fn(&M::Item, &M::Item) -> bool,
{
    let mut prev = start;
    let mut scan = host.map().iter_from(0);
    ChainStream::new(
        move |n| {
            for _ in 0..budget {
                let d = scan.next().expect("enumerations are infinite");
                if upper(&d) && prev.as_ref().is_none_or(|p| host.lt(p, &d)) {
                    prev = Some(d.clone());
                    return Ok(d);
                }
            }
            Err(Stall { budget, position: n })
        },
        move |a, b| host.leq(a, b),
        true,
    )
}

/// Answer of a semi-decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    /// Membership was established.
    Yes,
    /// No proof was found within the budget; the answer may still be yes.
    NotWithinBudget,
}

/// How a candidate element of the host is presented to
/// [`theorem1_membership`].
pub enum Target<'a, T> {
    /// An element of the carrier of `D`.
    Element(T),
    /// An element known only through the decidable predicate
    /// `strictly_below(d) ⇔ d ≺ x` on `D` and a decidable certificate
    /// `is_sup(prefix)` accepting prefixes of chains in `D` whose supremum
    /// is `x`.
    Limit {
        /// `d ≺ x`.
        strictly_below: &'a dyn Fn(&T) -> bool,
        /// Accepts a chain prefix as evidence for `x = ⊔` of the chain.
        is_sup: &'a dyn Fn(&[T]) -> bool,
    },
}

/// Semi-decides `x ∈ Q = D ∪ {x : x = ⊔A for a directed A ⊆ D}`.
///
/// Elements of `D` are accepted at once. For a [`Target::Limit`], the
/// least-index chain inside `{d : d ≺ x}` is grown for at most `budget`
/// elements, each found within `budget` indices, and `Yes` is returned as
/// soon as `is_sup` accepts the prefix.
pub fn theorem1_membership<M, L>(host: &EnumeratedPoset<M, L>, x: &Target<'_, M::Item>, budget: u64) -> Membership
where
    M: FiniteMap,
    M::Item: Clone + fmt::Debug,
    L: Fn(&M::Item, &M::Item) -> bool,
{
    match x {
        Target::Element(e) => {
            if host.encode(e).is_some() {
                Membership::Yes
            } else {
                Membership::NotWithinBudget
            }
        }
        Target::Limit { strictly_below, is_sup } => {
            let mut prefix = Vec::new();
            let chain = least_index_chain(host, None, Box::new(|d| strictly_below(d)), budget);
            for d in chain.take(budget as usize) {
                let Ok(d) = d else { break };
                prefix.push(d);
                if is_sup(&prefix) {
                    return Membership::Yes;
                }
            }
            Membership::NotWithinBudget
        }
    }
}

/// `Q` for a subset `D` of a finite poset: `D` together with every supremum
/// of a directed subset of `D`.
pub fn theorem1_q_finite(p: &FinitePoset, d: &ElementSubset, bound: usize) -> Result<ElementSubset, PosetError> {
    let o = ExhaustiveOracle::new(p, bound)?;
    let dm = d.to_mask();
    let sups = o.directed_subsets().iter().filter(|&&(mask, _)| mask & !dm == 0).map(|&(_, sup)| sup);
    Ok(ElementSubset::from_indices(d.iter().chain(sups)))
}

/// Checks `Q = D` for every subset `D` of `P` (only `D = P` above
/// [`FAMILY_ENUMERATION_BOUND`] elements). On finite posets every directed
/// subset contains its supremum, so the construction adds nothing.
pub fn theorem1_check(p: &FinitePoset, bound: usize) -> Result<PosetReport, PosetError> {
    let n = p.len();
    let family: Vec<u64> = if n <= FAMILY_ENUMERATION_BOUND {
        (0..(1u64 << n)).collect()
    } else {
        alloc::vec![ElementSubset::full(n).to_mask()]
    };
    let mut counter = None;
    for &mask in &family {
        let d = ElementSubset::from_mask(mask);
        if theorem1_q_finite(p, &d, bound)? != d {
            counter = Some(d);
            break;
        }
    }
    let mut r = PosetReport::new();
    r.degenerate(
        "q_equals_d",
        counter.is_none(),
        match &counter {
            None => Witness::Text(format!("{} subsets D checked", family.len())),
            Some(d) => Witness::subset(p, d),
        },
        "every directed subset of a finite poset contains its supremum",
    );
    Ok(r)
}

/// Split of a weak basis `B` into non-trivial elements `N_B` (suprema of a
/// directed `A ⊆ B` with `⊔A ∉ A`) and trivial elements `T_B = B ∖ N_B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialSplit {
    /// `N_B`.
    pub nontrivial: ElementSubset,
    /// `T_B`.
    pub trivial: ElementSubset,
}

/// Computes `(N_B, T_B)` by exhaustive search. On finite posets every
/// directed set contains its supremum, so `N_B = ∅`.
pub fn classify_trivial(p: &FinitePoset, b: &ElementSubset, bound: usize) -> Result<TrivialSplit, PosetError> {
    let o = ExhaustiveOracle::new(p, bound)?;
    let bm = b.to_mask();
    let nontrivial = ElementSubset::from_indices(
        o.directed_subsets()
            .iter()
            .filter(|&&(mask, sup)| mask & !bm == 0 && mask & (1 << sup) == 0)
            .map(|&(_, sup)| sup),
    );
    let trivial = ElementSubset::from_indices(b.iter().filter(|&x| !nontrivial.contains(x)));
    Ok(TrivialSplit { nontrivial, trivial })
}

/// A chain inside a directed subset `A` of a finite poset, obtained by
/// repeatedly moving to the least-index upper bound in `A` of the current
/// element and the next member of `A`. It ends at `max A`.
///
/// Returns `None` when `A` is not directed.
pub fn chain_inside_finite(p: &FinitePoset, a: &ElementSubset) -> Option<Vec<usize>> {
    if !is_directed(p, a) {
        return None;
    }
    let mut chain: Vec<usize> = Vec::new();
    for x in a.iter() {
        let next = match chain.last() {
            None => x,
            Some(&c) => a.iter().find(|&u| p.leq(c, u) && p.leq(x, u))?,
        };
        if chain.last() != Some(&next) {
            chain.push(next);
        }
    }
    debug_assert_eq!(chain.last().copied(), supremum(p, a));
    Some(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::{leq_i, leq_m, MajorizationPoint, RationalInterval};
    use crate::effective::{AlphaMajorization, IntervalBasis};
    use crate::rational::{int, pow2_neg, Rational};
    use alloc::vec;

    fn lambda2() -> EnumeratedPoset<AlphaMajorization, impl Fn(&MajorizationPoint, &MajorizationPoint) -> bool> {
        EnumeratedPoset::new(AlphaMajorization::new(2), |a: &MajorizationPoint, b: &MajorizationPoint| leq_m(a, b).unwrap())
    }

    fn approach_top(k: u64) -> MajorizationPoint {
        let e = pow2_neg(k as u32 + 1);
        MajorizationPoint::new(vec![int(1) - &e, e]).unwrap()
    }

    #[test]
    fn chain_from_directed_majorization() {
        let host = lambda2();
        let stream = approach_top;
        let chain = chain_from_directed(&host, &stream, 100_000).prefix(40).unwrap();
        let s1: Vec<Rational> = chain.iter().map(|p| p.partial_sum(1)).collect();
        assert!(s1.windows(2).all(|w| w[0] < w[1]));
        assert!(s1.iter().all(|s| s < &int(1)));
        // Supremum faithfulness on the first few elements of A.
        for k in 0..5 {
            let a = approach_top(k);
            assert!(chain.iter().any(|d| leq_m(&a, d).unwrap()), "{a} not dominated");
        }
    }

    #[test]
    fn chain_from_directed_intervals() {
        let host = EnumeratedPoset::new(IntervalBasis, leq_i);
        let stream = |k: u64| RationalInterval::new(-pow2_neg(k as u32), pow2_neg(k as u32)).unwrap();
        let chain = chain_from_directed(&host, &stream, 1_000_000).prefix(4).unwrap();
        let widths: Vec<Rational> = chain.iter().map(|i| i.width().unwrap()).collect();
        assert!(widths.windows(2).all(|w| w[0] > w[1]), "{widths:?}");
    }

    #[test]
    fn chain_inside_stays_in_stream() {
        let host = lambda2();
        let stream = approach_top;
        let chain = chain_inside_directed(&host, &stream, 100_000).prefix(10).unwrap();
        for p in &chain {
            assert!((0..200).any(|k| &approach_top(k) == p));
        }
    }

    #[test]
    fn order_dense_chain_towards_top() {
        let host = lambda2();
        let chain = order_dense_chain(&host, MajorizationPoint::bottom(2), MajorizationPoint::top(2), 10_000)
            .prefix(10)
            .unwrap();
        let s1: Vec<Rational> = chain.iter().map(|p| p.partial_sum(1)).collect();
        assert!(s1[0] > Rational::new(1.into(), 2.into()));
        assert!(s1.windows(2).all(|w| w[0] < w[1]));
        assert!(s1.iter().all(|s| s < &int(1)));
    }

    #[test]
    fn finite_helpers() {
        let p = FinitePoset::chain(4);
        let all = ElementSubset::full(4);
        let split = classify_trivial(&p, &all, 15).unwrap();
        assert!(split.nontrivial.is_empty());
        assert_eq!(split.trivial, all);
        assert_eq!(theorem1_q_finite(&p, &all, 15).unwrap(), all);
        assert_eq!(chain_inside_finite(&p, &ElementSubset::from_indices([3, 1, 2])), Some(vec![1, 2, 3]));
        let r = theorem1_check(&p, 15).unwrap();
        let e = r.get("q_equals_d").unwrap();
        assert_eq!(e.holds, Some(true));
        assert!(e.note.as_deref().unwrap().starts_with(crate::report::DEGENERATE_NOTE));
    }
}
