//! Finite partial orders with brute-force implementations of the
//! order-theoretic notions used throughout the crate.
//!
//! A [`FinitePoset`] stores its order as a dense boolean table obtained by
//! reflexive-transitive closure of the declared cover pairs. The strict order
//! `≺` and incomparability `⋈` are derived from that table on demand.
//!
//! Exhaustive searches over subsets (directed sets, weak bases, bases) run
//! through [`ExhaustiveOracle`], which enumerates all `2^n` subsets once and
//! is therefore capped by a configurable size bound.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Default cap on `|P|` for exhaustive subset enumeration.
pub const DEFAULT_EXHAUSTIVE_BOUND: usize = 15;

/// Largest poset size for which families of subsets (all weak bases, all
/// bases, all Debreu dense subsets) are enumerated in full.
pub const FAMILY_ENUMERATION_BOUND: usize = 12;

/// Errors raised while building or exhaustively searching a poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetError {
    /// Two distinct elements end up below each other after closure.
    AntisymmetryViolation {
        /// First element of the cycle.
        a: String,
        /// Second element of the cycle.
        b: String,
    },
    /// A cover pair or query mentions an undeclared element.
    UnknownElement(String),
    /// An element label is declared twice.
    DuplicateElement(String),
    /// A relation given as a table is not reflexive at this element.
    NotReflexive(String),
    /// A relation given as a table is not transitive on this triple.
    NotTransitive {
        /// `x` with `x ≼ y`.
        x: String,
        /// `y` with `y ≼ z`.
        y: String,
        /// `z` with `¬(x ≼ z)`.
        z: String,
    },
    /// The poset is too large for exhaustive subset enumeration.
    SizeLimit {
        /// Size of the poset.
        size: usize,
        /// Configured bound.
        bound: usize,
    },
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::AntisymmetryViolation { a, b } => {
                write!(f, "antisymmetry violation: {a} and {b} are mutually below each other")
            }
            PosetError::UnknownElement(e) => write!(f, "unknown element {e:?}"),
            PosetError::DuplicateElement(e) => write!(f, "element {e:?} declared twice"),
            PosetError::NotReflexive(e) => write!(f, "relation is not reflexive at {e:?}"),
            PosetError::NotTransitive { x, y, z } => {
                write!(f, "relation is not transitive: {x} ≼ {y} ≼ {z} but not {x} ≼ {z}")
            }
            PosetError::SizeLimit { size, bound } => write!(
                f,
                "poset has {size} elements, above the exhaustive-enumeration bound {bound}"
            ),
        }
    }
}

/// A set of element indices into a host poset, kept sorted and free of
/// duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSubset {
    members: Vec<usize>,
}

impl ElementSubset {
    /// The empty subset.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a subset from arbitrary indices, sorting and deduplicating.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut members: Vec<usize> = indices.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self { members }
    }

    /// Builds a subset from a bit mask (bit `i` set means index `i` is in).
    pub fn from_mask(mask: u64) -> Self {
        Self { members: mask_indices(mask).collect() }
    }

    /// The full subset `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        Self { members: (0..n).collect() }
    }

    /// Bit-mask form. Only valid when every member is below 64.
    pub fn to_mask(&self) -> u64 {
        self.members.iter().fold(0u64, |m, &i| m | (1u64 << i))
    }

    /// Whether `i` is a member.
    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Whether the subset is empty.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    /// Members as a slice.
    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    /// Union with another subset.
    pub fn union(&self, other: &ElementSubset) -> ElementSubset {
        Self::from_indices(self.iter().chain(other.iter()))
    }

    /// Whether every member of `self` is a member of `other`.
    pub fn is_subset_of(&self, other: &ElementSubset) -> bool {
        self.iter().all(|i| other.contains(i))
    }
}

impl FromIterator<usize> for ElementSubset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self::from_indices(iter)
    }
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn mask_indices(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// A finite partial order over labelled elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    leq: Vec<bool>,
}

impl FinitePoset {
    /// Builds the closure of labelled cover pairs `(a, b)` meaning `a ≼ b`.
    ///
    /// ```
    /// use ordbase_core::poset::FinitePoset;
    /// let p = FinitePoset::from_covers(
    ///     ["a", "b", "c"],
    ///     [("a", "b"), ("b", "c")],
    /// ).unwrap();
    /// assert!(p.leq(p.index_of("a").unwrap(), p.index_of("c").unwrap()));
    /// ```
    pub fn from_covers<L, S, C, T>(elements: L, covers: C) -> Result<Self, PosetError>
    where
        L: IntoIterator<Item = S>,
        S: AsRef<str>,
        C: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        let labels: Vec<String> = elements.into_iter().map(|s| s.as_ref().to_string()).collect();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(PosetError::DuplicateElement(l.clone()));
            }
        }
        let find = |s: &str| {
            labels
                .iter()
                .position(|l| l == s)
                .ok_or_else(|| PosetError::UnknownElement(s.to_string()))
        };
        let mut pairs = Vec::new();
        for (a, b) in covers {
            pairs.push((find(a.as_ref())?, find(b.as_ref())?));
        }
        Self::from_index_covers(labels, &pairs)
    }

    /// Builds the closure of index cover pairs `(a, b)` meaning `a ≼ b`.
    pub fn from_index_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self, PosetError> {
        let n = labels.len();
        let mut leq = alloc::vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in covers {
            if a >= n {
                return Err(PosetError::UnknownElement(a.to_string()));
            }
            if b >= n {
                return Err(PosetError::UnknownElement(b.to_string()));
            }
            leq[a * n + b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        let poset = Self { labels, leq };
        poset.check_antisymmetry()?;
        Ok(poset)
    }

    /// Builds a poset from a relation given as a predicate, checking all
    /// three order axioms without taking any closure.
    pub fn from_relation<F>(labels: Vec<String>, rel: F) -> Result<Self, PosetError>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = labels.len();
        let mut leq = alloc::vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = rel(i, j);
            }
        }
        let poset = Self { labels, leq };
        for i in 0..n {
            if !poset.leq(i, i) {
                return Err(PosetError::NotReflexive(poset.labels[i].clone()));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !poset.leq(x, y) {
                    continue;
                }
                for z in 0..n {
                    if poset.leq(y, z) && !poset.leq(x, z) {
                        return Err(PosetError::NotTransitive {
                            x: poset.labels[x].clone(),
                            y: poset.labels[y].clone(),
                            z: poset.labels[z].clone(),
                        });
                    }
                }
            }
        }
        poset.check_antisymmetry()?;
        Ok(poset)
    }

    /// Elements labelled `"0"`, `"1"`, … ordered by `rel` (axioms checked).
    pub fn from_indexed_relation<F>(n: usize, rel: F) -> Result<Self, PosetError>
    where
        F: Fn(usize, usize) -> bool,
    {
        Self::from_relation(numeric_labels(n), rel)
    }

    /// The chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Self {
        Self::from_indexed_relation(n, |i, j| i <= j).expect("a chain is a partial order")
    }

    /// The discrete order on `n` elements.
    pub fn antichain(n: usize) -> Self {
        Self::from_indexed_relation(n, |i, j| i == j).expect("equality is a partial order")
    }

    fn check_antisymmetry(&self) -> Result<(), PosetError> {
        let n = self.len();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.leq(i, j) && self.leq(j, i) {
                    return Err(PosetError::AntisymmetryViolation {
                        a: self.labels[i].clone(),
                        b: self.labels[j].clone(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Whether the poset has no elements.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Element labels in declaration order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label of element `i`.
    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Index of the element with this label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `x ≼ y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.len() + y]
    }

    /// `x ≺ y`, that is `x ≼ y` and `x ≠ y`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// `x ⋈ y`: neither `x ≼ y` nor `y ≼ x`.
    pub fn incomparable(&self, x: usize, y: usize) -> bool {
        !self.leq(x, y) && !self.leq(y, x)
    }

    /// `x ≼ y` or `y ≼ x`.
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        !self.incomparable(x, y)
    }

    /// `↑x = { y : x ≼ y }`.
    pub fn up_set(&self, x: usize) -> ElementSubset {
        (0..self.len()).filter(|&y| self.leq(x, y)).collect()
    }

    /// `d(x) = ↓x = { y : y ≼ x }`.
    pub fn down_set(&self, x: usize) -> ElementSubset {
        (0..self.len()).filter(|&y| self.leq(y, x)).collect()
    }

    /// Bit mask of `↑x`. Requires `len() <= 64`.
    pub fn up_mask(&self, x: usize) -> u64 {
        (0..self.len()).filter(|&y| self.leq(x, y)).fold(0, |m, y| m | (1 << y))
    }

    /// Bit mask of `↓x`. Requires `len() <= 64`.
    pub fn down_mask(&self, x: usize) -> u64 {
        (0..self.len()).filter(|&y| self.leq(y, x)).fold(0, |m, y| m | (1 << y))
    }

    /// The Hasse diagram: pairs `(x, y)` with `x ≺ y` and nothing strictly
    /// between.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        jumps(self)
    }

    /// Whether `A` is a chain.
    pub fn is_chain(&self, a: &ElementSubset) -> bool {
        let m = a.as_slice();
        m.iter()
            .enumerate()
            .all(|(i, &x)| m[i + 1..].iter().all(|&y| self.comparable(x, y)))
    }
}

/// Labels `"0"`, `"1"`, … `"n-1"`.
pub fn numeric_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Whether `A` is directed: nonempty, and every pair of members has an upper
/// bound inside `A`.
///
/// The empty set is not directed.
pub fn is_directed(p: &FinitePoset, a: &ElementSubset) -> bool {
    if a.is_empty() {
        return false;
    }
    let m = a.as_slice();
    m.iter().all(|&x| {
        m.iter()
            .all(|&y| m.iter().any(|&c| p.leq(x, c) && p.leq(y, c)))
    })
}

/// The least upper bound of `A` in `P`, if one exists.
///
/// For the empty set this is the least element of `P`, if any.
pub fn supremum(p: &FinitePoset, a: &ElementSubset) -> Option<usize> {
    let uppers: Vec<usize> = (0..p.len())
        .filter(|&u| a.iter().all(|x| p.leq(x, u)))
        .collect();
    uppers
        .iter()
        .copied()
        .find(|&u| uppers.iter().all(|&v| p.leq(u, v)))
}

/// Precomputed exhaustive data for subset-quantified questions: every
/// directed subset together with its supremum, and the brute-force
/// way-below table.
#[derive(Clone, Debug)]
pub struct ExhaustiveOracle<'a> {
    poset: &'a FinitePoset,
    up: Vec<u64>,
    directed: Vec<(u64, usize)>,
    by_sup: Vec<Vec<u64>>,
    way_below: Vec<bool>,
}

impl<'a> ExhaustiveOracle<'a> {
    /// Enumerates all `2^n` subsets of `P`, keeping the directed ones.
    pub fn new(poset: &'a FinitePoset, bound: usize) -> Result<Self, PosetError> {
        let n = poset.len();
        let bound = bound.min(30);
        if n > bound {
            return Err(PosetError::SizeLimit { size: n, bound });
        }
        let up: Vec<u64> = (0..n).map(|x| poset.up_mask(x)).collect();
        let mut directed = Vec::new();
        let mut by_sup = alloc::vec![Vec::new(); n];
        for mask in 1u64..(1u64 << n) {
            if !directed_mask(&up, mask) {
                continue;
            }
            let uppers = mask_indices(mask).fold(u64::MAX >> (64 - n), |acc, a| acc & up[a]);
            let sup = mask_indices(uppers).find(|&u| uppers & !up[u] == 0);
            let sup = sup.expect("a nonempty directed subset of a finite poset has a supremum");
            directed.push((mask, sup));
            by_sup[sup].push(mask);
        }
        let mut way_below = alloc::vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                way_below[x * n + y] = directed
                    .iter()
                    .filter(|&&(_, s)| poset.leq(y, s))
                    .all(|&(mask, _)| mask & up[x] != 0);
            }
        }
        Ok(Self { poset, up, directed, by_sup, way_below })
    }

    /// The host poset.
    pub fn poset(&self) -> &FinitePoset {
        self.poset
    }

    /// All directed subsets as `(mask, supremum)` pairs, in mask order.
    pub fn directed_subsets(&self) -> &[(u64, usize)] {
        &self.directed
    }

    /// Directed subsets whose supremum is `x`, in mask order.
    pub fn directed_with_sup(&self, x: usize) -> &[u64] {
        &self.by_sup[x]
    }

    /// Brute-force `x ≪ y`: every directed `A` with `y ≼ ⊔A` meets `↑x`.
    pub fn way_below(&self, x: usize, y: usize) -> bool {
        self.way_below[x * self.poset.len() + y]
    }

    /// Whether the subset given as a mask is directed.
    pub fn is_directed_mask(&self, mask: u64) -> bool {
        directed_mask(&self.up, mask)
    }

    /// `↡x = { y : y ≪ x }` as a mask.
    pub fn way_below_mask(&self, x: usize) -> u64 {
        (0..self.poset.len())
            .filter(|&y| self.way_below(y, x))
            .fold(0, |m, y| m | (1 << y))
    }

    /// Whether every element is the supremum of a directed subset of `B`;
    /// on success, the first witness `B_x` (in mask order) for each `x`.
    pub fn weak_basis_witnesses(&self, b: u64) -> Result<Vec<u64>, usize> {
        self.witnesses(|_| b)
    }

    /// Whether every element `x` is the supremum of a directed subset of
    /// `↡x ∩ B`; on success, the first witness for each `x`.
    pub fn basis_witnesses(&self, b: u64) -> Result<Vec<u64>, usize> {
        self.witnesses(|x| b & self.way_below_mask(x))
    }

    fn witnesses<F: Fn(usize) -> u64>(&self, allowed: F) -> Result<Vec<u64>, usize> {
        (0..self.poset.len())
            .map(|x| {
                let allow = allowed(x);
                self.by_sup[x]
                    .iter()
                    .copied()
                    .find(|&m| m & !allow == 0)
                    .ok_or(x)
            })
            .collect()
    }

    /// Whether some directed `A ⊆ P ∖ {x}` has `⊔A = x`.
    pub fn reachable_without(&self, x: usize) -> bool {
        self.by_sup[x].iter().any(|&m| m & (1 << x) == 0)
    }

    /// Both conditional-connectedness checks: bounded pairs comparable, and
    /// every directed subset a chain. Returns `(pair_check, directed_check)`.
    pub fn conditional_connectedness(&self) -> (bool, bool) {
        let p = self.poset;
        let pair = bounded_incomparable_pair(p).is_none();
        let chains = self
            .directed
            .iter()
            .all(|&(mask, _)| p.is_chain(&ElementSubset::from_mask(mask)));
        (pair, chains)
    }
}

fn directed_mask(up: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    mask_indices(mask).all(|a| mask_indices(mask).all(|b| up[a] & up[b] & mask != 0))
}

/// Brute-force `x ≪ y` by enumerating all directed subsets of `P`.
///
/// ```
/// use ordbase_core::poset::{way_below_bruteforce, FinitePoset, DEFAULT_EXHAUSTIVE_BOUND};
/// let p = FinitePoset::chain(3);
/// assert!(way_below_bruteforce(&p, 0, 2, DEFAULT_EXHAUSTIVE_BOUND).unwrap());
/// assert!(!way_below_bruteforce(&p, 2, 0, DEFAULT_EXHAUSTIVE_BOUND).unwrap());
/// ```
pub fn way_below_bruteforce(p: &FinitePoset, x: usize, y: usize, bound: usize) -> Result<bool, PosetError> {
    Ok(ExhaustiveOracle::new(p, bound)?.way_below(x, y))
}

/// `x ≪ y` on a finite poset. Every directed subset contains its supremum,
/// so this coincides with `x ≼ y`; [`way_below_bruteforce`] is the
/// independent check.
pub fn way_below(p: &FinitePoset, x: usize, y: usize) -> bool {
    p.leq(x, y)
}

/// `K(P) = { x : x ≪ x }`, by brute force when `|P|` is within the default
/// bound and through [`way_below`] otherwise.
pub fn compact_elements(p: &FinitePoset) -> ElementSubset {
    match ExhaustiveOracle::new(p, DEFAULT_EXHAUSTIVE_BOUND) {
        Ok(o) => (0..p.len()).filter(|&x| o.way_below(x, x)).collect(),
        Err(_) => (0..p.len()).filter(|&x| way_below(p, x, x)).collect(),
    }
}

/// `min(P)`: elements with nothing strictly below them.
pub fn min_elements(p: &FinitePoset) -> ElementSubset {
    (0..p.len())
        .filter(|&x| !(0..p.len()).any(|y| p.lt(y, x)))
        .collect()
}

/// The witness `v_x ≺ x` dominating every element strictly below `x`, if
/// `x` is isolated. Ties cannot occur: such a `v_x` is unique.
pub fn isolated_witness(p: &FinitePoset, x: usize) -> Option<usize> {
    let below: Vec<usize> = (0..p.len()).filter(|&z| p.lt(z, x)).collect();
    below
        .iter()
        .copied()
        .find(|&v| below.iter().all(|&z| p.leq(z, v)))
}

/// `I(P)`: elements with an isolating witness `v_x`.
pub fn isolated_elements(p: &FinitePoset) -> ElementSubset {
    (0..p.len()).filter(|&x| isolated_witness(p, x).is_some()).collect()
}

/// Jumps: pairs `x ≺ y` with no element strictly between them.
pub fn jumps(p: &FinitePoset) -> Vec<(usize, usize)> {
    let n = p.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if p.lt(x, y) && !(0..n).any(|z| p.lt(x, z) && p.lt(z, y)) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Elements `y` such that `(x, y)` is a jump.
pub fn immediate_successors(p: &FinitePoset, x: usize) -> ElementSubset {
    jumps(p)
        .into_iter()
        .filter(|&(a, _)| a == x)
        .map(|(_, b)| b)
        .collect()
}

/// Outcome of a density check: on failure, the first violating pair in
/// declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityCheck {
    /// Whether the property holds.
    pub holds: bool,
    /// The first pair `(x, y)` for which no suitable `d` exists.
    pub counter: Option<(usize, usize)>,
}

impl DensityCheck {
    fn from_counter(counter: Option<(usize, usize)>) -> Self {
        Self { holds: counter.is_none(), counter }
    }
}

fn first_pair<Q, W>(p: &FinitePoset, qualifies: Q, witnessed: W) -> Option<(usize, usize)>
where
    Q: Fn(usize, usize) -> bool,
    W: Fn(usize, usize) -> bool,
{
    let n = p.len();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| qualifies(x, y) && !witnessed(x, y))
}

/// Debreu density: for every `x ≺ y` some `d ∈ D` has `x ≼ d ≼ y`.
pub fn is_debreu_dense(p: &FinitePoset, d: &ElementSubset) -> DensityCheck {
    DensityCheck::from_counter(first_pair(
        p,
        |x, y| p.lt(x, y),
        |x, y| d.iter().any(|e| p.leq(x, e) && p.leq(e, y)),
    ))
}

/// Debreu upper density: for every `x ⋈ y` some `d ∈ D` has `x ⋈ d ≼ y`.
pub fn is_debreu_upper_dense(p: &FinitePoset, d: &ElementSubset) -> DensityCheck {
    DensityCheck::from_counter(first_pair(
        p,
        |x, y| p.incomparable(x, y),
        |x, y| d.iter().any(|e| p.incomparable(x, e) && p.leq(e, y)),
    ))
}

/// Order density: for every `x ≺ y` some `d ∈ D` has `x ≺ d ≺ y`.
pub fn is_order_dense(p: &FinitePoset, d: &ElementSubset) -> DensityCheck {
    DensityCheck::from_counter(first_pair(
        p,
        |x, y| p.lt(x, y),
        |x, y| d.iter().any(|e| p.lt(x, e) && p.lt(e, y)),
    ))
}

/// The first incomparable pair with a common upper bound, if any.
pub fn bounded_incomparable_pair(p: &FinitePoset) -> Option<(usize, usize)> {
    let n = p.len();
    (0..n)
        .flat_map(|x| ((x + 1)..n).map(move |y| (x, y)))
        .find(|&(x, y)| p.incomparable(x, y) && (0..n).any(|z| p.leq(x, z) && p.leq(y, z)))
}

/// Conditional connectedness: every pair with a common upper bound is
/// comparable.
///
/// When `|P|` is within the default exhaustive bound the equivalent form
/// "every directed subset is a chain" is evaluated too.
///
/// # Panics
/// Panics if the two characterizations disagree, which would indicate a bug
/// in the directed-subset enumeration.
pub fn is_conditionally_connected(p: &FinitePoset) -> bool {
    let pair = bounded_incomparable_pair(p).is_none();
    if let Ok(o) = ExhaustiveOracle::new(p, DEFAULT_EXHAUSTIVE_BOUND) {
        let (_, chains) = o.conditional_connectedness();
        assert_eq!(pair, chains, "conditional connectedness characterizations disagree");
    }
    pair
}

/// Outcome of a weak-basis or basis search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisCheck {
    /// Whether every element has a witness.
    pub holds: bool,
    /// The first element without a witness.
    pub failing: Option<usize>,
    /// `B_x` for each element, when `holds`.
    pub witnesses: Vec<ElementSubset>,
}

impl BasisCheck {
    fn from_result(r: Result<Vec<u64>, usize>) -> Self {
        match r {
            Ok(w) => Self {
                holds: true,
                failing: None,
                witnesses: w.into_iter().map(ElementSubset::from_mask).collect(),
            },
            Err(x) => Self { holds: false, failing: Some(x), witnesses: Vec::new() },
        }
    }
}

/// Whether `B` is a weak basis: each `x` is `⊔B_x` for a directed `B_x ⊆ B`.
pub fn is_weak_basis(p: &FinitePoset, b: &ElementSubset, bound: usize) -> Result<BasisCheck, PosetError> {
    let o = ExhaustiveOracle::new(p, bound)?;
    Ok(BasisCheck::from_result(o.weak_basis_witnesses(b.to_mask())))
}

/// Whether `B` is a basis: each `x` is `⊔B_x` for a directed `B_x ⊆ ↡x ∩ B`.
pub fn is_basis(p: &FinitePoset, b: &ElementSubset, bound: usize) -> Result<BasisCheck, PosetError> {
    let o = ExhaustiveOracle::new(p, bound)?;
    Ok(BasisCheck::from_result(o.basis_witnesses(b.to_mask())))
}

/// The pairwise way-below rule for conditionally connected posets:
/// `x ≪ y` iff `x ≺ y`, or `x = y` and no directed `A ⊆ P ∖ {x}` has
/// `⊔A = x`.
pub fn way_below_conditionally_connected(o: &ExhaustiveOracle<'_>, x: usize, y: usize) -> bool {
    o.poset().lt(x, y) || (x == y && !o.reachable_without(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> FinitePoset {
        FinitePoset::from_covers(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn closure_of_a_chain() {
        let p = abc();
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
    }

    #[test]
    fn two_cycle_is_rejected() {
        let e = FinitePoset::from_covers(["a", "b"], [("a", "b"), ("b", "a")]).unwrap_err();
        assert_eq!(e, PosetError::AntisymmetryViolation { a: "a".into(), b: "b".into() });
    }

    #[test]
    fn unknown_and_duplicate_elements() {
        assert_eq!(
            FinitePoset::from_covers(["a"], [("a", "z")]).unwrap_err(),
            PosetError::UnknownElement("z".into())
        );
        assert_eq!(
            FinitePoset::from_covers(["a", "a"], Vec::<(&str, &str)>::new()).unwrap_err(),
            PosetError::DuplicateElement("a".into())
        );
    }

    #[test]
    fn relation_axioms_are_checked() {
        assert!(matches!(
            FinitePoset::from_indexed_relation(2, |i, j| i < j),
            Err(PosetError::NotReflexive(_))
        ));
        assert!(matches!(
            FinitePoset::from_indexed_relation(3, |i, j| i == j || j == i + 1),
            Err(PosetError::NotTransitive { .. })
        ));
    }

    #[test]
    fn directed_and_supremum() {
        let p = abc();
        assert!(is_directed(&p, &ElementSubset::full(3)));
        assert!(!is_directed(&p, &ElementSubset::empty()));
        assert_eq!(supremum(&p, &ElementSubset::full(3)), Some(2));
        let v = FinitePoset::from_covers(["a", "b", "c", "d"], [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
            .unwrap();
        let ab = ElementSubset::from_indices([0, 1]);
        assert!(!is_directed(&v, &ab));
        assert_eq!(supremum(&v, &ab), None);
    }

    #[test]
    fn chain_structure() {
        let p = abc();
        assert_eq!(min_elements(&p).as_slice(), &[0]);
        assert_eq!(isolated_elements(&p).as_slice(), &[1, 2]);
        assert_eq!(isolated_witness(&p, 1), Some(0));
        assert_eq!(isolated_witness(&p, 2), Some(1));
        assert_eq!(jumps(&p), alloc::vec![(0, 1), (1, 2)]);
        assert_eq!(immediate_successors(&p, 0).as_slice(), &[1]);
        assert_eq!(compact_elements(&p), ElementSubset::full(3));
    }

    #[test]
    fn antichain_structure() {
        let p = FinitePoset::antichain(2);
        assert_eq!(min_elements(&p), ElementSubset::full(2));
        assert!(isolated_elements(&p).is_empty());
        assert!(jumps(&p).is_empty());
        assert!(is_conditionally_connected(&p));
    }

    #[test]
    fn density_on_three_chain() {
        let p = abc();
        let d = ElementSubset::from_indices([1]);
        assert!(is_debreu_dense(&p, &d).holds);
        let od = is_order_dense(&p, &d);
        assert_eq!(od.counter, Some((0, 1)));
        assert!(is_debreu_dense(&p, &ElementSubset::full(3)).holds);
    }

    #[test]
    fn weak_basis_must_be_everything() {
        let p = abc();
        let all = is_weak_basis(&p, &ElementSubset::full(3), DEFAULT_EXHAUSTIVE_BOUND).unwrap();
        assert!(all.holds);
        assert_eq!(all.witnesses[2], ElementSubset::from_indices([2]));
        let part = is_weak_basis(&p, &ElementSubset::from_indices([0, 2]), DEFAULT_EXHAUSTIVE_BOUND).unwrap();
        assert_eq!(part.failing, Some(1));
        assert!(is_basis(&p, &ElementSubset::full(3), DEFAULT_EXHAUSTIVE_BOUND).unwrap().holds);
    }

    #[test]
    fn size_limit_is_reported() {
        let p = FinitePoset::antichain(16);
        assert_eq!(
            way_below_bruteforce(&p, 0, 0, DEFAULT_EXHAUSTIVE_BOUND).unwrap_err(),
            PosetError::SizeLimit { size: 16, bound: 15 }
        );
        assert!(way_below(&p, 3, 3));
    }
}
