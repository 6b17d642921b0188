//! Scott and lower topologies on finite posets, lower semicontinuity,
//! multi-utilities and the checks built on them.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::domains::{approx_below, way_below_m, MajorizationPoint};
use crate::effective::{unpair, FiniteMap, NonNegativeRationals, Rationals};
use crate::poset::{
    compact_elements, is_debreu_dense, is_debreu_upper_dense, supremum, ElementSubset, ExhaustiveOracle, FinitePoset,
    PosetError, FAMILY_ENUMERATION_BOUND,
};
use crate::rational::{int, ratio, Rational};
use crate::report::{PosetReport, Witness};

/// Errors raised by the topology and multi-utility checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopologyError {
    /// A precondition of a theorem check does not hold; names the failing
    /// flag.
    PreconditionFailed(&'static str),
    /// The proposed subset is not a weak basis; names an element that is not
    /// the supremum of a directed subset of it.
    NotWeakBasis(String),
    /// A function table does not match the size of its poset.
    SizeMismatch {
        /// Expected number of values.
        expected: usize,
        /// Number supplied.
        found: usize,
    },
    /// An underlying poset error.
    Poset(PosetError),
}

impl From<PosetError> for TopologyError {
    fn from(e: PosetError) -> Self {
        TopologyError::Poset(e)
    }
}

impl fmt::Display for TopologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyError::PreconditionFailed(flag) => write!(f, "precondition failed: {flag}"),
            TopologyError::NotWeakBasis(x) => write!(f, "not a weak basis: {x} is not reached"),
            TopologyError::SizeMismatch { expected, found } => {
                write!(f, "expected {expected} values, found {found}")
            }
            TopologyError::Poset(e) => write!(f, "{e}"),
        }
    }
}

/// A topology on the elements of a finite poset, as the sorted list of its
/// open sets encoded as bit masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTopology {
    labels: Vec<String>,
    opens: Vec<u64>,
}

impl FiniteTopology {
    /// A topology from its open sets.
    pub fn new(labels: Vec<String>, opens: impl IntoIterator<Item = u64>) -> Self {
        let set: BTreeSet<u64> = opens.into_iter().collect();
        Self { labels, opens: set.into_iter().collect() }
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Whether there are no points.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Point labels.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Open sets, ascending by mask.
    pub fn opens(&self) -> &[u64] {
        &self.opens
    }

    /// Whether `mask` is open.
    pub fn is_open(&self, mask: u64) -> bool {
        self.opens.binary_search(&mask).is_ok()
    }

    /// Whether the family contains `∅` and the whole space and is closed
    /// under pairwise unions and intersections (hence, being finite, under
    /// arbitrary ones).
    pub fn is_topology(&self) -> bool {
        let full = full_mask(self.len());
        self.is_open(0)
            && self.is_open(full)
            && self
                .opens
                .iter()
                .all(|&a| self.opens.iter().all(|&b| self.is_open(a | b) && self.is_open(a & b)))
    }

    /// Whether every open set of `self` is open in `other`.
    pub fn is_coarser_than(&self, other: &FiniteTopology) -> bool {
        self.opens.iter().all(|&o| other.is_open(o))
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn is_upper(p: &FinitePoset, mask: u64) -> bool {
    (0..p.len()).filter(|&x| mask >> x & 1 == 1).all(|x| p.up_mask(x) & !mask == 0)
}

/// `σ(P)`: on a finite poset the Scott-open sets are exactly the upper sets.
///
/// ```
/// use ordbase_core::poset::FinitePoset;
/// use ordbase_core::topology::scott_topology;
/// let t = scott_topology(&FinitePoset::chain(2));
/// assert_eq!(t.opens(), &[0b00, 0b10, 0b11]);
/// ```
pub fn scott_topology(p: &FinitePoset) -> FiniteTopology {
    let opens = (0..=full_mask(p.len())).filter(|&m| is_upper(p, m));
    FiniteTopology::new(p.labels().to_vec(), opens)
}

/// `σ(P)` from its definition: upper sets `O` such that every directed `A`
/// with `⊔A ∈ O` meets `O`.
pub fn scott_topology_definitional(p: &FinitePoset, bound: usize) -> Result<FiniteTopology, PosetError> {
    let o = ExhaustiveOracle::new(p, bound)?;
    let opens = (0..=full_mask(p.len())).filter(|&m| {
        is_upper(p, m) && o.directed_subsets().iter().all(|&(a, sup)| m >> sup & 1 == 0 || a & m != 0)
    });
    Ok(FiniteTopology::new(p.labels().to_vec(), opens))
}

/// The specialization order of `T`: `x ≼ y` iff every open set containing
/// `x` contains `y`. Fails when `T` is not `T₀`.
pub fn order_from_topology(t: &FiniteTopology) -> Result<FinitePoset, PosetError> {
    FinitePoset::from_relation(t.labels().to_vec(), |x, y| {
        t.opens().iter().all(|&o| o >> x & 1 == 0 || o >> y & 1 == 1)
    })
}

/// The lower topology: closed sets are generated from the principal down
/// sets `d(x)` by finite unions and intersections; opens are their
/// complements.
pub fn lower_topology(p: &FinitePoset) -> FiniteTopology {
    let full = full_mask(p.len());
    let mut closed: BTreeSet<u64> = (0..p.len()).map(|x| p.down_mask(x)).collect();
    closed.insert(0);
    closed.insert(full);
    loop {
        let current: Vec<u64> = closed.iter().copied().collect();
        let before = closed.len();
        for &a in &current {
            for &b in &current {
                closed.insert(a | b);
                closed.insert(a & b);
            }
        }
        if closed.len() == before {
            break;
        }
    }
    FiniteTopology::new(p.labels().to_vec(), closed.into_iter().map(|c| full & !c))
}

/// Whether `u` is lower semicontinuous for `T`: every `u⁻¹((a, ∞))` is open.
/// Preimages only change at attained values, so it suffices to test the
/// sets `{x : u(x) ≥ v}` for attained `v`.
pub fn is_lsc(t: &FiniteTopology, u: &[Rational]) -> bool {
    u.iter().all(|v| {
        let mask = u.iter().enumerate().filter(|(_, w)| *w >= v).fold(0u64, |m, (x, _)| m | 1 << x);
        t.is_open(mask)
    })
}

/// A finite family of rational-valued functions on a finite poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiUtility {
    /// Function names.
    pub names: Vec<String>,
    /// `values[i][x]` is the value of function `i` at element `x`.
    pub values: Vec<Vec<Rational>>,
}

impl MultiUtility {
    /// A family from named value tables.
    pub fn new(functions: Vec<(String, Vec<Rational>)>) -> Self {
        let (names, values) = functions.into_iter().unzip();
        Self { names, values }
    }

    /// Number of functions.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Whether the family is empty.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn all_le(&self, x: usize, y: usize) -> bool {
        self.values.iter().all(|v| v[x] <= v[y])
    }
}

fn indicator(n: usize, mask: u64) -> Vec<Rational> {
    (0..n).map(|x| if mask >> x & 1 == 1 { Rational::one() } else { Rational::zero() }).collect()
}

/// `(u_x)_{x ∈ P}` with `u_x` the indicator of the complement of `d(x)`.
pub fn mu_from_downsets(p: &FinitePoset) -> MultiUtility {
    let full = full_mask(p.len());
    MultiUtility::new(
        (0..p.len())
            .map(|x| (format!("u_{}", p.label(x)), indicator(p.len(), full & !p.down_mask(x))))
            .collect(),
    )
}

/// `(v_b)_{b ∈ B}` with `v_b` the indicator of `↑b`, for a weak basis `B`.
/// On a finite poset `↟b = ↑b`, so the basis variant is the same family.
pub fn mu_from_weak_basis(p: &FinitePoset, b: &ElementSubset, bound: usize) -> Result<MultiUtility, TopologyError> {
    let o = ExhaustiveOracle::new(p, bound)?;
    if let Err(x) = o.weak_basis_witnesses(b.to_mask()) {
        return Err(TopologyError::NotWeakBasis(p.label(x).to_string()));
    }
    Ok(MultiUtility::new(
        b.iter().map(|x| (format!("v_{}", p.label(x)), indicator(p.len(), p.up_mask(x)))).collect(),
    ))
}

/// Indicators of every open set of `T`. For `T` the lower topology this is
/// the family built from a basis of `τ^l`.
pub fn mu_from_open_sets(t: &FiniteTopology) -> MultiUtility {
    MultiUtility::new(
        t.opens().iter().map(|&o| (format!("open_{o:b}"), indicator(t.len(), o))).collect(),
    )
}

/// `2·[z ∉ d(x)] + h(z)/(H + 1)` for every `x`, where `h` is the height of an
/// element and `H` the maximum height. This is a strict monotone,
/// lower semicontinuous multi-utility on every finite poset.
pub fn strict_multi_utility(p: &FinitePoset) -> MultiUtility {
    let n = p.len();
    let mut height = alloc::vec![0i64; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| p.down_set(x).len());
    for &x in &order {
        height[x] = (0..n).filter(|&y| p.lt(y, x)).map(|y| height[y] + 1).max().unwrap_or(0);
    }
    let top = height.iter().copied().max().unwrap_or(0) + 1;
    MultiUtility::new(
        (0..n)
            .map(|x| {
                let values = (0..n)
                    .map(|z| {
                        let out = if p.leq(z, x) { 0 } else { 2 };
                        int(out) + ratio(height[z], top)
                    })
                    .collect();
                (format!("w_{}", p.label(x)), values)
            })
            .collect(),
    )
}

/// Flags computed by [`mu_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuFlags {
    /// `x ≼ y ⇔ ∀v, v(x) ≤ v(y)`.
    pub multi_utility: bool,
    /// `x ≺ y ⇒ ∀v, v(x) < v(y)`.
    pub strict: bool,
    /// Every function is lower semicontinuous for `σ(P)`.
    pub lsc: bool,
    /// First pair violating the biconditional.
    pub multi_utility_counter: Option<(usize, usize)>,
    /// First strict pair on which some function does not increase.
    pub strict_counter: Option<(usize, usize)>,
    /// First function that is not lower semicontinuous.
    pub lsc_counter: Option<usize>,
}

/// Evaluates the multi-utility, strictness and lsc flags of `V` on `P`.
pub fn mu_check(p: &FinitePoset, v: &MultiUtility) -> Result<MuFlags, TopologyError> {
    let n = p.len();
    if let Some(bad) = v.values.iter().find(|f| f.len() != n) {
        return Err(TopologyError::SizeMismatch { expected: n, found: bad.len() });
    }
    let pairs = || (0..n).flat_map(|x| (0..n).map(move |y| (x, y)));
    let multi_utility_counter = pairs().find(|&(x, y)| p.leq(x, y) != v.all_le(x, y));
    let strict_counter = pairs().find(|&(x, y)| p.lt(x, y) && v.values.iter().any(|f| f[x] >= f[y]));
    let scott = scott_topology(p);
    let lsc_counter = v.values.iter().position(|f| !is_lsc(&scott, f));
    Ok(MuFlags {
        multi_utility: multi_utility_counter.is_none(),
        strict: strict_counter.is_none(),
        lsc: lsc_counter.is_none(),
        multi_utility_counter,
        strict_counter,
        lsc_counter,
    })
}

/// Subsets to quantify over for "every basis": all of them when small,
/// otherwise just `P`.
fn candidate_masks(n: usize) -> Vec<u64> {
    if n <= FAMILY_ENUMERATION_BOUND {
        (0..=full_mask(n)).collect()
    } else {
        alloc::vec![full_mask(n)]
    }
}

/// Checks the conclusions that follow from a finite lsc strict monotone
/// multi-utility `V` on `P`:
///
/// * `strict_implies_way_below`: `x ≺ y ⇒ x ≪ y`;
/// * `continuous`: every `x` is the supremum of a directed subset of `↡x`;
/// * `bases_are_debreu_dense_and_upper_dense`;
/// * `omega_continuous_iff_compact_countable`, degenerate.
pub fn theorem4_check(p: &FinitePoset, v: &MultiUtility, bound: usize) -> Result<PosetReport, TopologyError> {
    let flags = mu_check(p, v)?;
    if !flags.multi_utility {
        return Err(TopologyError::PreconditionFailed("multi_utility"));
    }
    if !flags.strict {
        return Err(TopologyError::PreconditionFailed("strict"));
    }
    if !flags.lsc {
        return Err(TopologyError::PreconditionFailed("lsc"));
    }
    let o = ExhaustiveOracle::new(p, bound)?;
    let n = p.len();
    let mut r = PosetReport::new();

    let strict_gap = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).find(|&(x, y)| p.lt(x, y) && !o.way_below(x, y));
    r.theorem("strict_implies_way_below", strict_gap.is_none(), strict_gap.map_or(Witness::None, |pr| Witness::pair(p, pr)));

    let full = full_mask(n);
    let continuous = o.basis_witnesses(full);
    r.theorem(
        "continuous",
        continuous.is_ok(),
        match continuous {
            Ok(_) => Witness::None,
            Err(x) => Witness::Element(p.label(x).to_string()),
        },
    );

    let mut failure = None;
    let mut bases = 0;
    for b in candidate_masks(n) {
        if o.basis_witnesses(b).is_err() {
            continue;
        }
        bases += 1;
        let s = ElementSubset::from_mask(b);
        let dense = is_debreu_dense(p, &s);
        let upper = is_debreu_upper_dense(p, &s);
        if let Some(pair) = dense.counter.or(upper.counter) {
            failure = Some(Witness::counter(p, &s, pair));
            break;
        }
    }
    r.theorem(
        "bases_are_debreu_dense_and_upper_dense",
        failure.is_none(),
        failure.unwrap_or_else(|| Witness::Text(format!("{bases} bases checked"))),
    );

    let k = compact_elements(p);
    let omega_continuous = continuous.is_ok();
    r.degenerate(
        "omega_continuous_iff_compact_countable",
        omega_continuous,
        Witness::subset(p, &k),
        "P is finite, so K(P) is countable and P itself is a countable basis",
    );
    Ok(r)
}

/// A realized box of the `tₙ` construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TnWitness<T> {
    /// Code of the box in the enumeration of `T`.
    pub code: u64,
    /// Lower corner `q`.
    pub lower: Vec<Rational>,
    /// Upper corner `r`.
    pub upper: Vec<Rational>,
    /// An element `x` with `qᵢ < vᵢ(x) < rᵢ` for all `i`.
    pub element: T,
}

/// `code ↦ (c₀, …, c_{k−1})`, a bijection `ℕ → ℕᵏ` by iterated unpairing.
fn unpair_tuple(mut code: u64, k: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(k);
    for _ in 1..k {
        let (a, rest) = unpair(code);
        out.push(a);
        code = rest;
    }
    out.push(code);
    out
}

/// Whether `(q, r)` is a box of `T`: same dimension and `qᵢ < rᵢ` for all
/// `i`.
pub fn is_box(q: &[Rational], r: &[Rational]) -> bool {
    q.len() == r.len() && q.iter().zip(r).all(|(a, b)| a < b)
}

/// The box with code `code` in the enumeration of
/// `T = {(q, r) ∈ ℚᴺ × ℚᴺ : qᵢ < rᵢ}`.
///
/// The code is split into `2N` naturals by iterated unpairing; coordinate
/// `i` is `qᵢ = ρ(c₂ᵢ)` and `rᵢ = qᵢ + ρ₊(c₂ᵢ₊₁)` with `ρ` the enumeration of
/// [`Rationals`] and `ρ₊(c) = NonNegativeRationals(c + 1)` an enumeration
/// of the positive rationals. Every code decodes to a box, and every box has
/// exactly one code.
pub fn decode_box(code: u64, dim: usize) -> (Vec<Rational>, Vec<Rational>) {
    let parts = unpair_tuple(code, 2 * dim);
    let lower: Vec<Rational> = parts.iter().step_by(2).map(|&c| Rationals.decode(c)).collect();
    let upper = lower
        .iter()
        .zip(parts.iter().skip(1).step_by(2))
        .map(|(q, &c)| q + NonNegativeRationals.decode(c + 1))
        .collect();
    (lower, upper)
}

/// The sequence `(tₙ)`: walks the boxes of `T` in code order (see
/// [`decode_box`]), keeps those for which `realize` returns a witness, and
/// stops after `count` witnesses or `max_codes` codes.
pub fn tn_basis_construction<T, R>(dim: usize, realize: R, count: usize, max_codes: u64) -> Vec<TnWitness<T>>
where
    R: Fn(&[Rational], &[Rational]) -> Option<T>,
{
    let mut out = Vec::new();
    for code in 0..max_codes {
        if out.len() == count {
            break;
        }
        let (lower, upper) = decode_box(code, dim);
        debug_assert!(is_box(&lower, &upper));
        if let Some(element) = realize(&lower, &upper) {
            out.push(TnWitness { code, lower, upper, element });
        }
    }
    out
}

/// Realizability oracle for `Λ²` with `V = {s₁}`: the midpoint of
/// `(max(q, 1/2), min(r, 1))` when that interval is nonempty.
pub fn lambda2_s1_realizer(q: &[Rational], r: &[Rational]) -> Option<MajorizationPoint> {
    let lo = core::cmp::max(q[0].clone(), ratio(1, 2));
    let hi = core::cmp::min(r[0].clone(), Rational::one());
    if lo >= hi {
        return None;
    }
    let mid = (lo + hi) / int(2);
    let rest = Rational::one() - &mid;
    Some(MajorizationPoint::new(alloc::vec![mid, rest]).expect("midpoint lies in the simplex"))
}

/// Checks that `(s_k)_{k<n}` is lower semicontinuous on `Λⁿ` at sampled
/// points: for each `(p, k, r)` with `r < s_k(p)` it exhibits `q ≪ p` with
/// `s_k(q) > r`, so that `p ∈ ↟q ⊆ s_k⁻¹((r, ∞))`. For `r < k/n` the
/// witness is `⊥`; for `r ≥ 1` the preimage is empty.
pub fn verify_si_mu_lsc(samples: &[(MajorizationPoint, usize, Rational)]) -> PosetReport {
    let mut r = PosetReport::new();
    for (i, (p, k, thr)) in samples.iter().enumerate() {
        let name = format!("s{k}_lsc_sample_{i}");
        let n = p.dim();
        if *thr >= Rational::one() {
            r.theorem(&name, true, Witness::Text(String::from("empty preimage")));
            continue;
        }
        let sk = p.partial_sum(*k);
        if *thr >= sk {
            r.theorem(&name, true, Witness::Text(format!("{p} is outside the preimage")));
            continue;
        }
        if *thr < ratio(*k as i64, n as i64) {
            let bottom = MajorizationPoint::bottom(n);
            let ok = way_below_m(&bottom, p).unwrap_or(false) && bottom.partial_sum(*k) > *thr;
            r.theorem(&name, ok, Witness::Text(format!("{bottom}")));
            continue;
        }
        let eps = &sk - thr;
        match approx_below(p, &eps) {
            Ok(q) => {
                let ok = way_below_m(&q, p).unwrap_or(false) && q.partial_sum(*k) > *thr;
                r.theorem(&name, ok, Witness::Text(format!("{q}")));
            }
            Err(e) => r.theorem(&name, false, Witness::Text(e.to_string())),
        }
    }
    r
}

/// A map between the elements of two finite posets, as a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneMap {
    /// `table[x]` is the image of `x`.
    pub table: Vec<usize>,
}

impl MonotoneMap {
    /// Whether `x ≼ y ⇒ f(x) ≼ f(y)`.
    pub fn is_monotone(&self, src: &FinitePoset, tgt: &FinitePoset) -> bool {
        (0..src.len()).all(|x| (0..src.len()).all(|y| !src.leq(x, y) || tgt.leq(self.table[x], self.table[y])))
    }

    fn preserves_sups(&self, tgt: &FinitePoset, sets: impl Iterator<Item = (u64, usize)>) -> bool {
        sets.into_iter().all(|(a, sup)| {
            let image = ElementSubset::from_indices(ElementSubset::from_mask(a).iter().map(|x| self.table[x]));
            supremum(tgt, &image) == Some(self.table[sup])
        })
    }
}

/// Compares, for a map between finite posets, monotonicity, preservation of
/// suprema of increasing sequences and preservation of directed suprema.
///
/// On finite posets increasing sequences are eventually constant, so the
/// sequence and directed forms coincide with monotonicity; the report
/// records all three as properties, the finite form of the equivalence as a
/// theorem and the general form as degenerate.
pub fn theorem3_check(src: &FinitePoset, tgt: &FinitePoset, f: &MonotoneMap, bound: usize) -> Result<PosetReport, TopologyError> {
    if f.table.len() != src.len() {
        return Err(TopologyError::SizeMismatch { expected: src.len(), found: f.table.len() });
    }
    if f.table.iter().any(|&y| y >= tgt.len()) {
        return Err(TopologyError::PreconditionFailed("map into the target"));
    }
    let o = ExhaustiveOracle::new(src, bound)?;
    let monotone = f.is_monotone(src, tgt);
    let directed = f.preserves_sups(tgt, o.directed_subsets().iter().copied());
    let chains = o
        .directed_subsets()
        .iter()
        .copied()
        .filter(|&(a, _)| src.is_chain(&ElementSubset::from_mask(a)));
    let sequential = monotone && f.preserves_sups(tgt, chains);
    let mut r = PosetReport::new();
    r.property("monotone", monotone, Witness::None);
    r.property("sequentially_continuous", sequential, Witness::None);
    r.property("scott_continuous", directed, Witness::None);
    r.theorem("monotone_iff_scott_continuous", monotone == directed, Witness::None);
    r.degenerate(
        "sequential_iff_scott_continuous",
        sequential == directed,
        Witness::None,
        "increasing sequences in a finite poset are eventually constant",
    );
    Ok(r)
}

/// For a finite (hence Debreu separable) poset, compares "every directed set
/// has a supremum" with "every increasing sequence has a supremum". Both
/// hold on every finite poset.
pub fn prop12_check(p: &FinitePoset, bound: usize) -> Result<PosetReport, TopologyError> {
    if p.len() > bound {
        return Err(PosetError::SizeLimit { size: p.len(), bound }.into());
    }
    let mut directed_ok = true;
    let mut chains_ok = true;
    for mask in 1..=full_mask(p.len()) {
        let a = ElementSubset::from_mask(mask);
        if !crate::poset::is_directed(p, &a) {
            continue;
        }
        let has_sup = supremum(p, &a).is_some();
        directed_ok &= has_sup;
        if p.is_chain(&a) {
            chains_ok &= has_sup;
        }
    }
    let mut r = PosetReport::new();
    r.degenerate(
        "directed_complete_iff_sequences_have_sups",
        directed_ok == chains_ok && directed_ok,
        Witness::None,
        "every directed subset of a finite poset contains its supremum",
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_topologies() {
        let p = FinitePoset::chain(3);
        let s = scott_topology(&p);
        assert_eq!(s.opens(), &[0b000, 0b100, 0b110, 0b111]);
        assert_eq!(s, scott_topology_definitional(&p, 15).unwrap());
        let l = lower_topology(&p);
        assert_eq!(l, s);
        assert!(s.is_topology());
        assert_eq!(order_from_topology(&s).unwrap(), p);
    }

    #[test]
    fn antichain_topologies() {
        let p = FinitePoset::antichain(3);
        assert_eq!(scott_topology(&p).opens().len(), 8);
        assert_eq!(lower_topology(&p).opens().len(), 8);
    }

    #[test]
    fn lsc_examples() {
        let t = scott_topology(&FinitePoset::chain(2));
        assert!(is_lsc(&t, &[int(0), int(1)]));
        assert!(!is_lsc(&t, &[int(1), int(0)]));
    }

    #[test]
    fn empty_family_is_not_a_multi_utility_on_a_chain() {
        let p = FinitePoset::chain(2);
        let flags = mu_check(&p, &MultiUtility::new(Vec::new())).unwrap();
        assert!(!flags.multi_utility);
        assert_eq!(flags.multi_utility_counter, Some((1, 0)));
    }

    #[test]
    fn identity_and_negation_on_an_antichain() {
        let p = FinitePoset::antichain(3);
        let id: Vec<Rational> = (0..3).map(int).collect();
        let neg: Vec<Rational> = (0..3).map(|i| -int(i)).collect();
        let v = MultiUtility::new(alloc::vec![(String::from("id"), id), (String::from("neg"), neg)]);
        let flags = mu_check(&p, &v).unwrap();
        assert!(flags.multi_utility && flags.strict && flags.lsc);
    }

    #[test]
    fn theorem4_precondition() {
        let p = FinitePoset::chain(2);
        let constant = MultiUtility::new(alloc::vec![(String::from("c"), alloc::vec![int(0), int(0)])]);
        assert!(matches!(theorem4_check(&p, &constant, 15), Err(TopologyError::PreconditionFailed(_))));
        let height = MultiUtility::new(alloc::vec![(String::from("h"), alloc::vec![int(0), int(1)])]);
        assert!(theorem4_check(&p, &height, 15).unwrap().all_pass());
    }

    #[test]
    fn si_lsc_examples() {
        let p = MajorizationPoint::new(alloc::vec![ratio(1, 2), ratio(3, 10), ratio(1, 5)]).unwrap();
        let r = verify_si_mu_lsc(&[(p.clone(), 1, ratio(45, 100)), (p.clone(), 2, ratio(1, 2)), (p, 1, int(1))]);
        assert!(r.all_pass(), "{r:?}");
    }

    #[test]
    fn tn_boxes_contain_their_witness() {
        let ts = tn_basis_construction(1, lambda2_s1_realizer, 50, 100_000);
        assert_eq!(ts.len(), 50);
        for t in &ts {
            let s = t.element.partial_sum(1);
            assert!(t.lower[0] < s && s < t.upper[0]);
        }
    }
}
