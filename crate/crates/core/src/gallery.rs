//! Finite truncations of the standard counterexamples, each with the
//! clauses that can be decided at truncation.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::density::verify_density_theorems;
use crate::domains::{leq_c, leq_m, MajorizationPoint, SigmaString};
use crate::poset::{compact_elements, is_debreu_dense, is_debreu_upper_dense, is_directed, ElementSubset, FinitePoset, DEFAULT_EXHAUSTIVE_BOUND};
use crate::rational::{int, ratio, Rational};
use crate::report::{PosetReport, Witness};
use crate::topology::{mu_check, theorem4_check, MultiUtility};

/// One gallery entry.
#[derive(Clone, Debug)]
pub struct GalleryInstance {
    /// Short identifier.
    pub name: &'static str,
    /// What the full, infinite example shows.
    pub claim: &'static str,
    /// The finite truncation.
    pub poset: FinitePoset,
    /// A multi-utility attached to the example, if any.
    pub multi_utility: Option<MultiUtility>,
    /// Clauses evaluated on the truncation.
    pub report: PosetReport,
    /// Which part of the claim rests on an uncountability argument and is
    /// therefore not checked here.
    pub not_checked: &'static str,
}

/// All gallery entries, in a fixed order.
pub fn gallery() -> Vec<GalleryInstance> {
    vec![two_blocks(), flat_strings(), flat_strings_compact(), discrete_antichain(), rational_below_irrational(), majorization_triangle()]
}

fn parse_grid(label: &str) -> Rational {
    crate::rational::parse_rational(label).expect("grid labels are rationals")
}

/// The six-point grid of `[0, 1] ∪ [2, 3]` with `x ≼ y` iff both lie in the
/// same block and `x ≤ y`, or `x + 2 ≤ y`.
pub fn two_blocks_poset() -> FinitePoset {
    let labels: Vec<String> = ["0", "1/2", "1", "2", "5/2", "3"].iter().map(|s| s.to_string()).collect();
    let values: Vec<Rational> = labels.iter().map(|l| parse_grid(l)).collect();
    let block = |v: &Rational| v >= &int(2);
    FinitePoset::from_relation(labels, |i, j| {
        let (x, y) = (&values[i], &values[j]);
        (block(x) == block(y) && x <= y) || x + int(2) <= *y
    })
    .expect("the two-block rule is a partial order")
}

fn two_blocks() -> GalleryInstance {
    let p = two_blocks_poset();
    let mut r = verify_density_theorems(&p).expect("six points are within the exhaustive bound");
    let lows = ["0", "1/2", "1"];
    let shifted = lows.iter().all(|x| {
        let y = format!("{}", parse_grid(x) + int(2));
        p.leq(p.index_of(x).unwrap(), p.index_of(&y).unwrap())
    });
    r.theorem("shift_by_two_is_above", shifted, Witness::Subset(lows.iter().map(|s| s.to_string()).collect()));
    let only_endpoints = lows.iter().all(|x| {
        let lo = p.index_of(x).unwrap();
        let hi = p.index_of(&format!("{}", parse_grid(x) + int(2))).unwrap();
        (0..p.len()).filter(|&d| p.leq(lo, d) && p.leq(d, hi)).eq([lo, hi])
    });
    r.theorem(
        "shift_pairs_have_only_endpoint_interpolants",
        only_endpoints,
        Witness::Text(String::from("x ≼ d ≼ x+2 forces d ∈ {x, x+2}")),
    );
    GalleryInstance {
        name: "two-blocks",
        claim: "a dcpo with a countable weak basis and no countable Debreu dense subset",
        poset: p,
        multi_utility: None,
        report: r,
        not_checked: "every Debreu dense subset meets {x, x+2} for each of the uncountably many x in [0,1]",
    }
}

/// Strings of length at most 2 over `{0, 1}` plus three infinite strings,
/// with `x ≼ y` iff `x = y`, or `x` is finite, `y` infinite and `x` a prefix
/// of `y`.
pub fn flat_strings_poset() -> FinitePoset {
    let finite = ["", "0", "1", "00", "01", "10", "11"];
    let mut items: Vec<(String, SigmaString)> = finite.iter().map(|s| (format!("\"{s}\""), SigmaString::binary(s))).collect();
    items.push((String::from("0^w"), SigmaString::periodic(2, vec![0])));
    items.push((String::from("(01)^w"), SigmaString::periodic(2, vec![0, 1])));
    items.push((String::from("(10)^w"), SigmaString::periodic(2, vec![1, 0])));
    let labels = items.iter().map(|(l, _)| l.clone()).collect();
    FinitePoset::from_relation(labels, |i, j| {
        let (x, y) = (&items[i].1, &items[j].1);
        i == j || (x.is_finite() && !y.is_finite() && leq_c(x, y, 0).expect("finite left side is decidable"))
    })
    .expect("the flat rule is a partial order")
}

fn finite_strings(p: &FinitePoset) -> ElementSubset {
    (0..p.len()).filter(|&i| p.label(i).starts_with('"')).collect()
}

fn flat_strings() -> GalleryInstance {
    let p = flat_strings_poset();
    let mut r = verify_density_theorems(&p).expect("ten points are within the exhaustive bound");
    let finite = finite_strings(&p);
    let flat = (0..p.len()).all(|x| {
        (0..p.len()).all(|y| !p.lt(x, y) || (finite.contains(x) && !finite.contains(y)))
    });
    r.theorem("strict_pairs_are_finite_below_infinite", flat, Witness::None);
    let a = ElementSubset::from_indices([p.index_of("\"0\"").unwrap(), p.index_of("\"01\"").unwrap()]);
    r.theorem("finite_pair_is_not_directed", !is_directed(&p, &a), Witness::subset(&p, &a));
    let dense = is_debreu_dense(&p, &finite);
    let upper = is_debreu_upper_dense(&p, &finite);
    r.theorem("finite_strings_debreu_dense", dense.holds, dense.counter.map_or(Witness::subset(&p, &finite), |c| Witness::pair(&p, c)));
    r.theorem("finite_strings_debreu_upper_dense", upper.holds, upper.counter.map_or(Witness::subset(&p, &finite), |c| Witness::pair(&p, c)));
    GalleryInstance {
        name: "flat-strings",
        claim: "a Debreu upper separable dcpo without a countable weak basis",
        poset: p,
        multi_utility: None,
        report: r,
        not_checked: "every weak basis contains all of the uncountably many infinite strings",
    }
}

fn flat_strings_compact() -> GalleryInstance {
    let p = flat_strings_poset();
    let mut r = PosetReport::new();
    let k = compact_elements(&p);
    r.theorem("every_element_compact", k.len() == p.len(), Witness::subset(&p, &k));
    let leq_is_way_below = (0..p.len()).all(|x| (0..p.len()).all(|y| !p.leq(x, y) || crate::poset::way_below_bruteforce(&p, x, y, DEFAULT_EXHAUSTIVE_BOUND).unwrap_or(false)));
    r.theorem("leq_implies_way_below", leq_is_way_below, Witness::None);
    GalleryInstance {
        name: "flat-strings-compact",
        claim: "a continuous Debreu upper separable dcpo where x ≼ y implies x ≪ y but K(P) is uncountable",
        poset: p,
        multi_utility: None,
        report: r,
        not_checked: "K(P) contains the uncountably many infinite strings",
    }
}

fn discrete_antichain() -> GalleryInstance {
    let values = [int(0), ratio(1, 4), ratio(1, 2), ratio(3, 4), int(1)];
    let labels: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    let p = FinitePoset::from_relation(labels, |i, j| i == j).expect("equality is a partial order");
    let v = MultiUtility::new(vec![
        (String::from("id"), values.to_vec()),
        (String::from("neg_id"), values.iter().map(|x| -x).collect()),
    ]);
    let mut r = PosetReport::new();
    let flags = mu_check(&p, &v).expect("tables match the poset");
    r.theorem("strict_lsc_multi_utility", flags.multi_utility && flags.strict && flags.lsc, Witness::None);
    match theorem4_check(&p, &v, DEFAULT_EXHAUSTIVE_BOUND) {
        Ok(t) => r.extend_prefixed("theorem4.", t),
        Err(e) => r.theorem("theorem4", false, Witness::Text(e.to_string())),
    }
    let full = ElementSubset::full(p.len());
    let proper_upper = (0..p.len()).any(|x| {
        let d: ElementSubset = (0..p.len()).filter(|&y| y != x).collect();
        is_debreu_upper_dense(&p, &d).holds
    });
    r.theorem("only_upper_dense_subset_is_everything", !proper_upper, Witness::subset(&p, &full));
    GalleryInstance {
        name: "discrete-antichain",
        claim: "a dcpo with a finite lsc strict monotone multi-utility, uncountable K(P) and no Debreu upper separability",
        poset: p,
        multi_utility: Some(v),
        report: r,
        not_checked: "the full example is [0,1] with equality, whose only Debreu upper dense subset is uncountable",
    }
}

fn rational_below_irrational() -> GalleryInstance {
    // Irrational points are represented by rationals with the same position
    // relative to every listed rational; only comparisons matter.
    let points: [(&str, Rational, bool); 7] = [
        ("0", int(0), true),
        ("1/4", ratio(1, 4), true),
        ("sqrt2/4", ratio(354, 1000), false),
        ("1/2", ratio(1, 2), true),
        ("sqrt2/2", ratio(707, 1000), false),
        ("3/4", ratio(3, 4), true),
        ("pi/4", ratio(785, 1000), false),
    ];
    let labels = points.iter().map(|(l, _, _)| l.to_string()).collect();
    let p = FinitePoset::from_relation(labels, |i, j| {
        let (_, x, xr) = &points[i];
        let (_, y, yr) = &points[j];
        i == j || (*xr && !*yr && x < y)
    })
    .expect("the rule is a partial order");
    let v1: Vec<Rational> = points.iter().map(|(_, x, _)| x.clone()).collect();
    let v2: Vec<Rational> = points.iter().map(|(_, x, rational)| if *rational { -x - int(1) } else { -x }).collect();
    let v = MultiUtility::new(vec![(String::from("v1"), v1), (String::from("v2"), v2)]);
    let mut r = PosetReport::new();
    let flags = mu_check(&p, &v).expect("tables match the poset");
    r.theorem("strict_lsc_multi_utility", flags.multi_utility && flags.strict && flags.lsc, Witness::None);
    let k = compact_elements(&p);
    r.theorem("every_element_compact", k.len() == p.len(), Witness::subset(&p, &k));
    let rationals: ElementSubset = (0..p.len()).filter(|&i| points[i].2).collect();
    let dense = is_debreu_dense(&p, &rationals);
    r.theorem("rationals_debreu_dense", dense.holds, dense.counter.map_or(Witness::subset(&p, &rationals), |c| Witness::pair(&p, c)));
    let upper = is_debreu_upper_dense(&p, &rationals);
    r.property("rationals_debreu_upper_dense", upper.holds, upper.counter.map_or(Witness::subset(&p, &rationals), |c| Witness::pair(&p, c)));
    GalleryInstance {
        name: "rational-below-irrational",
        claim: "a dcpo with a finite lsc strict monotone multi-utility, uncountable K(P) and the rationals Debreu dense",
        poset: p,
        multi_utility: Some(v),
        report: r,
        not_checked: "K(P) = [0,1] is uncountable; for irrationals x > y only y itself is below y and incomparable to x, so no countable set is Debreu upper dense",
    }
}

/// `⊥ = (1/3, 1/3, 1/3)`, `(0.6, 0.2, 0.2)`, `(0.5, 0.4, 0.1)` and
/// `(1, 0, 0)` under majorization.
pub fn majorization_triangle_poset() -> FinitePoset {
    let pts = [
        ("bottom", MajorizationPoint::bottom(3)),
        ("(3/5,1/5,1/5)", MajorizationPoint::new(vec![ratio(3, 5), ratio(1, 5), ratio(1, 5)]).unwrap()),
        ("(1/2,2/5,1/10)", MajorizationPoint::new(vec![ratio(1, 2), ratio(2, 5), ratio(1, 10)]).unwrap()),
        ("(1,0,0)", MajorizationPoint::top(3)),
    ];
    let labels = pts.iter().map(|(l, _)| l.to_string()).collect();
    FinitePoset::from_relation(labels, |i, j| leq_m(&pts[i].1, &pts[j].1).expect("same dimension"))
        .expect("majorization is a partial order")
}

fn majorization_triangle() -> GalleryInstance {
    let p = majorization_triangle_poset();
    let mut r = verify_density_theorems(&p).expect("four points are within the exhaustive bound");
    let a = p.index_of("(3/5,1/5,1/5)").unwrap();
    let b = p.index_of("(1/2,2/5,1/10)").unwrap();
    let top = p.index_of("(1,0,0)").unwrap();
    r.theorem(
        "bounded_incomparable_pair",
        p.incomparable(a, b) && p.leq(a, top) && p.leq(b, top),
        Witness::pair(&p, (a, b)),
    );
    GalleryInstance {
        name: "majorization-triangle",
        claim: "majorization for n ≥ 3 is not conditionally connected",
        poset: p,
        multi_utility: None,
        report: r,
        not_checked: "nothing: the failing pair is exhibited exactly",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_instance_passes() {
        let g = gallery();
        assert!(g.len() >= 4);
        for inst in &g {
            let fails: Vec<_> = inst.report.failures().collect();
            assert!(fails.is_empty(), "{}: {fails:?}", inst.name);
        }
    }

    #[test]
    fn two_blocks_rule() {
        let p = two_blocks_poset();
        let ix = |l: &str| p.index_of(l).unwrap();
        assert!(p.leq(ix("0"), ix("5/2")));
        assert!(p.leq(ix("1/2"), ix("5/2")));
        assert!(!p.leq(ix("1"), ix("5/2")));
    }

    #[test]
    fn rationals_miss_decreasing_irrational_pairs() {
        let inst = rational_below_irrational();
        let e = inst.report.get("rationals_debreu_upper_dense").unwrap();
        assert_eq!(e.holds, Some(false));
        let Witness::Pair(x, y) = &e.witness else { panic!("expected a pair, got {:?}", e.witness) };
        let p = &inst.poset;
        let (x, y) = (p.index_of(x).unwrap(), p.index_of(y).unwrap());
        assert!(p.incomparable(x, y));
        let irrational = ["sqrt2/4", "sqrt2/2", "pi/4"];
        assert!(irrational.contains(&p.label(x)) && irrational.contains(&p.label(y)));
    }

    #[test]
    fn triangle_is_not_conditionally_connected() {
        let p = majorization_triangle_poset();
        assert!(!crate::poset::is_conditionally_connected(&p));
    }
}
