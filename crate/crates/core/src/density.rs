//! Instance-level verification of the density theorems on a finite poset.
//!
//! Every clause produced here is a consequence of a theorem about dcpos,
//! evaluated by brute force on one finite instance. A failing theorem clause
//! therefore indicates a bug in the oracles, never a property of the input.

use alloc::format;
use alloc::vec::Vec;

use crate::poset::{
    is_debreu_dense, is_debreu_upper_dense, isolated_elements, isolated_witness, jumps, min_elements,
    way_below_conditionally_connected, ElementSubset, ExhaustiveOracle, FinitePoset, PosetError,
    DEFAULT_EXHAUSTIVE_BOUND, FAMILY_ENUMERATION_BOUND,
};
use crate::report::{labels_of, PosetReport, Witness};

/// Subsets to quantify over when a clause says "every subset with property X":
/// all of them up to [`FAMILY_ENUMERATION_BOUND`], otherwise only `P` itself.
fn candidate_subsets(n: usize) -> Vec<u64> {
    if n <= FAMILY_ENUMERATION_BOUND {
        (0..(1u64 << n)).collect()
    } else {
        alloc::vec![(1u64 << n) - 1]
    }
}

/// Runs every density-theorem clause on `P` with the default exhaustive
/// bound.
pub fn verify_density_theorems(p: &FinitePoset) -> Result<PosetReport, PosetError> {
    verify_density_theorems_with_bound(p, DEFAULT_EXHAUSTIVE_BOUND)
}

/// Runs every density-theorem clause on `P`.
///
/// Clauses, in order:
/// * `dcpo`: each directed subset contains its supremum;
/// * `way_below_equals_leq`: the brute-force `≪` equals `≼`;
/// * `weak_bases_are_debreu_upper_dense` and `weak_bases_separate_strict_pairs`;
/// * `minimal_elements_in_upper_dense_subsets` (when `|min(P)| ≥ 2`);
/// * `conditionally_connected` (a property of the instance), and when it
///   holds `compact_equals_isolated_union_min`,
///   `way_below_conditionally_connected_rule`, `jumps_biject_onto_isolated`,
///   `bases_are_debreu_dense` and `dense_union_compact_is_upper_dense`.
pub fn verify_density_theorems_with_bound(p: &FinitePoset, bound: usize) -> Result<PosetReport, PosetError> {
    let o = ExhaustiveOracle::new(p, bound)?;
    let n = p.len();
    let mut r = PosetReport::new();

    let bad_dcpo = o
        .directed_subsets()
        .iter()
        .find(|&&(mask, sup)| mask & (1 << sup) == 0);
    r.theorem(
        "dcpo",
        bad_dcpo.is_none(),
        match bad_dcpo {
            None => Witness::Text(format!("{} directed subsets, each containing its supremum", o.directed_subsets().len())),
            Some(&(mask, _)) => Witness::subset(p, &ElementSubset::from_mask(mask)),
        },
    );

    let wb_mismatch = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| o.way_below(x, y) != p.leq(x, y));
    r.theorem(
        "way_below_equals_leq",
        wb_mismatch.is_none(),
        wb_mismatch.map_or(Witness::None, |pr| Witness::pair(p, pr)),
    );

    let candidates = candidate_subsets(n);
    let weak_bases: Vec<ElementSubset> = candidates
        .iter()
        .filter(|&&b| o.weak_basis_witnesses(b).is_ok())
        .map(|&b| ElementSubset::from_mask(b))
        .collect();
    let family = Witness::Family(weak_bases.iter().map(|b| labels_of(p, b)).collect());

    let upper_failure = weak_bases
        .iter()
        .find_map(|b| is_debreu_upper_dense(p, b).counter.map(|c| (b, c)));
    r.theorem(
        "weak_bases_are_debreu_upper_dense",
        upper_failure.is_none(),
        upper_failure.map_or(family.clone(), |(b, c)| Witness::counter(p, b, c)),
    );

    let separation_failure = weak_bases.iter().find_map(|b| {
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| p.lt(x, y) && !b.iter().any(|e| p.leq(e, y) && !p.leq(e, x)))
            .map(|c| (b, c))
    });
    r.theorem(
        "weak_bases_separate_strict_pairs",
        separation_failure.is_none(),
        separation_failure.map_or(family, |(b, c)| Witness::counter(p, b, c)),
    );

    let minimal = min_elements(p);
    if minimal.len() >= 2 {
        let min_mask = minimal.to_mask();
        let miss = candidates
            .iter()
            .map(|&d| ElementSubset::from_mask(d))
            .find(|d| is_debreu_upper_dense(p, d).holds && d.to_mask() & min_mask != min_mask);
        r.theorem(
            "minimal_elements_in_upper_dense_subsets",
            miss.is_none(),
            miss.map_or_else(|| Witness::subset(p, &minimal), |d| Witness::subset(p, &d)),
        );
    } else {
        r.skipped(
            "minimal_elements_in_upper_dense_subsets",
            "needs at least two minimal elements",
        );
    }

    let (pair_check, chain_check) = o.conditional_connectedness();
    let cc = pair_check && chain_check;
    r.theorem(
        "conditional_connectedness_characterizations_agree",
        pair_check == chain_check,
        Witness::None,
    );
    r.property(
        "conditionally_connected",
        cc,
        crate::poset::bounded_incomparable_pair(p).map_or(Witness::None, |c| Witness::pair(p, c)),
    );

    const CC_CLAUSES: [&str; 5] = [
        "compact_equals_isolated_union_min",
        "way_below_conditionally_connected_rule",
        "jumps_biject_onto_isolated",
        "bases_are_debreu_dense",
        "dense_union_compact_is_upper_dense",
    ];
    if !cc {
        for c in CC_CLAUSES {
            r.skipped(c, "requires a conditionally connected poset");
        }
        return Ok(r);
    }

    let compact: ElementSubset = (0..n).filter(|&x| o.way_below(x, x)).collect();
    let isolated = isolated_elements(p);
    let iu = isolated.union(&minimal);
    r.theorem(
        "compact_equals_isolated_union_min",
        compact == iu,
        Witness::subset(p, &compact),
    );

    let rule_mismatch = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| way_below_conditionally_connected(&o, x, y) != o.way_below(x, y));
    r.theorem(
        "way_below_conditionally_connected_rule",
        rule_mismatch.is_none(),
        rule_mismatch.map_or(Witness::None, |pr| Witness::pair(p, pr)),
    );

    let js = jumps(p);
    let mut targets: Vec<usize> = js.iter().map(|&(_, y)| y).collect();
    targets.sort_unstable();
    let injective = targets.windows(2).all(|w| w[0] != w[1]);
    let onto = ElementSubset::from_indices(targets.iter().copied()) == isolated;
    let witnesses_match = js.iter().all(|&(x, y)| isolated_witness(p, y) == Some(x));
    r.theorem(
        "jumps_biject_onto_isolated",
        injective && onto && witnesses_match,
        Witness::Text(format!("{} jumps, {} isolated elements", js.len(), isolated.len())),
    );

    let bases: Vec<ElementSubset> = candidates
        .iter()
        .filter(|&&b| o.basis_witnesses(b).is_ok())
        .map(|&b| ElementSubset::from_mask(b))
        .collect();
    let basis_failure = bases
        .iter()
        .find_map(|b| is_debreu_dense(p, b).counter.map(|c| (b, c)));
    r.theorem(
        "bases_are_debreu_dense",
        basis_failure.is_none(),
        basis_failure.map_or_else(
            || Witness::Family(bases.iter().map(|b| labels_of(p, b)).collect()),
            |(b, c)| Witness::counter(p, b, c),
        ),
    );

    let mut dense_count = 0usize;
    let union_failure = candidates.iter().find_map(|&d| {
        let d = ElementSubset::from_mask(d);
        if !is_debreu_dense(p, &d).holds {
            return None;
        }
        dense_count += 1;
        let du = d.union(&compact);
        is_debreu_upper_dense(p, &du).counter.map(|c| (du, c))
    });
    r.theorem(
        "dense_union_compact_is_upper_dense",
        union_failure.is_none(),
        union_failure.map_or_else(
            || Witness::Text(format!("{dense_count} Debreu dense subsets checked")),
            |(d, c)| Witness::counter(p, &d, c),
        ),
    );
    Ok(r)
}

/// Smallest Debreu dense and smallest Debreu upper dense subsets of `P`,
/// found by exhaustive search (ties broken by lowest mask). Both clauses are
/// facts about the instance.
pub fn minimum_dense_subsets(p: &FinitePoset) -> Result<PosetReport, PosetError> {
    let n = p.len();
    if n > FAMILY_ENUMERATION_BOUND {
        return Err(PosetError::SizeLimit { size: n, bound: FAMILY_ENUMERATION_BOUND });
    }
    let smallest = |test: &dyn Fn(&ElementSubset) -> bool| {
        (0..(1u64 << n))
            .map(ElementSubset::from_mask)
            .filter(|d| test(d))
            .min_by_key(|d| (d.len(), d.to_mask()))
            .expect("P itself qualifies")
    };
    let dense = smallest(&|d| is_debreu_dense(p, d).holds);
    let upper = smallest(&|d| is_debreu_upper_dense(p, d).holds);
    let mut r = PosetReport::new();
    r.property("minimum_debreu_dense_subset", dense.len() < n, Witness::subset(p, &dense));
    r.property("minimum_debreu_upper_dense_subset", upper.len() < n, Witness::subset(p, &upper));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_element_poset_passes() {
        let r = verify_density_theorems(&FinitePoset::chain(1)).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.get("conditionally_connected").unwrap().holds, Some(true));
    }

    #[test]
    fn tree_passes_every_clause() {
        let p = FinitePoset::from_covers(
            ["r", "a", "b", "a1", "a2"],
            [("r", "a"), ("r", "b"), ("a", "a1"), ("a", "a2")],
        )
        .unwrap();
        let r = verify_density_theorems(&p).unwrap();
        assert!(r.all_pass(), "{r:?}");
        assert_eq!(r.get("bases_are_debreu_dense").unwrap().holds, Some(true));
    }

    #[test]
    fn diamond_skips_connectedness_clauses() {
        let p = FinitePoset::from_covers(
            ["0", "a", "b", "1"],
            [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap();
        let r = verify_density_theorems(&p).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.get("conditionally_connected").unwrap().holds, Some(false));
        assert_eq!(r.get("bases_are_debreu_dense").unwrap().holds, None);
    }
}
