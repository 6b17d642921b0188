//! Report suites run by `ordbase check`.

use ordbase_core::density::{minimum_dense_subsets, verify_density_theorems_with_bound};
use ordbase_core::enumerated::theorem1_check;
use ordbase_core::poset::{ElementSubset, FinitePoset, PosetError, FAMILY_ENUMERATION_BOUND};
use ordbase_core::report::{PosetReport, Witness};
use ordbase_core::topology::{
    lower_topology, mu_check, mu_from_downsets, mu_from_open_sets, mu_from_weak_basis, prop12_check,
    strict_multi_utility, theorem3_check, theorem4_check, MonotoneMap, MultiUtility,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;

/// The named suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// Weak bases, density and the conditional connectedness clauses.
    Density,
    /// Only the conditional connectedness clauses.
    Conditional,
    /// Every theorem-backed clause, including the degenerate ones.
    Theorems,
    /// Multi-utility constructions and their consequences.
    Mu,
}

impl Suite {
    /// Lower-case name used in reports.
    pub fn name(self) -> &'static str {
        match self {
            Suite::Density => "density",
            Suite::Conditional => "conditional",
            Suite::Theorems => "theorems",
            Suite::Mu => "mu",
        }
    }
}

const CONDITIONAL_CLAUSES: &[&str] = &[
    "conditionally_connected",
    "conditional_connectedness_characterizations_agree",
    "compact_equals_isolated_union_min",
    "way_below_conditionally_connected_rule",
    "jumps_biject_onto_isolated",
    "bases_are_debreu_dense",
    "dense_union_compact_is_upper_dense",
];

/// Number of seeded random self-maps checked by the theorems suite.
pub const RANDOM_MAPS: usize = 3;

/// Runs `suite` on `p`. `extra` is a user-supplied multi-utility checked by
/// the `mu` suite.
pub fn run_suite(
    p: &FinitePoset,
    suite: Suite,
    bound: usize,
    seed: u64,
    extra: Option<&MultiUtility>,
) -> Result<PosetReport, CliError> {
    let mut r = PosetReport::new();
    match suite {
        Suite::Density => {
            r.extend_prefixed("", verify_density_theorems_with_bound(p, bound)?);
            minimum_or_skip(p, &mut r)?;
        }
        Suite::Conditional => {
            let full = verify_density_theorems_with_bound(p, bound)?;
            r.entries = full.entries.into_iter().filter(|e| CONDITIONAL_CLAUSES.contains(&e.property.as_str())).collect();
        }
        Suite::Theorems => {
            r.extend_prefixed("density.", verify_density_theorems_with_bound(p, bound)?);
            r.extend_prefixed("theorem1.", theorem1_check(p, bound)?);
            r.extend_prefixed("theorem3.identity.", theorem3_check(p, p, &MonotoneMap { table: (0..p.len()).collect() }, bound)?);
            if !p.is_empty() {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for i in 0..RANDOM_MAPS {
                    let table = (0..p.len()).map(|_| rng.gen_range(0..p.len())).collect();
                    r.extend_prefixed(&format!("theorem3.random{i}."), theorem3_check(p, p, &MonotoneMap { table }, bound)?);
                }
            }
            r.extend_prefixed("prop12.", prop12_check(p, bound)?);
            r.extend_prefixed("theorem4.", theorem4_check(p, &strict_multi_utility(p), bound)?);
        }
        Suite::Mu => {
            let constructions = [
                ("downsets", mu_from_downsets(p)),
                ("weak_basis", mu_from_weak_basis(p, &ElementSubset::full(p.len()), bound)?),
                ("lower_opens", mu_from_open_sets(&lower_topology(p))),
            ];
            for (name, v) in &constructions {
                let f = mu_check(p, v)?;
                r.theorem(&format!("{name}.multi_utility"), f.multi_utility, pair_witness(p, f.multi_utility_counter));
                r.theorem(&format!("{name}.lsc"), f.lsc, lsc_witness(v, f.lsc_counter));
            }
            let strict = strict_multi_utility(p);
            let f = mu_check(p, &strict)?;
            r.theorem("strict.multi_utility", f.multi_utility, pair_witness(p, f.multi_utility_counter));
            r.theorem("strict.strict", f.strict, pair_witness(p, f.strict_counter));
            r.theorem("strict.lsc", f.lsc, lsc_witness(&strict, f.lsc_counter));
            r.extend_prefixed("strict.theorem4.", theorem4_check(p, &strict, bound)?);
            if let Some(v) = extra {
                let f = mu_check(p, v)?;
                r.property("input.multi_utility", f.multi_utility, pair_witness(p, f.multi_utility_counter));
                r.property("input.strict", f.strict, pair_witness(p, f.strict_counter));
                r.property("input.lsc", f.lsc, lsc_witness(v, f.lsc_counter));
                if f.multi_utility && f.strict && f.lsc {
                    r.extend_prefixed("input.theorem4.", theorem4_check(p, v, bound)?);
                } else {
                    r.skipped("input.theorem4", "the input is not an lsc strict monotone multi-utility");
                }
            }
        }
    }
    Ok(r)
}

fn minimum_or_skip(p: &FinitePoset, r: &mut PosetReport) -> Result<(), CliError> {
    match minimum_dense_subsets(p) {
        Ok(m) => r.extend_prefixed("", m),
        Err(PosetError::SizeLimit { .. }) => {
            let reason = format!("more than {FAMILY_ENUMERATION_BOUND} elements");
            r.skipped("minimum_debreu_dense_subset", &reason);
            r.skipped("minimum_debreu_upper_dense_subset", &reason);
        }
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

fn pair_witness(p: &FinitePoset, pair: Option<(usize, usize)>) -> Witness {
    pair.map_or(Witness::None, |pr| Witness::pair(p, pr))
}

fn lsc_witness(v: &MultiUtility, index: Option<usize>) -> Witness {
    index.map_or(Witness::None, |i| Witness::Text(v.names[i].clone()))
}
