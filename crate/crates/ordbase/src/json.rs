//! JSON file formats for posets, multi-utilities and reports.

use std::collections::BTreeMap;
use std::path::Path;

use ordbase_core::poset::FinitePoset;
use ordbase_core::rational::parse_rational;
use ordbase_core::report::{PosetReport, ReportEntry, Witness};
use ordbase_core::topology::MultiUtility;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::CliError;

/// `{"elements": [...], "covers": [[a, b], ...]}`, where `[a, b]` means
/// `a ≼ b`. Covers need not be minimal; the order is their closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    /// Element labels, in index order.
    pub elements: Vec<String>,
    /// Generating pairs.
    #[serde(default)]
    pub covers: Vec<(String, String)>,
}

impl PosetFile {
    /// Builds the poset, rejecting unknown labels, duplicates and cycles.
    pub fn to_poset(&self) -> Result<FinitePoset, CliError> {
        Ok(FinitePoset::from_covers(&self.elements, self.covers.iter().map(|(a, b)| (a, b)))?)
    }

    /// The Hasse diagram of `p`.
    pub fn from_poset(p: &FinitePoset) -> Self {
        PosetFile {
            elements: p.labels().to_vec(),
            covers: p.cover_pairs().into_iter().map(|(a, b)| (p.label(a).to_string(), p.label(b).to_string())).collect(),
        }
    }
}

/// One function of a multi-utility file.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionFile {
    /// Function name.
    pub name: String,
    /// Value at each element, as a fraction string.
    pub values: BTreeMap<String, String>,
}

/// `{"functions": [{"name": ..., "values": {element: "p/q"}}]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultiUtilityFile {
    /// The functions of the family.
    pub functions: Vec<FunctionFile>,
}

impl MultiUtilityFile {
    /// Tabulates every function over the elements of `p`.
    pub fn to_multi_utility(&self, p: &FinitePoset) -> Result<MultiUtility, CliError> {
        let mut out = Vec::new();
        for f in &self.functions {
            if let Some(extra) = f.values.keys().find(|k| p.index_of(k).is_none()) {
                return Err(CliError::Parse(format!("function {}: unknown element {extra}", f.name)));
            }
            let mut values = Vec::with_capacity(p.len());
            for label in p.labels() {
                let text = f
                    .values
                    .get(label)
                    .ok_or_else(|| CliError::Parse(format!("function {}: no value for {label}", f.name)))?;
                values.push(parse_rational(text)?);
            }
            out.push((f.name.clone(), values));
        }
        Ok(MultiUtility::new(out))
    }
}

/// One serialized clause.
#[derive(Clone, Debug, Serialize)]
pub struct EntryJson {
    /// Clause name.
    pub property: String,
    /// Outcome, `null` when skipped.
    pub holds: Option<bool>,
    /// Evidence.
    pub witness: Value,
    /// `theorem`, `degenerate`, `property` or `skipped`.
    pub kind: &'static str,
    /// Annotation, if any.
    pub note: Option<String>,
}

/// A serialized report.
#[derive(Clone, Debug, Serialize)]
pub struct ReportJson {
    /// Suite name.
    pub suite: String,
    /// Number of elements of the input.
    pub elements: usize,
    /// Exhaustive-search bound used.
    pub bound: usize,
    /// Seed used for randomized items.
    pub seed: u64,
    /// Theorem-backed and degenerate clauses that did not hold.
    pub failures: usize,
    /// Clauses in evaluation order.
    pub entries: Vec<EntryJson>,
}

/// Converts a witness into JSON: `null`, a label, a label pair, a label
/// list, `{"subset", "pair"}`, a list of lists, or a free-form string.
pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::None => Value::Null,
        Witness::Element(x) => json!(x),
        Witness::Pair(x, y) => json!([x, y]),
        Witness::Subset(s) => json!(s),
        Witness::Counter { subset, pair } => json!({ "subset": subset, "pair": [pair.0, pair.1] }),
        Witness::Family(f) => json!(f),
        Witness::Text(t) => json!(t),
    }
}

/// Converts one clause.
pub fn entry_json(e: &ReportEntry) -> EntryJson {
    EntryJson {
        property: e.property.clone(),
        holds: e.holds,
        witness: witness_json(&e.witness),
        kind: e.kind.as_str(),
        note: e.note.clone(),
    }
}

/// Converts a report.
pub fn report_json(suite: &str, elements: usize, bound: usize, seed: u64, r: &PosetReport) -> ReportJson {
    ReportJson {
        suite: suite.to_string(),
        elements,
        bound,
        seed,
        failures: r.failures().count(),
        entries: r.entries.iter().map(entry_json).collect(),
    }
}

/// Reads and parses a JSON file.
pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    Ok(serde_json::from_str(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_is_rejected() {
        let f: PosetFile = serde_json::from_str(r#"{"elements":["a","b"],"covers":[["a","b"],["b","a"]]}"#).unwrap();
        assert!(matches!(f.to_poset(), Err(CliError::Poset(_))));
    }

    #[test]
    fn multi_utility_values() {
        let p = PosetFile { elements: vec!["a".into(), "b".into()], covers: vec![("a".into(), "b".into())] }.to_poset().unwrap();
        let f: MultiUtilityFile = serde_json::from_str(r#"{"functions":[{"name":"h","values":{"a":"0","b":"1/2"}}]}"#).unwrap();
        let v = f.to_multi_utility(&p).unwrap();
        assert_eq!(v.values[0][1].to_string(), "1/2");
        let missing: MultiUtilityFile = serde_json::from_str(r#"{"functions":[{"name":"h","values":{"a":"0"}}]}"#).unwrap();
        assert!(missing.to_multi_utility(&p).is_err());
    }
}
