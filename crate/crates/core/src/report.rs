//! Property reports shared by every checker.
//!
//! A report is an ordered list of clauses. Theorem-backed clauses must hold
//! on every valid input; property clauses record facts about the instance
//! (such as "not conditionally connected") and never count as failures.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::poset::{ElementSubset, FinitePoset};

/// Annotation carried by clauses that hold for trivial reasons on finite
/// inputs.
pub const DEGENERATE_NOTE: &str = "degenerate at finite scale";

/// What kind of claim a clause makes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClauseKind {
    /// Follows from a theorem; a failure is a bug.
    Theorem,
    /// Follows from a theorem that trivializes on finite inputs; must hold
    /// and carries [`DEGENERATE_NOTE`].
    Degenerate,
    /// A fact about the instance; either answer is acceptable.
    Property,
    /// Not evaluated because a precondition does not hold.
    Skipped,
}

impl ClauseKind {
    /// Lower-case name used in serialized reports.
    pub fn as_str(self) -> &'static str {
        match self {
            ClauseKind::Theorem => "theorem",
            ClauseKind::Degenerate => "degenerate",
            ClauseKind::Property => "property",
            ClauseKind::Skipped => "skipped",
        }
    }
}

/// Evidence attached to a clause, expressed in element labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// No evidence.
    None,
    /// A single element.
    Element(String),
    /// An ordered pair of elements.
    Pair(String, String),
    /// A set of elements.
    Subset(Vec<String>),
    /// A subset together with the pair it fails on.
    Counter {
        /// The subset under test.
        subset: Vec<String>,
        /// The violating pair.
        pair: (String, String),
    },
    /// A family of subsets, such as every weak basis that was checked.
    Family(Vec<Vec<String>>),
    /// Free-form evidence.
    Text(String),
}

impl Witness {
    /// Pair of element labels.
    pub fn pair(p: &FinitePoset, (x, y): (usize, usize)) -> Self {
        Witness::Pair(p.label(x).to_string(), p.label(y).to_string())
    }

    /// Subset of element labels.
    pub fn subset(p: &FinitePoset, s: &ElementSubset) -> Self {
        Witness::Subset(labels_of(p, s))
    }

    /// Subset together with a violating pair.
    pub fn counter(p: &FinitePoset, s: &ElementSubset, pair: (usize, usize)) -> Self {
        Witness::Counter {
            subset: labels_of(p, s),
            pair: (p.label(pair.0).to_string(), p.label(pair.1).to_string()),
        }
    }
}

/// Labels of the members of `s`.
pub fn labels_of(p: &FinitePoset, s: &ElementSubset) -> Vec<String> {
    s.iter().map(|i| p.label(i).to_string()).collect()
}

/// One checked clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportEntry {
    /// Stable clause name.
    pub property: String,
    /// Outcome; `None` when the clause was skipped.
    pub holds: Option<bool>,
    /// Kind of claim.
    pub kind: ClauseKind,
    /// Supporting or refuting evidence.
    pub witness: Witness,
    /// Extra remark, such as the degenerate annotation.
    pub note: Option<String>,
}

/// An ordered list of clauses.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PosetReport {
    /// Clauses in evaluation order.
    pub entries: Vec<ReportEntry>,
}

impl PosetReport {
    /// An empty report.
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a theorem-backed clause.
    pub fn theorem(&mut self, property: &str, holds: bool, witness: Witness) {
        self.push(property, Some(holds), ClauseKind::Theorem, witness, None);
    }

    /// Adds a clause that holds trivially on finite inputs, with the
    /// degenerate annotation and an explanation.
    pub fn degenerate(&mut self, property: &str, holds: bool, witness: Witness, reason: &str) {
        let mut note = String::from(DEGENERATE_NOTE);
        note.push_str(": ");
        note.push_str(reason);
        self.push(property, Some(holds), ClauseKind::Degenerate, witness, Some(note));
    }

    /// Adds a fact about the instance.
    pub fn property(&mut self, property: &str, holds: bool, witness: Witness) {
        self.push(property, Some(holds), ClauseKind::Property, witness, None);
    }

    /// Records a clause that was not evaluated.
    pub fn skipped(&mut self, property: &str, reason: &str) {
        self.push(property, None, ClauseKind::Skipped, Witness::None, Some(String::from(reason)));
    }

    fn push(&mut self, property: &str, holds: Option<bool>, kind: ClauseKind, witness: Witness, note: Option<String>) {
        self.entries.push(ReportEntry { property: String::from(property), holds, kind, witness, note });
    }

    /// Appends all clauses of `other`, prefixing their names.
    pub fn extend_prefixed(&mut self, prefix: &str, other: PosetReport) {
        for mut e in other.entries {
            let mut name = String::from(prefix);
            name.push_str(&e.property);
            e.property = name;
            self.entries.push(e);
        }
    }

    /// Clauses that must hold but do not.
    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| {
            matches!(e.kind, ClauseKind::Theorem | ClauseKind::Degenerate) && e.holds != Some(true)
        })
    }

    /// Whether every theorem-backed and degenerate clause holds, and every
    /// degenerate clause carries the annotation.
    pub fn all_pass(&self) -> bool {
        self.failures().next().is_none()
            && self
                .entries
                .iter()
                .filter(|e| e.kind == ClauseKind::Degenerate)
                .all(|e| e.note.as_deref().is_some_and(|n| n.starts_with(DEGENERATE_NOTE)))
    }

    /// The clause with this name.
    pub fn get(&self, property: &str) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| e.property == property)
    }
}
