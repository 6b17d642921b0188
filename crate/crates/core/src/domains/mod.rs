//! The three concrete domains: Cantor strings, the interval domain and
//! majorization, all with exact rational arithmetic.

use core::fmt;

pub mod cantor;
pub mod interval;
pub mod majorization;
pub mod surd;

pub use cantor::{leq_c, way_below_c, SigmaString};
pub use interval::{bisection_chain, bisection_prefix, leq_i, sup_interval_chain, way_below_i, IntervalLimit, Location, RationalInterval};
pub use majorization::{approx_below, basis_chain_m, interpolate, leq_m, way_below_m, BasisChainM, MajorizationPoint};
pub use surd::QuadraticSurd;

/// Errors raised by domain constructors and algorithms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DomainError {
    /// A vector is not a point of `Λⁿ`.
    NotInSimplex(&'static str),
    /// Two points of different dimension were compared.
    DimensionMismatch {
        /// Dimension of the left operand.
        left: usize,
        /// Dimension of the right operand.
        right: usize,
    },
    /// The algorithm is undefined at the bottom element.
    BottomInput,
    /// `interpolate` was called on a pair that is not way-below.
    NotWayBelow,
    /// An interval chain decreased at this position.
    NotDirected {
        /// Index of the first offending element.
        index: usize,
    },
    /// The answer is not determined by the inspected number of symbols.
    DepthBounded {
        /// Number of symbols inspected.
        depth: usize,
    },
    /// Two strings over different alphabets were compared.
    AlphabetMismatch,
    /// An interval with `lo > hi`.
    InvalidInterval,
    /// A non-positive precision was requested.
    NonPositiveEpsilon,
}

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainError::NotInSimplex(why) => write!(f, "not a point of the majorization simplex: {why}"),
            DomainError::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            DomainError::BottomInput => write!(f, "input is the bottom element"),
            DomainError::NotWayBelow => write!(f, "first argument is not way-below the second"),
            DomainError::NotDirected { index } => write!(f, "chain decreases at position {index}"),
            DomainError::DepthBounded { depth } => {
                write!(f, "comparison undetermined after {depth} symbols")
            }
            DomainError::AlphabetMismatch => write!(f, "strings use different alphabets"),
            DomainError::InvalidInterval => write!(f, "interval has lo > hi"),
            DomainError::NonPositiveEpsilon => write!(f, "precision must be positive"),
        }
    }
}
