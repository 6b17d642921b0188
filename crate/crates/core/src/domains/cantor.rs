//! The Cantor domain `Σ^∞` of finite and infinite strings under the prefix
//! order.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::DomainError;

/// A string over the alphabet `{0, …, alphabet-1}`: either finite, or an
/// infinite string given as a total oracle from positions to symbols.
#[derive(Clone)]
pub enum SigmaString {
    /// A finite string.
    Finite {
        /// Alphabet size.
        alphabet: u8,
        /// Symbols.
        symbols: Vec<u8>,
    },
    /// An infinite string.
    Omega {
        /// Alphabet size.
        alphabet: u8,
        /// Symbol at each position.
        oracle: Arc<dyn Fn(usize) -> u8 + Send + Sync>,
    },
}

impl fmt::Debug for SigmaString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaString::Finite { symbols, .. } => {
                write!(f, "\"")?;
                for s in symbols {
                    write!(f, "{s}")?;
                }
                write!(f, "\"")
            }
            SigmaString::Omega { oracle, .. } => {
                write!(f, "\"")?;
                for i in 0..8 {
                    write!(f, "{}", oracle(i))?;
                }
                write!(f, "…\"")
            }
        }
    }
}

impl SigmaString {
    /// A finite string.
    ///
    /// # Panics
    /// Panics if a symbol is outside the alphabet.
    pub fn finite(alphabet: u8, symbols: Vec<u8>) -> Self {
        assert!(symbols.iter().all(|&s| s < alphabet), "symbol outside the alphabet");
        SigmaString::Finite { alphabet, symbols }
    }

    /// A binary finite string from a text of `0`/`1` characters.
    ///
    /// # Panics
    /// Panics on any other character.
    pub fn binary(text: &str) -> Self {
        let symbols = text
            .bytes()
            .map(|b| match b {
                b'0' => 0,
                b'1' => 1,
                _ => panic!("binary strings use only 0 and 1"),
            })
            .collect();
        SigmaString::Finite { alphabet: 2, symbols }
    }

    /// An infinite string.
    pub fn omega<F>(alphabet: u8, oracle: F) -> Self
    where
        F: Fn(usize) -> u8 + Send + Sync + 'static,
    {
        SigmaString::Omega { alphabet, oracle: Arc::new(oracle) }
    }

    /// The infinite string repeating `period` forever.
    pub fn periodic(alphabet: u8, period: Vec<u8>) -> Self {
        assert!(!period.is_empty(), "period must be nonempty");
        Self::omega(alphabet, move |i| period[i % period.len()])
    }

    /// Alphabet size.
    pub fn alphabet(&self) -> u8 {
        match self {
            SigmaString::Finite { alphabet, .. } | SigmaString::Omega { alphabet, .. } => *alphabet,
        }
    }

    /// Length, or `None` for an infinite string.
    pub fn len(&self) -> Option<usize> {
        match self {
            SigmaString::Finite { symbols, .. } => Some(symbols.len()),
            SigmaString::Omega { .. } => None,
        }
    }

    /// Whether this is the empty string `ε`.
    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }

    /// Whether the string is finite.
    pub fn is_finite(&self) -> bool {
        matches!(self, SigmaString::Finite { .. })
    }

    /// Symbol at position `i`, if the string is long enough.
    pub fn symbol(&self, i: usize) -> Option<u8> {
        match self {
            SigmaString::Finite { symbols, .. } => symbols.get(i).copied(),
            SigmaString::Omega { oracle, .. } => Some(oracle(i)),
        }
    }

    /// The finite prefix of length `k` (or the whole string if shorter).
    pub fn prefix(&self, k: usize) -> SigmaString {
        let symbols = match self {
            SigmaString::Finite { symbols, .. } => symbols[..k.min(symbols.len())].to_vec(),
            SigmaString::Omega { oracle, .. } => (0..k).map(|i| oracle(i)).collect(),
        };
        SigmaString::Finite { alphabet: self.alphabet(), symbols }
    }
}

/// Prefix order `x ≼_C y`.
///
/// Exact whenever `x` is finite or `y` is finite. For two infinite strings
/// only a mismatch within the first `depth` positions is conclusive;
/// otherwise the result is [`DomainError::DepthBounded`].
///
/// ```
/// use ordbase_core::domains::{leq_c, SigmaString};
/// assert!(leq_c(&SigmaString::binary("01"), &SigmaString::binary("0101"), 0).unwrap());
/// assert!(!leq_c(&SigmaString::binary("01"), &SigmaString::binary("001"), 0).unwrap());
/// ```
pub fn leq_c(x: &SigmaString, y: &SigmaString, depth: usize) -> Result<bool, DomainError> {
    if x.alphabet() != y.alphabet() {
        return Err(DomainError::AlphabetMismatch);
    }
    match (x, y) {
        (SigmaString::Finite { symbols: a, .. }, _) => {
            Ok(match y.len() {
                Some(m) if m < a.len() => false,
                _ => a.iter().enumerate().all(|(i, &s)| y.symbol(i) == Some(s)),
            })
        }
        (SigmaString::Omega { .. }, SigmaString::Finite { .. }) => Ok(false),
        (SigmaString::Omega { oracle: f, .. }, SigmaString::Omega { oracle: g, .. }) => {
            if (0..depth).any(|i| f(i) != g(i)) {
                Ok(false)
            } else {
                Err(DomainError::DepthBounded { depth })
            }
        }
    }
}

/// Way-below on `Σ^∞`: `x ≪ y` iff `x` is finite and `x ≼_C y`.
pub fn way_below_c(x: &SigmaString, y: &SigmaString, depth: usize) -> Result<bool, DomainError> {
    if x.alphabet() != y.alphabet() {
        return Err(DomainError::AlphabetMismatch);
    }
    if !x.is_finite() {
        return Ok(false);
    }
    leq_c(x, y, depth)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_examples() {
        let b = SigmaString::binary;
        assert!(leq_c(&b("01"), &b("0101"), 0).unwrap());
        assert!(!leq_c(&b("01"), &b("001"), 0).unwrap());
        assert!(!leq_c(&b("001"), &b("01"), 0).unwrap());
        assert!(leq_c(&b(""), &b("1"), 0).unwrap());
        assert!(way_below_c(&b(""), &b("110"), 0).unwrap());
        assert!(way_below_c(&b("11"), &b("11"), 0).unwrap());
    }

    #[test]
    fn omega_comparisons() {
        let zeros = SigmaString::periodic(2, alloc::vec![0]);
        let alt = SigmaString::periodic(2, alloc::vec![0, 1]);
        assert!(leq_c(&SigmaString::binary("000"), &zeros, 0).unwrap());
        assert!(!leq_c(&zeros, &SigmaString::binary("000"), 0).unwrap());
        assert!(!leq_c(&zeros, &alt, 4).unwrap());
        assert_eq!(leq_c(&zeros, &zeros.clone(), 16), Err(DomainError::DepthBounded { depth: 16 }));
        assert!(!way_below_c(&zeros, &zeros, 16).unwrap());
    }

    #[test]
    fn alphabet_mismatch() {
        let a = SigmaString::finite(3, alloc::vec![2]);
        assert_eq!(leq_c(&a, &SigmaString::binary("1"), 0), Err(DomainError::AlphabetMismatch));
    }
}
