//! Seeded generators for finite posets and majorization points.

use alloc::vec::Vec;

use rand::Rng;

use crate::domains::MajorizationPoint;
use crate::poset::{numeric_labels, FinitePoset};
use crate::rational::Rational;

/// A random poset on `n` elements: each pair `i < j` is a cover candidate
/// with probability `edge_prob`, and the order is the transitive closure.
pub fn random_poset<R: Rng + ?Sized>(rng: &mut R, n: usize, edge_prob: f64) -> FinitePoset {
    let mut covers = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(edge_prob) {
                covers.push((i, j));
            }
        }
    }
    FinitePoset::from_index_covers(numeric_labels(n), &covers).expect("edges go from lower to higher index")
}

/// A random forest whose roots are at the bottom: each element `i > 0`
/// picks a parent below it or becomes a new root.
///
/// Forests of this shape are exactly the finite conditionally connected
/// posets, since two elements with a common upper bound both lie on that
/// bound's path to its root.
pub fn random_conditionally_connected<R: Rng + ?Sized>(rng: &mut R, n: usize) -> FinitePoset {
    let mut covers = Vec::new();
    for i in 1..n {
        let parent = rng.gen_range(0..=i);
        if parent < i {
            covers.push((parent, i));
        }
    }
    FinitePoset::from_index_covers(numeric_labels(n), &covers).expect("edges go from lower to higher index")
}

/// A random rational point of `Λⁿ` whose coordinates have denominators
/// dividing the sum of `n` weights drawn from `0..=max_weight`.
pub fn random_majorization_point<R: Rng + ?Sized>(rng: &mut R, n: usize, max_weight: u64) -> MajorizationPoint {
    loop {
        let mut w: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=max_weight)).collect();
        let total: u64 = w.iter().sum();
        if total == 0 {
            continue;
        }
        w.sort_unstable_by(|a, b| b.cmp(a));
        let coords = w.iter().map(|&c| Rational::new(c.into(), total.into())).collect();
        return MajorizationPoint::new(coords).expect("sorted nonnegative weights normalized to 1");
    }
}

/// Like [`random_majorization_point`] but never `⊥`.
pub fn random_non_bottom<R: Rng + ?Sized>(rng: &mut R, n: usize, max_weight: u64) -> MajorizationPoint {
    loop {
        let x = random_majorization_point(rng, n, max_weight);
        if !x.is_bottom() {
            return x;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::is_conditionally_connected;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn forests_are_conditionally_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for n in 1..9 {
            for _ in 0..20 {
                assert!(is_conditionally_connected(&random_conditionally_connected(&mut rng, n)));
            }
        }
    }

    #[test]
    fn points_are_in_the_simplex() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in [2, 3, 7] {
            let x = random_non_bottom(&mut rng, n, 20);
            assert_eq!(x.dim(), n);
            assert!(!x.is_bottom());
        }
    }
}
