use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use ordbase_core::domains::{approx_below, interpolate, leq_m, way_below_m, MajorizationPoint};
use ordbase_core::random::{random_majorization_point, random_non_bottom};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Q = BigRational;

/// Partial sums computed directly from the coordinates.
fn sums(x: &MajorizationPoint) -> Vec<Q> {
    x.coords()
        .iter()
        .scan(Q::zero(), |acc, c| {
            *acc += c;
            Some(acc.clone())
        })
        .collect()
}

fn in_simplex(x: &MajorizationPoint) -> bool {
    let c = x.coords();
    c.windows(2).all(|w| w[0] >= w[1]) && !c.last().unwrap().is_negative() && sums(x).last().unwrap().is_one()
}

fn strictly_below(x: &MajorizationPoint, y: &MajorizationPoint) -> bool {
    let n = x.dim();
    let (a, b) = (sums(x), sums(y));
    (0..n - 1).all(|k| a[k] < b[k])
}

fn way_below_oracle(x: &MajorizationPoint, y: &MajorizationPoint) -> bool {
    x.is_bottom() || strictly_below(x, y)
}

fn point(seed: u64, n: usize) -> MajorizationPoint {
    random_majorization_point(&mut ChaCha8Rng::seed_from_u64(seed), n, 30)
}

proptest! {
    #[test]
    fn leq_is_a_partial_order(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>(), n in 2usize..6) {
        let (x, y, z) = (point(s1, n), point(s2, n), point(s3, n));
        prop_assert!(leq_m(&x, &x).unwrap());
        if leq_m(&x, &y).unwrap() && leq_m(&y, &z).unwrap() {
            prop_assert!(leq_m(&x, &z).unwrap());
        }
        if leq_m(&x, &y).unwrap() && leq_m(&y, &x).unwrap() {
            prop_assert_eq!(&x, &y);
        }
        prop_assert!(leq_m(&MajorizationPoint::bottom(n), &x).unwrap());
        prop_assert!(leq_m(&x, &MajorizationPoint::top(n)).unwrap());
    }

    #[test]
    fn way_below_matches_oracle(s1 in any::<u64>(), s2 in any::<u64>(), n in 2usize..6) {
        let (x, y) = (point(s1, n), point(s2, n));
        prop_assert_eq!(way_below_m(&x, &y).unwrap(), way_below_oracle(&x, &y));
    }

    #[test]
    fn approx_below_sandwich(seed in any::<u64>(), n in prop::sample::select(vec![2usize, 3, 4, 5, 7]), e in prop::sample::select(vec![2u64, 10, 100, 1_000_000])) {
        let x = random_non_bottom(&mut ChaCha8Rng::seed_from_u64(seed), n, 40);
        let eps = Q::new(1.into(), e.into());
        let q = approx_below(&x, &eps).unwrap();
        prop_assert!(in_simplex(&q));
        let (sx, sq) = (sums(&x), sums(&q));
        for k in 0..n - 1 {
            prop_assert!(&sx[k] - &eps < sq[k] && sq[k] < sx[k], "k = {}, x = {}, q = {}", k + 1, x, q);
        }
    }

    #[test]
    fn interpolation(s1 in any::<u64>(), s2 in any::<u64>(), n in 2usize..5) {
        let (x, y) = (point(s1, n), point(s2, n));
        if way_below_oracle(&x, &y) && !y.is_bottom() {
            let b = interpolate(&x, &y).unwrap();
            prop_assert!(in_simplex(&b));
            prop_assert!(way_below_oracle(&x, &b) && way_below_oracle(&b, &y), "{} {} {}", x, b, y);
        }
    }
}

#[test]
fn bottom_is_rejected() {
    assert!(approx_below(&MajorizationPoint::bottom(3), &Q::new(1.into(), 10.into())).is_err());
}
