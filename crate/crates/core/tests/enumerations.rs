use num_rational::BigRational;
use ordbase_core::domains::MajorizationPoint;
use ordbase_core::effective::{
    pair, unpair, Alpha0, AlphaMajorization, CantorStrings, FiniteMap, IntervalBasis,
    NonNegativeRationals, Rationals,
};
use proptest::prelude::*;

fn cantor_closed_form(n: u64, m: u64) -> u128 {
    let (n, m) = (n as u128, m as u128);
    (n + m) * (n + m + 1) / 2 + n
}

#[test]
fn pairing_is_exhaustively_invertible_up_to_200() {
    let mut seen = std::collections::HashSet::new();
    for n in 0..=200u64 {
        for m in 0..=200u64 {
            let k = pair(n, m).unwrap();
            assert_eq!(u128::from(k), cantor_closed_form(n, m));
            assert_eq!(unpair(k), (n, m));
            assert!(seen.insert(k));
        }
    }
    for k in 0..20_000u64 {
        let (n, m) = unpair(k);
        assert_eq!(pair(n, m), Some(k));
    }
}

#[test]
fn pairing_edges() {
    let (n, m) = unpair(u64::MAX);
    assert_eq!(pair(n, m), Some(u64::MAX));
    assert_eq!(pair(u64::MAX, 0), None);
}

#[test]
fn alpha0_round_trips_on_ten_thousand_indices() {
    let mut seen = std::collections::HashSet::new();
    for (i, q) in Alpha0.iter_from(0).take(10_000).enumerate() {
        assert!(q >= BigRational::from_integer(0.into()) && q <= BigRational::from_integer(1.into()));
        assert_eq!(Alpha0.decode(i as u64), q);
        assert_eq!(Alpha0.encode(&q), Some(i as u64));
        assert!(seen.insert(q));
    }
}

fn is_in_simplex(x: &MajorizationPoint) -> bool {
    let c = x.coords();
    let total: BigRational = c.iter().sum();
    c.windows(2).all(|w| w[0] >= w[1]) && c.last().unwrap() >= &BigRational::from_integer(0.into()) && total == BigRational::from_integer(1.into())
}

#[test]
fn alpha_majorization_round_trips_on_ten_thousand_indices() {
    for n in [2, 3, 4] {
        let map = AlphaMajorization::new(n);
        let mut seen = std::collections::HashSet::new();
        for (i, x) in map.iter_from(0).take(10_000).enumerate() {
            assert!(is_in_simplex(&x), "{x}");
            assert_eq!(map.encode(&x), Some(i as u64), "n = {n}, {x}");
            assert!(seen.insert(x.to_string()));
        }
        assert!(map.decode(0).is_bottom());
    }
}

#[test]
fn cantor_strings_are_length_then_lex() {
    let map = CantorStrings::new(2);
    let mut prev: Option<Vec<u8>> = None;
    for i in 0..2000u64 {
        let s = map.decode(i);
        let len = s.len().unwrap();
        let sym: Vec<u8> = (0..len).map(|j| s.symbol(j).unwrap()).collect();
        if let Some(p) = &prev {
            assert!(p.len() < sym.len() || (p.len() == sym.len() && p < &sym));
        }
        assert_eq!(map.encode(&s), Some(i));
        prev = Some(sym);
    }
}

proptest! {
    #[test]
    fn pair_unpair_inverse(n in 0u64..1u64 << 31, m in 0u64..1u64 << 31) {
        let k = pair(n, m).unwrap();
        prop_assert_eq!(u128::from(k), cantor_closed_form(n, m));
        prop_assert_eq!(unpair(k), (n, m));
    }

    #[test]
    fn rationals_round_trip(i in 0u64..1_000_000) {
        prop_assert_eq!(Rationals.encode(&Rationals.decode(i)), Some(i));
        prop_assert_eq!(NonNegativeRationals.encode(&NonNegativeRationals.decode(i)), Some(i));
        prop_assert!(NonNegativeRationals.decode(i) >= BigRational::from_integer(0.into()));
    }

    #[test]
    fn interval_basis_round_trip(i in 0u64..1_000_000) {
        prop_assert_eq!(IntervalBasis.encode(&IntervalBasis.decode(i)), Some(i));
    }

    #[test]
    fn alpha_majorization_decode_encode(i in 0u64..200_000, n in 2usize..6) {
        let map = AlphaMajorization::new(n);
        let x = map.decode(i);
        prop_assert!(is_in_simplex(&x));
        prop_assert_eq!(map.encode(&x), Some(i));
    }
}
