use k3fix::exactmath::{
    cyclotomic_poly, divisors, elt_from_power, euler_phi, CycElt, CyclotomicField, Poly, Rational,
};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn field_strategy() -> impl Strategy<Value = CyclotomicField> {
    prop::sample::select(vec![3u64, 4, 5, 12, 60]).prop_map(|n| CyclotomicField::new(n).unwrap())
}

fn element(field: &CyclotomicField) -> impl Strategy<Value = CycElt> {
    let field = field.clone();
    prop::collection::vec((-20i64..=20, 1i64..=7), field.degree()).prop_map(move |v| {
        let coords = v
            .into_iter()
            .map(|(n, d)| Rational::new(n.into(), d.into()))
            .collect();
        field.from_coords(coords).unwrap()
    })
}

fn triple() -> impl Strategy<Value = (CycElt, CycElt, CycElt)> {
    field_strategy().prop_flat_map(|f| (element(&f), element(&f), element(&f)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((u, v, w) in triple()) {
        prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
        prop_assert_eq!(&u * &(&v + &w), &(&u * &v) + &(&u * &w));
        prop_assert_eq!(&u * &v, &v * &u);
        prop_assert_eq!(&(&u - &v) + &v, u.clone());
    }

    #[test]
    fn inverse_round_trip((u, _, _) in triple()) {
        prop_assume!(!u.is_zero());
        prop_assert!((&u * &u.inv().unwrap()).is_one());
    }
}

#[test]
fn powers_pair_to_one() {
    for order in [2u64, 3, 7, 12, 30, 60, 66] {
        let f = CyclotomicField::new(order).unwrap();
        for k in 1..order as i64 {
            let p = &elt_from_power(&f, k) * &elt_from_power(&f, order as i64 - k);
            assert!(p.is_one(), "N={order} k={k}");
        }
    }
}

#[test]
fn modulus_vanishes_at_zeta() {
    for order in 1..=70u64 {
        let f = CyclotomicField::new(order).unwrap();
        let value = f
            .modulus()
            .coeffs()
            .iter()
            .enumerate()
            .fold(f.zero(), |acc, (i, c)| {
                &acc + &elt_from_power(&f, i as i64).scale(c)
            });
        assert!(value.is_zero(), "N = {order}");
    }
}

#[test]
fn cyclotomic_degree_is_totient() {
    for n in 1..=1000u64 {
        let p = cyclotomic_poly(n).unwrap();
        assert_eq!(p.degree(), Some(euler_phi(n).unwrap() as usize), "N = {n}");
        assert!(p.is_monic() && p.has_integer_coeffs());
    }
}

#[test]
fn phi_105_by_long_division() {
    let recursive = cyclotomic_poly(105).unwrap();
    let proper = divisors(105)
        .into_iter()
        .filter(|&d| d < 105)
        .map(|d| cyclotomic_poly(d).unwrap())
        .fold(Poly::one(), |acc, p| &acc * &p);
    let (quotient, remainder) = Poly::x_pow_minus_one(105).div_rem(&proper).unwrap();
    assert!(remainder.is_zero());
    assert_eq!(quotient, recursive);
    assert_eq!(recursive.degree(), Some(48));
    let two = Rational::from_integer(2.into());
    assert!(recursive.coeffs().iter().any(|c| c.abs() == two));
    assert!(recursive
        .coeffs()
        .iter()
        .all(|c| c.abs() <= two || c.is_zero()));
}
