use k3fix::lefschetz::{build_system, enumerate_point_types, FixedConfig, LefschetzData};
use num_integer::Integer;
use proptest::prelude::*;

fn pure_pair() -> impl Strategy<Value = (u64, u64)> {
    (2u64..=30)
        .prop_flat_map(|n| (Just(n), 0..n))
        .prop_filter("pure rotation", |&(n, r)| r == 0 || r.gcd(&n) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The field equation and the coordinate system agree on arbitrary
    /// (not necessarily solving) configurations.
    #[test]
    fn system_membership_matches_field_residual(
        (order, rot) in pure_pair(),
        counts in prop::collection::vec(0u64..6, 16),
        n in -5i64..=5,
    ) {
        let data = LefschetzData::new(order, rot).unwrap();
        let sys = data.system();
        let cfg = FixedConfig::new(sys.types().iter().copied().zip(counts), (rot != 0).then_some(n));
        let residual = data.verify(&cfg).unwrap();
        let u = sys.config_vector(&cfg).unwrap();
        let r = sys.linear().residual(&u).unwrap();
        prop_assert_eq!(residual.coords(), r.as_slice());
    }
}

#[test]
fn every_shape_matches_totient() {
    for order in 2..=40u64 {
        for rot in 0..order {
            if rot != 0 && rot.gcd(&order) != 1 {
                continue;
            }
            let sys = build_system(order, rot).unwrap();
            let types = enumerate_point_types(order, rot).unwrap();
            let phi = k3fix::exactmath::euler_phi(order).unwrap() as usize;
            assert_eq!(sys.linear().rows(), phi);
            assert_eq!(sys.linear().cols(), types.len() + usize::from(rot != 0));
        }
    }
}
