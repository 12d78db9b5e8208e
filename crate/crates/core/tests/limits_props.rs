mod common;

use common::{ideal_with_weights, p};
use flagstab_core::geometry::{flat_limit, flat_limit_oracle, verify_limit_is_join, Splitting};
use flagstab_core::groebner::ideals_equal;
use flagstab_core::hilbert_chow::{hilbert_function, is_fixed_by};
use flagstab_core::oracle::agree_up_to;
use flagstab_core::poly::{HomogeneousIdeal, OnePS};
use proptest::prelude::*;

#[test]
fn conic_degenerates_to_a_double_line() {
    // x z - y^2 with z weighted heavily: the limit keeps y^2
    let conic = HomogeneousIdeal::new(3, [p(3, &[(1, &[1, 0, 1]), (-1, &[0, 2, 0])])]).unwrap();
    let lim = flat_limit(&conic, &OnePS::new(vec![1, 0, 1])).unwrap();
    let expected = HomogeneousIdeal::new(3, [p(3, &[(1, &[0, 2, 0])])]).unwrap();
    assert!(ideals_equal(&lim, &expected).unwrap());
}

#[test]
fn twisted_cubic_limit_is_join() {
    let cubic = HomogeneousIdeal::new(
        4,
        [
            p(4, &[(1, &[1, 0, 1, 0]), (-1, &[0, 2, 0, 0])]),
            p(4, &[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2, 0])]),
            p(4, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])]),
        ],
    )
    .unwrap();
    let split = Splitting::new(4, &[0]).unwrap();
    let r = verify_limit_is_join(&cubic, &split, -1, 1).unwrap();
    assert!(r.holds);
}

proptest! {
    #![proptest_config(common::config(48))]

    #[test]
    fn limit_matches_oracle((i, lambda) in ideal_with_weights()) {
        let lim = flat_limit(&i, &lambda).unwrap();
        let oracle = flat_limit_oracle(&i, &lambda, 5).unwrap();
        prop_assert!(agree_up_to(&lim, &oracle, 5).unwrap());
    }

    #[test]
    fn limit_is_flat((i, lambda) in ideal_with_weights()) {
        let lim = flat_limit(&i, &lambda).unwrap();
        for m in 0..=6 {
            prop_assert_eq!(hilbert_function(&lim, m), hilbert_function(&i, m));
        }
    }

    #[test]
    fn limit_is_a_fixed_point((i, lambda) in ideal_with_weights()) {
        let lim = flat_limit(&i, &lambda).unwrap();
        prop_assert!(is_fixed_by(&lim, &lambda).unwrap());
        let again = flat_limit(&lim, &lambda).unwrap();
        prop_assert!(ideals_equal(&lim, &again).unwrap());
    }

    #[test]
    fn limit_ignores_scalars_and_scaling((i, lambda) in ideal_with_weights(), c in -3i64..=3, k in 1i64..=3) {
        let lim = flat_limit(&i, &lambda).unwrap();
        let shifted = OnePS::new(lambda.weights().iter().map(|w| k * w + c).collect::<Vec<_>>());
        prop_assert!(ideals_equal(&lim, &flat_limit(&i, &shifted).unwrap()).unwrap());
    }
}
