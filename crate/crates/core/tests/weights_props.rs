mod common;

use common::{p, small_ideal};
use flagstab_core::geometry::embed;
use flagstab_core::hilbert_chow::{
    chow_points_stability, chow_weight_join_tensor, chow_weight_numeric, chow_weight_single_space,
    hilbert_data, PointConfiguration,
};
use flagstab_core::poly::{scalar, HomogeneousIdeal, OnePS, Polynomial, ProjectivePoint};
use proptest::prelude::*;

/// `Y` in the first `k` of `nvars` coordinates, as an ideal of the full ring.
fn in_subspace(y: &HomogeneousIdeal, nvars: usize) -> HomogeneousIdeal {
    let k = y.nvars();
    let map: Vec<usize> = (0..k).collect();
    embed(y, nvars, &map).unwrap()
}

fn with_coordinates(i: HomogeneousIdeal, vars: std::ops::Range<usize>) -> HomogeneousIdeal {
    let n = i.nvars();
    i.with_generators(vars.map(|v| Polynomial::var(n, v)))
        .unwrap()
}

#[test]
fn pair_of_points_on_a_line() {
    // y1 y2 = 0 in P^1 sitting in P^2
    let y = HomogeneousIdeal::new(2, [p(2, &[(1, &[1, 1])])]).unwrap();
    let i = with_coordinates(in_subspace(&y, 3), 2..3);
    let lambda = OnePS::from_vector_weights(&[1, 1, -2]);
    let w = chow_weight_numeric(&i, &lambda).unwrap();
    assert_eq!(
        w.chow_weight,
        scalar(chow_weight_single_space(1, 2, 0).unwrap())
    );
}

proptest! {
    #![proptest_config(common::config(32))]

    #[test]
    fn single_space_weight(k in 2usize..=3, extra in 1usize..=2, y in (2usize..=3).prop_flat_map(small_ideal)) {
        let k = k.max(y.nvars());
        let y = in_subspace(&y, k);
        let hd = hilbert_data(&y).unwrap();
        prop_assume!(hd.dimension >= 0);
        let nvars = k + extra;
        let i = with_coordinates(in_subspace(&y, nvars), k..nvars);
        let (b, c) = (extra as i64, -(k as i64));
        let mut s = vec![b; k];
        s.extend(std::iter::repeat_n(c, extra));
        let w = chow_weight_numeric(&i, &OnePS::from_vector_weights(&s)).unwrap();
        let expected = chow_weight_single_space(b, hd.degree, hd.dimension as u64).unwrap();
        prop_assert_eq!(w.chow_weight, scalar(expected));
    }

    #[test]
    fn join_weight(k in 2usize..=3, u in 1usize..=2, y in (2usize..=3).prop_flat_map(small_ideal)) {
        let k = k.max(y.nvars());
        let y = in_subspace(&y, k);
        let hd = hilbert_data(&y).unwrap();
        prop_assume!(hd.dimension >= 0);
        let nvars = k + u;
        let join = in_subspace(&y, nvars);
        // weight a on U (the last u coordinates), b on W, summing to zero
        let (a, b) = (-(k as i64), u as i64);
        let mut s = vec![b; k];
        s.extend(std::iter::repeat_n(a, u));
        let w = chow_weight_numeric(&join, &OnePS::from_vector_weights(&s)).unwrap();
        let expected = chow_weight_join_tensor(a, b, hd.degree, hd.dimension as u64, u as u64 - 1).unwrap();
        prop_assert_eq!(w.chow_weight, scalar(expected));
    }

    #[test]
    fn weight_scales_with_subgroup(k in 1i64..=3) {
        let y = HomogeneousIdeal::new(3, [p(3, &[(1, &[1, 0, 1]), (-1, &[0, 2, 0])])]).unwrap();
        let i = in_subspace(&y, 4).with_generators([Polynomial::var(4, 3)]).unwrap();
        let base = OnePS::from_vector_weights(&[1, 1, 1, -3]);
        let w1 = chow_weight_numeric(&i, &base).unwrap().chow_weight;
        let wk = chow_weight_numeric(&i, &base.scaled(k)).unwrap().chow_weight;
        prop_assert_eq!(wk, w1 * scalar(k));
    }

    #[test]
    fn point_stability_ignores_order(
        pts in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 3), 3..=6),
        rot in 0usize..6,
    ) {
        let pts: Vec<ProjectivePoint> = pts
            .iter()
            .filter_map(|c| ProjectivePoint::from_ints(c).ok())
            .collect();
        prop_assume!(!pts.is_empty());
        let mut rotated = pts.clone();
        let r = rot % rotated.len();
        rotated.rotate_left(r);
        let a = chow_points_stability(&PointConfiguration::new(3, pts).unwrap());
        let b = chow_points_stability(&PointConfiguration::new(3, rotated).unwrap());
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert_eq!(a.excess, b.excess);
    }
}
