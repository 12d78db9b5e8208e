#![allow(dead_code)]

use flagstab_core::poly::{monomials_of_degree, scalar, HomogeneousIdeal, OnePS, Polynomial};
use proptest::prelude::*;

/// A homogeneous polynomial with a few small integer coefficients.
pub fn homogeneous_poly(nvars: usize, degree: u32) -> impl Strategy<Value = Polynomial> {
    let monos = monomials_of_degree(nvars, degree);
    let len = monos.len();
    proptest::collection::vec((0..len, -3i64..=3), 1..=4).prop_map(move |terms| {
        let mut p = Polynomial::zero(nvars);
        for (k, c) in terms {
            p.add_term(monos[k].clone(), scalar(c));
        }
        p
    })
}

/// Ideals with one to three generators of degree one to three.
pub fn small_ideal(nvars: usize) -> impl Strategy<Value = HomogeneousIdeal> {
    proptest::collection::vec(1u32..=3, 1..=3)
        .prop_flat_map(move |degs| {
            degs.into_iter()
                .map(|d| homogeneous_poly(nvars, d))
                .collect::<Vec<_>>()
        })
        .prop_map(move |gens| HomogeneousIdeal::new(nvars, gens).unwrap())
        .prop_filter("zero ideal", |i| !i.is_zero_ideal())
}

/// Case count without on-disk failure persistence.
pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

pub fn weights(nvars: usize) -> impl Strategy<Value = OnePS> {
    proptest::collection::vec(-3i64..=3, nvars).prop_map(OnePS::new)
}

pub fn ideal_with_weights() -> impl Strategy<Value = (HomogeneousIdeal, OnePS)> {
    (2usize..=4).prop_flat_map(|n| (small_ideal(n), weights(n)))
}

pub fn p(n: usize, t: &[(i64, &[u32])]) -> Polynomial {
    Polynomial::from_int_terms(n, t)
}
