use flagstab_cli::parse::{parse, serialize, InputDocument, Located};
use flagstab_core::poly::{Monomial, Polynomial, Scalar};
use num_rational::BigRational;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| BigRational::new(p.into(), q.into()))
}

fn polynomial(nvars: usize) -> impl Strategy<Value = Polynomial> {
    (1u32..=3).prop_flat_map(move |deg| {
        prop::collection::vec((prop::collection::vec(0u32..=deg, nvars), rational()), 1..4)
            .prop_map(move |terms| {
                Polynomial::from_terms(nvars, terms.into_iter().map(|(e, c)| (Monomial::new(e), c)))
            })
    })
}

fn located<T>(value: T) -> Located<T> {
    Located {
        value,
        line: 0,
        col: 0,
    }
}

fn document() -> impl Strategy<Value = InputDocument> {
    (2usize..=4).prop_flat_map(|nvars| {
        (
            prop::collection::vec(polynomial(nvars), 0..3),
            prop::option::of(prop::collection::vec(-5i64..=5, nvars)),
            prop::option::of(prop::collection::btree_set(0..nvars, 1..nvars)),
            prop::option::of((-5i64..=5, -5i64..=5)),
            prop::option::of((1u64..4, 1u64..9, 1u64..99)),
            prop::option::of(prop::collection::vec(-5i64..=5, 2..4)),
            prop::collection::vec(prop::collection::vec(rational(), nvars), 0..3),
        )
            .prop_map(move |(ideal, weights, split, ab, params, beta, points)| {
                let variables: Vec<String> = (0..nvars).map(|k| format!("v{k}")).collect();
                InputDocument {
                    command: Some("gb".into()),
                    variables,
                    ideal: ideal.into_iter().map(located).collect(),
                    weights,
                    splitting: split.map(|s| s.into_iter().collect()),
                    a: ab.map(|x| x.0),
                    b: ab.map(|x| x.1),
                    n: params.map(|p| p.0),
                    d: params.map(|p| p.1),
                    dimv: params.map(|p| p.0 + 2),
                    a0: params.map(|p| p.2),
                    multiplicities: beta.as_ref().map(|b| vec![1; b.len()]),
                    beta,
                    stage: params.map(|p| p.0),
                    points: points.into_iter().map(located).collect(),
                }
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn parse_inverts_serialize(doc in document()) {
        let text = serialize(&doc);
        let back = parse(&text).unwrap();
        prop_assert_eq!(back, doc);
    }

    #[test]
    fn serialize_is_a_fixed_point(doc in document()) {
        let once = serialize(&doc);
        prop_assert_eq!(serialize(&parse(&once).unwrap()), once);
    }
}
