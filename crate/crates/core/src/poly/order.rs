use super::Monomial;
use crate::error::{check_dim, Result};
use smallvec::SmallVec;
use std::cmp::Ordering;

/// A diagonal one-parameter subgroup, recorded by the weights of the
/// coordinate functions `x_0, ..., x_N`.
///
/// If `lambda(t)` scales the basis vector `e_i` by `t^{s_i}`, the dual
/// coordinate `x_i` has weight `r_i = -s_i`. Polynomial-level routines
/// (monomial weights, initial parts, flat limits) consume the coordinate
/// weights `r_i` directly; [`OnePS::from_vector_weights`] builds the
/// subgroup from the `s_i` instead.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OnePS {
    weights: Vec<i64>,
}

impl OnePS {
    /// Subgroup with coordinate weights `r_i`.
    pub fn new(coordinate_weights: impl Into<Vec<i64>>) -> Self {
        OnePS {
            weights: coordinate_weights.into(),
        }
    }

    /// Subgroup acting on the basis vector `e_i` with weight `s_i`.
    pub fn from_vector_weights(vector_weights: &[i64]) -> Self {
        OnePS {
            weights: vector_weights.iter().map(|s| -s).collect(),
        }
    }

    /// The trivial subgroup (all weights zero).
    pub fn trivial(nvars: usize) -> Self {
        OnePS {
            weights: vec![0; nvars],
        }
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    /// Weights of the coordinate functions.
    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Weights on the basis vectors of `V` (negated coordinate weights).
    pub fn vector_weights(&self) -> Vec<i64> {
        self.weights.iter().map(|r| -r).collect()
    }

    /// `true` iff the subgroup lands in `SL(V)`.
    pub fn is_sl_normalized(&self) -> bool {
        self.weights.iter().sum::<i64>() == 0
    }

    /// `true` iff all weights agree, so every homogeneous polynomial is fixed.
    pub fn is_scalar(&self) -> bool {
        self.weights.windows(2).all(|w| w[0] == w[1])
    }

    pub fn scaled(&self, factor: i64) -> OnePS {
        OnePS {
            weights: self.weights.iter().map(|w| w * factor).collect(),
        }
    }
}

/// `w_lambda(x^a) = sum_i a_i r_i`.
pub fn monomial_weight(m: &Monomial, lambda: &OnePS) -> Result<i64> {
    check_dim(lambda.nvars(), m.nvars())?;
    Ok(m.dot(lambda.weights()))
}

/// Monomial orders used by the Gröbner engine.
///
/// All orders compare total degree first, so `1` is the minimum and
/// homogeneous computations stay degree-bounded. The leading term of a
/// polynomial is its order-maximal term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Degree, then lexicographic with `x_0 > x_1 > ...`.
    GradedLex,
    /// Degree ascending, then weight *descending*, then lexicographic.
    ///
    /// Within a degree the leading term is therefore one of minimal
    /// weight, i.e. the leading term lies in the initial part.
    WeightRefinedLex(OnePS),
    /// Block order: monomials are compared on the `eliminate` variables
    /// first and on the remaining ones second, each block by the
    /// degree/weight/lex rule above restricted to that block.
    Elimination {
        eliminate: Vec<bool>,
        weights: Option<OnePS>,
    },
}

/// Sort key realising a [`TermOrder`] as lexicographic order on integers.
pub type SortKey = SmallVec<[i64; 16]>;

impl TermOrder {
    pub fn elimination(nvars: usize, eliminate: &[usize]) -> TermOrder {
        let mut mask = vec![false; nvars];
        for &i in eliminate {
            mask[i] = true;
        }
        TermOrder::Elimination {
            eliminate: mask,
            weights: None,
        }
    }

    /// Checked comparison of two monomials.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        check_dim(a.nvars(), b.nvars())?;
        if let Some(n) = self.arity() {
            check_dim(n, a.nvars())?;
        }
        Ok(self.cmp(a, b))
    }

    /// Variable count the order is tied to, if any.
    pub fn arity(&self) -> Option<usize> {
        match self {
            TermOrder::GradedLex => None,
            TermOrder::WeightRefinedLex(l) => Some(l.nvars()),
            TermOrder::Elimination { eliminate, .. } => Some(eliminate.len()),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::GradedLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| a.exponents().cmp(b.exponents())),
            TermOrder::WeightRefinedLex(l) => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| b.dot(l.weights()).cmp(&a.dot(l.weights())))
                .then_with(|| a.exponents().cmp(b.exponents())),
            TermOrder::Elimination { .. } => self.sort_key(a).cmp(&self.sort_key(b)),
        }
    }

    /// Integer key whose lexicographic order is this term order.
    pub fn sort_key(&self, m: &Monomial) -> SortKey {
        let mut key = SortKey::new();
        match self {
            TermOrder::GradedLex => {
                key.push(i64::from(m.degree()));
                key.extend(m.exponents().iter().map(|&e| i64::from(e)));
            }
            TermOrder::WeightRefinedLex(l) => {
                key.push(i64::from(m.degree()));
                key.push(-m.dot(l.weights()));
                key.extend(m.exponents().iter().map(|&e| i64::from(e)));
            }
            TermOrder::Elimination { eliminate, weights } => {
                for block in [true, false] {
                    let idx = || (0..m.nvars()).filter(|&i| eliminate[i] == block);
                    let deg: i64 = idx().map(|i| i64::from(m.exponent(i))).sum();
                    let w: i64 = match weights {
                        Some(l) => idx()
                            .map(|i| i64::from(m.exponent(i)) * l.weights()[i])
                            .sum(),
                        None => 0,
                    };
                    key.push(deg);
                    key.push(-w);
                    key.extend(idx().map(|i| i64::from(m.exponent(i))));
                }
            }
        }
        key
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn weight_examples() {
        let l = OnePS::new(vec![2, -1, -1]);
        assert_eq!(monomial_weight(&m(&[1, 0, 1]), &l).unwrap(), 1);
        assert_eq!(monomial_weight(&m(&[0, 2, 0]), &l).unwrap(), -2);
        assert_eq!(monomial_weight(&m(&[0, 0, 0]), &l).unwrap(), 0);
        assert!(monomial_weight(&m(&[1, 0]), &l).is_err());
    }

    #[test]
    fn compare_examples() {
        let grlex = TermOrder::GradedLex;
        // x vs y^2
        assert_eq!(
            grlex.compare(&m(&[1, 0, 0]), &m(&[0, 2, 0])).unwrap(),
            Ordering::Less
        );
        let weighted = TermOrder::WeightRefinedLex(OnePS::new(vec![2, -1, -1]));
        assert_eq!(
            weighted.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])).unwrap(),
            Ordering::Less
        );
        let zero = TermOrder::WeightRefinedLex(OnePS::trivial(3));
        assert_eq!(
            zero.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])).unwrap(),
            Ordering::Greater
        );
        assert!(weighted.compare(&m(&[1, 0]), &m(&[0, 1])).is_err());
    }

    #[test]
    fn elimination_prefers_dropped_block() {
        let ord = TermOrder::elimination(3, &[0]);
        // x beats any monomial free of x, whatever its degree.
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 1, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..4, 3).prop_map(Monomial::new)
    }

    fn arb_order() -> impl Strategy<Value = TermOrder> {
        prop_oneof![
            Just(TermOrder::GradedLex),
            prop::collection::vec(-3i64..4, 3)
                .prop_map(|w| TermOrder::WeightRefinedLex(OnePS::new(w))),
            (0usize..3).prop_map(|i| TermOrder::elimination(3, &[i])),
        ]
    }

    proptest! {
        #[test]
        fn multiplicative(a in arb_mono(), b in arb_mono(), c in arb_mono(), ord in arb_order()) {
            prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&a.mul(&c), &b.mul(&c)));
        }

        #[test]
        fn total_and_antisymmetric(a in arb_mono(), b in arb_mono(), ord in arb_order()) {
            prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&b, &a).reverse());
            prop_assert_eq!(ord.cmp(&a, &b) == Ordering::Equal, a == b);
        }

        #[test]
        fn one_is_minimal(a in arb_mono(), ord in arb_order()) {
            prop_assert_ne!(ord.cmp(&Monomial::one(3), &a), Ordering::Greater);
        }

        #[test]
        fn sort_key_agrees(a in arb_mono(), b in arb_mono(), ord in arb_order()) {
            prop_assert_eq!(ord.cmp(&a, &b), ord.sort_key(&a).cmp(&ord.sort_key(&b)));
        }
    }
}
