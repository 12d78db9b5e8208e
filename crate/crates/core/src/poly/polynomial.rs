use super::{Monomial, OnePS, Scalar, TermOrder};
use crate::error::{check_dim, Error, Result};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial with exact rational coefficients. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::from_terms(nvars, [(Monomial::one(nvars), c)])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_terms(nvars, [(Monomial::var(nvars, i), Scalar::one())])
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let n = m.nvars();
        Self::from_terms(n, [(m, c)])
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            p.add_term(m, c);
        }
        p
    }

    /// Builds from integer coefficients, mostly for tests.
    pub fn from_int_terms(nvars: usize, terms: &[(i64, &[u32])]) -> Self {
        Self::from_terms(
            nvars,
            terms.iter().map(|(c, e)| {
                (
                    Monomial::new(e.iter().copied()),
                    Scalar::from_integer((*c).into()),
                )
            }),
        )
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Degree of a homogeneous polynomial, `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Term that is maximal under `order`.
    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Scales so the leading coefficient under `order` is 1.
    pub fn monic(&self, order: &TermOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Scalar::one())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.nvars, Scalar::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        check_dim(self.nvars, point.len())?;
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    v *= x;
                }
            }
            total += v;
        }
        Ok(total)
    }

    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let lowered = Monomial::var(self.nvars, i)
                .quotient_of(m)
                .expect("x_i divides m");
            out.add_term(lowered, c * Scalar::from_integer(e.into()));
        }
        out
    }

    /// Sets the variables with `zero[i]` to 0.
    pub fn substitute_zero(&self, zero: &[bool]) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponents().iter().zip(zero).all(|(&e, &z)| !z || e == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-indexes variables; see [`Monomial::remap`].
    pub fn remap(&self, map: &[Option<usize>], target_nvars: usize) -> Option<Polynomial> {
        let mut out = Polynomial::zero(target_nvars);
        for (m, c) in &self.terms {
            out.add_term(m.remap(map, target_nvars)?, c.clone());
        }
        Some(out)
    }

    pub fn uses_variable(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(i) > 0)
    }

    /// Sum of the terms of minimal `w_lambda`.
    pub fn initial_part(&self, lambda: &OnePS) -> Result<Polynomial> {
        check_dim(lambda.nvars(), self.nvars)?;
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(self.initial_part_unchecked(lambda))
    }

    pub(crate) fn initial_part_unchecked(&self, lambda: &OnePS) -> Polynomial {
        let w = lambda.weights();
        let Some(min) = self.terms.keys().map(|m| m.dot(w)).min() else {
            return self.clone();
        };
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.dot(w) == min)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Renders with the given variable names, terms in decreasing `order`.
    pub fn fmt_with(&self, names: &[String], order: &TermOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.cmp(b.0, a.0));
        let mut out = String::new();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.fmt_with(names);
            if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&abs.to_string());
                if !m.is_one() {
                    out.push('*');
                    out.push_str(&mono);
                }
            }
        }
        out
    }
}

/// Default variable names `x0, x1, ...`.
pub fn default_names(nvars: usize) -> Vec<String> {
    (0..nvars).map(|i| format!("x{i}")).collect()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&default_names(self.nvars), &TermOrder::GradedLex))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn conic() -> Polynomial {
        // xz - y^2
        Polynomial::from_int_terms(3, &[(1, &[1, 0, 1]), (-1, &[0, 2, 0])])
    }

    #[test]
    fn initial_part_examples() {
        let f = conic();
        let l = OnePS::new(vec![2, -1, -1]);
        assert_eq!(
            f.initial_part(&l).unwrap(),
            Polynomial::from_int_terms(3, &[(-1, &[0, 2, 0])])
        );
        assert_eq!(f.initial_part(&OnePS::new(vec![1, 1, 1])).unwrap(), f);
        let x = Polynomial::var(3, 0);
        assert_eq!(x.initial_part(&l).unwrap(), x);
        assert_eq!(
            Polynomial::zero(3).initial_part(&l),
            Err(Error::ZeroPolynomial)
        );
        let mixed = Polynomial::from_int_terms(3, &[(1, &[1, 0, 1]), (-1, &[0, 3, 0])]);
        assert_eq!(mixed.initial_part(&l), Err(Error::NotHomogeneous));
    }

    #[test]
    fn display_and_derivative() {
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        assert_eq!(conic().fmt_with(&names, &TermOrder::GradedLex), "x*z - y^2");
        let d = conic().partial_derivative(1);
        assert_eq!(d.fmt_with(&names, &TermOrder::GradedLex), "-2*y");
        let half = Polynomial::constant(3, Scalar::new(1.into(), 2.into()));
        assert_eq!(half.fmt_with(&names, &TermOrder::GradedLex), "1/2");
    }

    fn arb_homogeneous(deg: u32) -> impl Strategy<Value = Polynomial> {
        let monos = super::super::monomials_of_degree(3, deg);
        prop::collection::vec(-3i64..4, monos.len()).prop_map(move |cs| {
            Polynomial::from_terms(
                3,
                monos
                    .iter()
                    .cloned()
                    .zip(cs.into_iter().map(|c| Scalar::from_integer(c.into()))),
            )
        })
    }

    proptest! {
        #[test]
        fn homogeneity_closure(f in arb_homogeneous(2), g in arb_homogeneous(2), h in arb_homogeneous(1)) {
            prop_assert!(f.add(&g).is_homogeneous());
            prop_assert!(f.mul(&h).is_homogeneous());
        }

        #[test]
        fn initial_part_idempotent(f in arb_homogeneous(3), w in prop::collection::vec(-3i64..4, 3)) {
            prop_assume!(!f.is_zero());
            let l = OnePS::new(w);
            let once = f.initial_part(&l).unwrap();
            prop_assert_eq!(once.initial_part(&l).unwrap(), once);
        }

        #[test]
        fn rational_exactness(p in 1i64..1000, q in 1i64..1000, sp in any::<bool>()) {
            let p = if sp { -p } else { p };
            let a = Scalar::new(p.into(), q.into());
            prop_assert!((a.clone() * a.recip()).is_one());
            prop_assert!(a.denom().is_positive());
        }
    }
}
