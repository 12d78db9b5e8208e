//! Hilbert functions and polynomials, weights of graded pieces, Chow
//! weights, and Chow stability of point configurations.

mod interp;
mod points;
mod weights;

pub use interp::UniPoly;
pub use points::{
    chow_points_stability, PointConfiguration, PointStability, StabilityVerdict, Witness,
};
pub use weights::{
    chow_weight_join, chow_weight_join_tensor, chow_weight_numeric, chow_weight_single_space,
    is_fixed_by, weighted_slice_weight, WeightSeries,
};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::limits::max_degree;
use crate::oracle;
use crate::poly::{scalar, HomogeneousIdeal, Scalar, TermOrder};
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

/// `dim (S/I)_m`, from the rank of the degree-`m` multiple matrix.
pub fn hilbert_function(ideal: &HomogeneousIdeal, m: u32) -> u64 {
    oracle::quotient_dim(ideal, m) as u64
}

/// Hilbert function, polynomial and the invariants read off from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Sampled values, from degree 0 through the end of the verified window.
    pub hilbert_function: BTreeMap<u32, u64>,
    pub hilbert_polynomial: UniPoly,
    /// Least degree from which the function agrees with the polynomial.
    pub stabilization_degree: u32,
    /// Projective dimension; `-1` for the empty scheme.
    pub dimension: i64,
    pub degree: u64,
}

pub(crate) fn factorial(n: u64) -> Scalar {
    (1..=n).fold(scalar(1), |acc, k| acc * scalar(k as i64))
}

/// First degree at which a polynomial fit is attempted.
pub(crate) fn window_start(ideal: &HomogeneousIdeal) -> u32 {
    ideal.degree_sum().max(2 * ideal.max_degree())
}

/// Finds the Hilbert polynomial by fitting `nvars` consecutive values and
/// verifying the fit on `2 * nvars` more.
///
/// Values come from standard monomials of a Gröbner basis; the
/// rank-based [`hilbert_function`] is the independent cross-check.
pub fn hilbert_data(ideal: &HomogeneousIdeal) -> Result<HilbertData> {
    let gb = buchberger(ideal, &TermOrder::GradedLex)?;
    hilbert_data_from(&gb, ideal.nvars(), window_start(ideal))
}

pub(crate) fn hilbert_data_from(
    gb: &GroebnerBasis,
    nvars: usize,
    start: u32,
) -> Result<HilbertData> {
    let fit = nvars.max(1);
    let check = 2 * fit;
    let cap = max_degree() as u32;
    let mut values: BTreeMap<u32, u64> = BTreeMap::new();
    let value = |m: u32, values: &mut BTreeMap<u32, u64>| -> u64 {
        *values.entry(m).or_insert_with(|| gb.quotient_dim(nvars, m))
    };
    let mut s = start;
    loop {
        if s as usize + fit + check > cap as usize {
            return Err(Error::InternalLimit(format!(
                "Hilbert function did not stabilise below degree {cap}"
            )));
        }
        let samples: Vec<(i64, Scalar)> = (s..s + fit as u32)
            .map(|m| (i64::from(m), scalar(value(m, &mut values) as i64)))
            .collect();
        let poly = UniPoly::interpolate(&samples);
        let bad = (s + fit as u32..s + (fit + check) as u32)
            .find(|&m| poly.eval(i64::from(m)) != scalar(value(m, &mut values) as i64));
        match bad {
            Some(m) => s = m + 1 - fit as u32,
            None => {
                let mut stab = s;
                while stab > 0
                    && poly.eval(i64::from(stab - 1)) == scalar(value(stab - 1, &mut values) as i64)
                {
                    stab -= 1;
                }
                for m in 0..stab {
                    value(m, &mut values);
                }
                return finish(values, poly, stab);
            }
        }
    }
}

fn finish(values: BTreeMap<u32, u64>, poly: UniPoly, stab: u32) -> Result<HilbertData> {
    let (dimension, degree) = match poly.degree() {
        None => (-1, 0),
        Some(n) => {
            let d = poly.leading_coefficient() * factorial(n as u64);
            if !d.is_integer() || d.is_negative() || d.is_zero() {
                return Err(Error::InternalLimit(format!(
                    "fitted Hilbert polynomial {poly} has non-integral degree"
                )));
            }
            let d: u64 = d
                .to_integer()
                .try_into()
                .map_err(|_| Error::InternalLimit("degree does not fit in 64 bits".into()))?;
            (n as i64, d)
        }
    };
    Ok(HilbertData {
        hilbert_function: values,
        hilbert_polynomial: poly,
        stabilization_degree: stab,
        dimension,
        degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    fn p(n: usize, t: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_int_terms(n, t)
    }

    fn twisted_cubic() -> HomogeneousIdeal {
        HomogeneousIdeal::new(
            4,
            [
                p(4, &[(1, &[1, 0, 1, 0]), (-1, &[0, 2, 0, 0])]),
                p(4, &[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2, 0])]),
                p(4, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn hilbert_function_examples() {
        assert_eq!(hilbert_function(&HomogeneousIdeal::zero(3), 2), 6);
        let conic = HomogeneousIdeal::new(3, [p(3, &[(1, &[1, 0, 1]), (-1, &[0, 2, 0])])]).unwrap();
        assert_eq!(hilbert_function(&conic, 3), 7);
        assert_eq!(
            hilbert_function(&HomogeneousIdeal::coordinates(3, &[0, 1, 2]), 1),
            0
        );
    }

    #[test]
    fn hilbert_data_examples() {
        let h = hilbert_data(&twisted_cubic()).unwrap();
        assert_eq!(h.hilbert_polynomial.to_string(), "3*t + 1");
        assert_eq!((h.dimension, h.degree), (1, 3));
        assert_eq!(h.stabilization_degree, 0);

        let h = hilbert_data(&HomogeneousIdeal::zero(3)).unwrap();
        assert_eq!(h.hilbert_polynomial.to_string(), "1/2*t^2 + 3/2*t + 1");
        assert_eq!((h.dimension, h.degree), (2, 1));

        // four points [1:0:0], [0:1:0], [0:0:1], [1:1:1]
        let four = HomogeneousIdeal::new(
            3,
            [
                p(3, &[(1, &[1, 1, 0]), (-1, &[1, 0, 1])]),
                p(3, &[(1, &[0, 1, 1]), (-1, &[1, 0, 1])]),
            ],
        )
        .unwrap();
        let h = hilbert_data(&four).unwrap();
        assert_eq!(h.hilbert_polynomial.to_string(), "4");
        assert_eq!((h.dimension, h.degree), (0, 4));
        for (m, v) in &h.hilbert_function {
            assert_eq!(*v, hilbert_function(&four, *m));
        }
    }

    #[test]
    fn empty_scheme() {
        let h = hilbert_data(&HomogeneousIdeal::coordinates(3, &[0, 1, 2])).unwrap();
        assert_eq!(h.dimension, -1);
        assert_eq!(h.degree, 0);
        assert_eq!(h.stabilization_degree, 1);
    }
}
