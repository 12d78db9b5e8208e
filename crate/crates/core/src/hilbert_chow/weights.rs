use super::{factorial, hilbert_data_from, window_start, UniPoly};
use crate::error::{check_dim, Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::limits::max_degree;
use crate::poly::{scalar, HomogeneousIdeal, OnePS, Scalar, TermOrder};
use std::collections::BTreeMap;

/// Weight of the graded piece `(S/I)_m` under `lambda`.
///
/// The sum of coordinate weights over the standard monomials of degree
/// `m` with respect to the `lambda`-refined order. For a `lambda`-fixed
/// ideal this is the trace of the action on `(S/I)_m`; in general it is
/// the weight of the flat limit's piece.
pub fn weighted_slice_weight(ideal: &HomogeneousIdeal, lambda: &OnePS, m: u32) -> Result<i64> {
    check_dim(ideal.nvars(), lambda.nvars())?;
    let gb = buchberger(ideal, &TermOrder::WeightRefinedLex(lambda.clone()))?;
    Ok(slice_weight(&gb, ideal.nvars(), lambda, m))
}

fn slice_weight(gb: &GroebnerBasis, nvars: usize, lambda: &OnePS, m: u32) -> i64 {
    gb.standard_monomials(nvars, m)
        .iter()
        .map(|mono| mono.dot(lambda.weights()))
        .sum()
}

/// `true` iff the subscheme is fixed by `lambda`: every element of the
/// reduced basis under the refined order is weight-homogeneous.
pub fn is_fixed_by(ideal: &HomogeneousIdeal, lambda: &OnePS) -> Result<bool> {
    check_dim(ideal.nvars(), lambda.nvars())?;
    let gb = buchberger(ideal, &TermOrder::WeightRefinedLex(lambda.clone()))?;
    Ok(basis_is_weight_homogeneous(&gb, lambda))
}

fn basis_is_weight_homogeneous(gb: &GroebnerBasis, lambda: &OnePS) -> bool {
    gb.basis().iter().all(|g| {
        let mut ws = g.terms().map(|(m, _)| m.dot(lambda.weights()));
        let first = ws.next();
        ws.all(|w| Some(w) == first)
    })
}

/// Sampled graded weights and the Chow weight extracted from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSeries {
    pub values: BTreeMap<u32, i64>,
    pub fitted: UniPoly,
    /// Projective dimension of the subscheme.
    pub dimension: i64,
    pub chow_weight: Scalar,
}

/// Chow weight `a_X` of a `lambda`-fixed subscheme.
///
/// The graded weights `w_m` agree with a polynomial of degree `n + 1` for
/// large `m`, whose leading coefficient is `-a_X / (n + 1)!`.
pub fn chow_weight_numeric(ideal: &HomogeneousIdeal, lambda: &OnePS) -> Result<WeightSeries> {
    let nvars = ideal.nvars();
    check_dim(nvars, lambda.nvars())?;
    if !lambda.is_sl_normalized() {
        return Err(Error::Precondition("weights must sum to zero".into()));
    }
    let gb = buchberger(ideal, &TermOrder::WeightRefinedLex(lambda.clone()))?;
    if !basis_is_weight_homogeneous(&gb, lambda) {
        return Err(Error::Precondition(
            "subscheme is not fixed by the subgroup".into(),
        ));
    }
    let hd = hilbert_data_from(&gb, nvars, window_start(ideal))?;
    if hd.dimension < 0 {
        return Err(Error::Precondition("subscheme is empty".into()));
    }
    let n = hd.dimension as usize;
    let fit = n + 2;
    let total = 2 * (n + 3);
    let cap = max_degree() as u32;
    let mut values = BTreeMap::new();
    let mut s = hd.stabilization_degree.max(window_start(ideal));
    loop {
        if s as usize + total > cap as usize {
            return Err(Error::InternalLimit(format!(
                "graded weights did not become polynomial below degree {cap}"
            )));
        }
        for m in s..s + total as u32 {
            values
                .entry(m)
                .or_insert_with(|| slice_weight(&gb, nvars, lambda, m));
        }
        let samples: Vec<(i64, Scalar)> = (s..s + fit as u32)
            .map(|m| (i64::from(m), scalar(values[&m])))
            .collect();
        let poly = UniPoly::interpolate(&samples);
        let bad = (s + fit as u32..s + total as u32)
            .find(|m| poly.eval(i64::from(*m)) != scalar(values[m]));
        match bad {
            Some(m) => s = m + 1 - fit as u32,
            None => {
                let chow_weight = -(factorial(n as u64 + 1) * poly.coefficient(n + 1));
                values.retain(|m, _| *m >= s);
                return Ok(WeightSeries {
                    values,
                    fitted: poly,
                    dimension: n as i64,
                    chow_weight,
                });
            }
        }
    }
}

/// Chow weight of a degree-`d`, dimension-`r` subvariety of a single
/// weight space on which the subgroup acts with weight `b`: `b d (r + 1)`.
pub fn chow_weight_single_space(b: i64, d: u64, r: u64) -> Result<i64> {
    if b == 0 {
        return Err(Error::Precondition("weight b must be nonzero".into()));
    }
    if d == 0 {
        return Err(Error::Precondition("degree must be positive".into()));
    }
    Ok(b * d as i64 * (r as i64 + 1))
}

/// Three-case closed form for the Chow weight of a join `J(Y, P(U))`, with
/// weight `a` on `U`, weight `b` on `W`, and `Y ⊂ P(W)` of degree `d`:
///
/// * `a (dim P(U) + 1)` if `dim Y < dim P(U)`,
/// * `b d (dim Y + 1)` if `dim Y > dim P(U)`,
/// * `(a + b d)(dim Y + 1)` if the dimensions agree.
///
/// This form treats the graded pieces of the join's coordinate ring as
/// direct sums of pieces of `k[U]` and `S(Y)`. It does not agree with
/// [`chow_weight_numeric`] in general; see [`chow_weight_join_tensor`].
pub fn chow_weight_join(a: i64, b: i64, d: u64, dim_y: u64, dim_pu: u64) -> Result<i64> {
    check_join_inputs(a, b, d)?;
    let d = d as i64;
    let (dim_y, dim_pu) = (dim_y as i64, dim_pu as i64);
    Ok(match dim_y.cmp(&dim_pu) {
        std::cmp::Ordering::Less => a * (dim_pu + 1),
        std::cmp::Ordering::Greater => b * d * (dim_y + 1),
        std::cmp::Ordering::Equal => {
            if a + b * d == 0 {
                return Err(Error::Precondition("a + b d must be nonzero".into()));
            }
            (a + b * d) * (dim_y + 1)
        }
    })
}

/// Chow weight of a join computed from the tensor decomposition
/// `S(J)_m = ⊕_{i+j=m} k[U]_i ⊗ S(Y)_j`: `d (a dim U + b (dim Y + 1))`.
///
/// Agrees with [`chow_weight_numeric`] on every join.
pub fn chow_weight_join_tensor(a: i64, b: i64, d: u64, dim_y: u64, dim_pu: u64) -> Result<i64> {
    check_join_inputs(a, b, d)?;
    let d = d as i64;
    Ok(d * (a * (dim_pu as i64 + 1) + b * (dim_y as i64 + 1)))
}

fn check_join_inputs(a: i64, b: i64, d: u64) -> Result<()> {
    if a == 0 || b == 0 {
        return Err(Error::Precondition(
            "weights a and b must be nonzero".into(),
        ));
    }
    if d == 0 {
        return Err(Error::Precondition("degree must be positive".into()));
    }
    Ok(())
}
