//! Block bookkeeping for a parabolic subgroup of `SL(V)` graded by a
//! one-parameter subgroup, and the staged subgroups used for quotienting
//! in stages.
//!
//! Basis vectors of `V` are ordered block by block: block 1 carries the
//! largest weight. Variable `k` of a polynomial ring is the coordinate
//! dual to basis vector `k`.

use crate::error::{check_dim, Error, Result};
use crate::linalg::{determinant, Echelon};
use crate::oracle::degree_part;
use crate::poly::{HomogeneousIdeal, OnePS, Polynomial, Scalar};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Distinct weights `beta_1 > ... > beta_l` with multiplicities, summing
/// to zero with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedOnePS {
    weights: Vec<i64>,
    multiplicities: Vec<usize>,
}

impl GradedOnePS {
    pub fn new(weights: Vec<i64>, multiplicities: Vec<usize>) -> Result<Self> {
        if weights.len() != multiplicities.len() {
            return Err(Error::Precondition(
                "weights and multiplicities differ in length".into(),
            ));
        }
        if weights.len() < 2 {
            return Err(Error::Precondition(
                "need at least two distinct weights".into(),
            ));
        }
        if weights.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Precondition(
                "weights must be strictly decreasing".into(),
            ));
        }
        if multiplicities.contains(&0) {
            return Err(Error::Precondition(
                "multiplicities must be positive".into(),
            ));
        }
        let total: i64 = weights
            .iter()
            .zip(&multiplicities)
            .map(|(b, &m)| b * m as i64)
            .sum();
        if total != 0 {
            return Err(Error::Precondition(format!(
                "weighted sum of weights is {total}, not 0"
            )));
        }
        Ok(GradedOnePS {
            weights,
            multiplicities,
        })
    }

    /// Default grading for a length-`n` flag with `dim W = dim_w`:
    /// multiplicities `(dim_w, 1, ..., 1)`, `beta_1 = n(n+1)/2` and
    /// `beta_k = -(k-1) dim_w` for `k >= 2`.
    pub fn flag_default(n: usize, dim_w: usize) -> Result<Self> {
        let mut weights = vec![(n * (n + 1) / 2) as i64];
        weights.extend((1..=n).map(|k| -((k * dim_w) as i64)));
        let mut mults = vec![dim_w];
        mults.extend(std::iter::repeat_n(1, n));
        Self::new(weights, mults)
    }

    /// Number of distinct weights `l`.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// `dim V`.
    pub fn dim(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    /// 1-based block containing basis vector `k`.
    pub fn block_of(&self, k: usize) -> usize {
        let mut acc = 0;
        for (b, m) in self.multiplicities.iter().enumerate() {
            acc += m;
            if k < acc {
                return b + 1;
            }
        }
        panic!("index {k} outside a space of dimension {acc}")
    }

    /// The subgroup itself.
    pub fn one_ps(&self) -> OnePS {
        let s: Vec<i64> = (0..self.dim())
            .map(|k| self.weights[self.block_of(k) - 1])
            .collect();
        OnePS::from_vector_weights(&s)
    }

    /// `m_{<=i}`.
    pub fn m_le(&self, i: usize) -> usize {
        self.multiplicities[..i].iter().sum()
    }

    /// `m_{>i}`.
    pub fn m_gt(&self, i: usize) -> usize {
        self.multiplicities[i..].iter().sum()
    }

    fn avg(&self, blocks: std::ops::Range<usize>) -> Scalar {
        let num: i64 = blocks
            .clone()
            .map(|b| self.weights[b] * self.multiplicities[b] as i64)
            .sum();
        let den: usize = blocks.map(|b| self.multiplicities[b]).sum();
        Scalar::new(num.into(), (den as i64).into())
    }

    fn check_stage(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.len() {
            return Err(Error::Precondition(format!(
                "stage {i} outside 1..{}",
                self.len() - 1
            )));
        }
        Ok(())
    }
}

/// Averages and two-weight subgroups attached to stage `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageData {
    pub stage: usize,
    pub beta_le: Scalar,
    pub beta_gt: Scalar,
    pub m_le: usize,
    pub m_gt: usize,
    /// Common denominator of the averages; the subgroups below are the
    /// exact ones scaled by this factor.
    pub scale: i64,
    /// `lambda^[i] = diag(t^{beta_<=i}, t^{beta_>i})`, scaled.
    pub lambda_bracket: OnePS,
    /// `lambda^(i) = diag(t^{beta_1}, ..., t^{beta_i}, t^{beta_>i})`, scaled.
    pub lambda_paren: OnePS,
}

pub fn stage_data(g: &GradedOnePS, i: usize) -> Result<StageData> {
    g.check_stage(i)?;
    let beta_le = g.avg(0..i);
    let beta_gt = g.avg(i..g.len());
    let scale_big = beta_le.denom().lcm(beta_gt.denom());
    let scale: i64 =
        i64::try_from(scale_big).map_err(|_| Error::InternalLimit("scale overflow".into()))?;
    let to_int = |q: &Scalar| -> i64 {
        i64::try_from((q * Scalar::from_integer(scale.into())).to_integer()).expect("fits")
    };
    let (le, gt) = (to_int(&beta_le), to_int(&beta_gt));
    let m_le = g.m_le(i);
    let m_gt = g.m_gt(i);
    let bracket: Vec<i64> = (0..g.dim())
        .map(|k| if g.block_of(k) <= i { le } else { gt })
        .collect();
    let paren: Vec<i64> = (0..g.dim())
        .map(|k| {
            let b = g.block_of(k);
            if b <= i {
                g.weights[b - 1] * scale
            } else {
                gt
            }
        })
        .collect();
    Ok(StageData {
        stage: i,
        beta_le,
        beta_gt,
        m_le,
        m_gt,
        scale,
        lambda_bracket: OnePS::from_vector_weights(&bracket),
        lambda_paren: OnePS::from_vector_weights(&paren),
    })
}

/// A square matrix acting on `V` in the block basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMatrix {
    entries: Vec<Vec<Scalar>>,
}

impl BlockMatrix {
    pub fn new(entries: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = entries.len();
        for row in &entries {
            check_dim(n, row.len())?;
        }
        Ok(BlockMatrix { entries })
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        if r == c {
                            Scalar::one()
                        } else {
                            Scalar::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        BlockMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<Scalar>] {
        &self.entries
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r][c] = v;
    }
}

/// Membership of a matrix in the groups attached to the grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockProfile {
    pub det_one: bool,
    pub parabolic: bool,
    pub levi: bool,
    /// Centre of the Levi factor: scalar diagonal blocks, determinant 1.
    pub centre: bool,
    /// Semisimple part: block diagonal with each block of determinant 1.
    pub semisimple: bool,
    pub unipotent: bool,
    /// `U^[i]` for `i = 1..l-1` (index 0 is stage 1).
    pub unipotent_bracket: Vec<bool>,
    /// `U^(i)` for `i = 1..l-1`.
    pub unipotent_paren: Vec<bool>,
}

pub fn block_profile(a: &BlockMatrix, g: &GradedOnePS) -> Result<BlockProfile> {
    check_dim(g.dim(), a.size())?;
    let n = a.size();
    let e = &a.entries;
    let blk: Vec<usize> = (0..n).map(|k| g.block_of(k)).collect();
    let nonzero_where = |pred: &dyn Fn(usize, usize) -> bool| {
        (0..n).any(|r| (0..n).any(|c| pred(blk[r], blk[c]) && !e[r][c].is_zero()))
    };
    let det_one = determinant(e).is_one();
    let parabolic = det_one && !nonzero_where(&|p, q| p > q);
    let levi = parabolic && !nonzero_where(&|p, q| p != q);
    let diag_block = |b: usize| -> Vec<Vec<Scalar>> {
        let idx: Vec<usize> = (0..n).filter(|&k| blk[k] == b).collect();
        idx.iter()
            .map(|&r| idx.iter().map(|&c| e[r][c].clone()).collect())
            .collect()
    };
    let blocks: Vec<Vec<Vec<Scalar>>> = (1..=g.len()).map(diag_block).collect();
    let is_scalar = |m: &Vec<Vec<Scalar>>| {
        m.iter().enumerate().all(|(r, row)| {
            row.iter()
                .enumerate()
                .all(|(c, v)| if r == c { *v == m[0][0] } else { v.is_zero() })
        })
    };
    let is_identity =
        |m: &Vec<Vec<Scalar>>| is_scalar(m) && m.first().is_some_and(|row| row[0].is_one());
    let centre = levi && blocks.iter().all(is_scalar);
    let semisimple = levi && blocks.iter().all(|b| determinant(b).is_one());
    let unipotent = parabolic && blocks.iter().all(is_identity);
    let unipotent_bracket = (1..g.len())
        .map(|i| unipotent && !nonzero_where(&|p, q| p < q && (q <= i || p > i)))
        .collect();
    let unipotent_paren = (1..g.len())
        .map(|i| unipotent && !nonzero_where(&|p, q| p < q && p > i))
        .collect();
    Ok(BlockProfile {
        det_one,
        parabolic,
        levi,
        centre,
        semisimple,
        unipotent,
        unipotent_bracket,
        unipotent_paren,
    })
}

/// Matrix positions `(r, c)` spanning `Lie U^[j]`: `block(r) <= j < block(c)`.
pub fn lie_u_bracket_positions(g: &GradedOnePS, j: usize) -> Vec<(usize, usize)> {
    let n = g.dim();
    let mut out = Vec::new();
    for r in 0..n {
        for c in 0..n {
            if g.block_of(r) <= j && j < g.block_of(c) {
                out.push((r, c));
            }
        }
    }
    out
}

/// Image of `f` under the derivation induced by the elementary matrix
/// `E_{rc}` (sending `v_c` to `v_r`): `x_c * df/dx_r`.
fn elementary_derivation(f: &Polynomial, r: usize, c: usize) -> Polynomial {
    f.partial_derivative(r).mul(&Polynomial::var(f.nvars(), c))
}

/// Dimension of the Lie algebra of the `U^[j]`-stabiliser of `X`.
pub fn lie_unipotent_stabilizer_dim(
    ideal: &HomogeneousIdeal,
    g: &GradedOnePS,
    j: usize,
) -> Result<usize> {
    lie_unipotent_stabilizer_dim_all(std::slice::from_ref(ideal), g, j)
}

/// Dimension of `{nu in Lie U^[j] : nu preserves every ideal in the list}`.
///
/// A derivation preserves an ideal iff it maps the generators into it,
/// so the condition is checked exactly in each generator degree.
pub fn lie_unipotent_stabilizer_dim_all(
    ideals: &[HomogeneousIdeal],
    g: &GradedOnePS,
    j: usize,
) -> Result<usize> {
    g.check_stage(j)?;
    for ideal in ideals {
        check_dim(g.dim(), ideal.nvars())?;
    }
    let positions = lie_u_bracket_positions(g, j);
    // one row per unknown; columns enumerate (ideal, generator, monomial)
    let mut rows: Vec<crate::linalg::SparseRow> = vec![Default::default(); positions.len()];
    let mut offset = 0usize;
    for ideal in ideals {
        let mut parts = std::collections::BTreeMap::new();
        for gen in ideal.generators() {
            let d = gen.homogeneous_degree().expect("homogeneous");
            let part = parts.entry(d).or_insert_with(|| degree_part(ideal, d));
            for (k, &(r, c)) in positions.iter().enumerate() {
                let image = elementary_derivation(gen, r, c);
                let residue = part.echelon.reduce(part.basis.row_of(&image));
                for (col, v) in residue {
                    rows[k].insert(offset + col, v);
                }
            }
            offset += part.basis.len();
        }
    }
    let mut e = Echelon::new();
    for row in rows {
        e.insert(row);
    }
    Ok(positions.len() - e.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::scalar;

    fn g3() -> GradedOnePS {
        GradedOnePS::new(vec![2, -1, -3], vec![2, 1, 1]).unwrap()
    }

    #[test]
    fn validates_gradings() {
        assert!(GradedOnePS::new(vec![1, 1], vec![1, 1]).is_err());
        assert!(GradedOnePS::new(vec![1, -2], vec![1, 1]).is_err());
        assert!(GradedOnePS::new(vec![0], vec![3]).is_err());
        let d = GradedOnePS::flag_default(1, 2).unwrap();
        assert_eq!(d.weights(), &[1, -2]);
        assert_eq!(d.multiplicities(), &[2, 1]);
        let d = GradedOnePS::flag_default(2, 2).unwrap();
        assert_eq!(d.weights(), &[3, -2, -4]);
    }

    #[test]
    fn stage_examples() {
        let s = stage_data(&g3(), 1).unwrap();
        assert_eq!(
            (s.beta_le.clone(), s.beta_gt.clone()),
            (scalar(2), scalar(-2))
        );
        assert_eq!(s.lambda_bracket.vector_weights(), vec![2, 2, -2, -2]);
        assert_eq!(s.lambda_paren.vector_weights(), vec![2, 2, -2, -2]);
        let s = stage_data(&g3(), 2).unwrap();
        assert_eq!(
            (s.beta_le.clone(), s.beta_gt.clone()),
            (scalar(1), scalar(-3))
        );
        assert_eq!(s.lambda_bracket.vector_weights(), vec![1, 1, 1, -3]);
        assert_eq!(s.lambda_paren.vector_weights(), vec![2, 2, -1, -3]);
        let two = GradedOnePS::new(vec![1, -2], vec![2, 1]).unwrap();
        let s = stage_data(&two, 1).unwrap();
        assert_eq!(s.lambda_bracket, two.one_ps());
        assert!(stage_data(&g3(), 3).is_err());
        assert!(stage_data(&g3(), 0).is_err());
    }

    #[test]
    fn rational_averages_are_scaled() {
        let g = GradedOnePS::new(vec![3, -1, -2], vec![1, 1, 1]).unwrap();
        let s = stage_data(&g, 1).unwrap();
        assert_eq!(s.beta_gt, Scalar::new((-3).into(), 2.into()));
        assert_eq!(s.scale, 2);
        assert_eq!(s.lambda_bracket.vector_weights(), vec![6, -3, -3]);
        let balance = Scalar::from_integer((s.m_le as i64).into()) * &s.beta_le
            + Scalar::from_integer((s.m_gt as i64).into()) * &s.beta_gt;
        assert!(balance.is_zero());
    }

    #[test]
    fn profiles() {
        let g = g3();
        let id = block_profile(&BlockMatrix::identity(4), &g).unwrap();
        assert!(id.parabolic && id.levi && id.centre && id.semisimple && id.unipotent);
        assert!(id.unipotent_bracket.iter().all(|&b| b));

        // entry in block (1, 3): row 0, column 3
        let mut e = BlockMatrix::identity(4);
        e.set(0, 3, scalar(5));
        let p = block_profile(&e, &g).unwrap();
        assert!(p.unipotent && !p.levi);
        assert_eq!(p.unipotent_bracket, vec![true, true]);
        // entry in block (2, 3): in U^[2] only
        let mut e = BlockMatrix::identity(4);
        e.set(2, 3, scalar(1));
        let p = block_profile(&e, &g).unwrap();
        assert_eq!(p.unipotent_bracket, vec![false, true]);
        assert_eq!(p.unipotent_paren, vec![false, true]);

        // block diagonal, blocks of determinant 1
        let mut b = BlockMatrix::identity(4);
        b.set(0, 1, scalar(3));
        let p = block_profile(&b, &g).unwrap();
        assert!(p.levi && p.semisimple && !p.unipotent && !p.centre);

        let mut lower = BlockMatrix::identity(4);
        lower.set(3, 0, scalar(1));
        assert!(!block_profile(&lower, &g).unwrap().parabolic);
    }

    #[test]
    fn stabiliser_of_zero_ideal_is_everything() {
        let g = g3();
        assert_eq!(
            lie_unipotent_stabilizer_dim(&HomogeneousIdeal::zero(4), &g, 1).unwrap(),
            lie_u_bracket_positions(&g, 1).len()
        );
        assert_eq!(lie_u_bracket_positions(&g, 1).len(), 4);
        assert_eq!(lie_u_bracket_positions(&g, 2).len(), 3);
    }

    #[test]
    fn ideal_in_late_coordinates_is_fully_stabilised() {
        // generators avoid the block-1 coordinates, which are the only
        // ones the derivations x_c d/dx_r differentiate
        let g = GradedOnePS::new(vec![1, -1], vec![2, 2]).unwrap();
        let f = Polynomial::from_int_terms(4, &[(1, &[0, 0, 2, 0]), (1, &[0, 0, 0, 2])]);
        let i = HomogeneousIdeal::new(4, [f]).unwrap();
        assert_eq!(lie_unipotent_stabilizer_dim(&i, &g, 1).unwrap(), 4);
    }

    #[test]
    fn three_points_coned_have_trivial_stabiliser() {
        // W = <e0, e1>, v1 = e2; cone over 3 points of P(W) with vertex [v1]
        let g = GradedOnePS::new(vec![1, -2], vec![2, 1]).unwrap();
        let f = Polynomial::from_int_terms(3, &[(1, &[2, 1, 0]), (-1, &[1, 2, 0])]);
        let i = HomogeneousIdeal::new(3, [f]).unwrap();
        assert_eq!(lie_unipotent_stabilizer_dim(&i, &g, 1).unwrap(), 0);
    }
}
