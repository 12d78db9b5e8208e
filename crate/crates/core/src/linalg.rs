//! Sparse exact row reduction over the rationals.
//!
//! Rows are reduced so that every stored row starts at its pivot column
//! with coefficient 1 and no two rows share a pivot. The first nonzero
//! column of any combination of stored rows is then the smallest pivot
//! among the rows used, which is what the weight-filtration oracle relies
//! on.

use crate::poly::{Monomial, Polynomial, Scalar};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

pub type SparseRow = BTreeMap<usize, Scalar>;

#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseRow>,
    pivots: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduces `row` against the stored pivots, left to right.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut cursor = 0usize;
        loop {
            let hit = row
                .range(cursor..)
                .find(|(c, _)| self.pivots.contains_key(c))
                .map(|(c, v)| (*c, v.clone()));
            let Some((col, factor)) = hit else {
                return row;
            };
            let pivot_row = &self.rows[self.pivots[&col]];
            for (c, v) in pivot_row {
                let entry = row.entry(*c).or_insert_with(Scalar::zero);
                *entry -= &factor * v;
                if entry.is_zero() {
                    row.remove(c);
                }
            }
            cursor = col + 1;
        }
    }

    /// Adds `row` to the span; returns `false` if it was already there.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some((&col, lead)) = row.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        let row: SparseRow = row.into_iter().map(|(c, v)| (c, v * &inv)).collect();
        self.pivots.insert(col, self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Fully reduced basis, sorted by pivot. Equal spans give equal output.
    pub fn rref(&self) -> Vec<SparseRow> {
        let mut order: Vec<(usize, usize)> = self.pivots.iter().map(|(c, r)| (*c, *r)).collect();
        order.sort();
        let mut out: Vec<SparseRow> = order.iter().map(|(_, r)| self.rows[*r].clone()).collect();
        // back substitution, last pivot first
        for i in (0..out.len()).rev() {
            let pcol = order[i].0;
            let (head, tail) = out.split_at_mut(i);
            let pivot_row = &tail[0];
            for row in head.iter_mut() {
                if let Some(f) = row.get(&pcol).cloned() {
                    for (c, v) in pivot_row {
                        let e = row.entry(*c).or_insert_with(Scalar::zero);
                        *e -= &f * v;
                        if e.is_zero() {
                            row.remove(c);
                        }
                    }
                }
            }
        }
        out
    }
}

/// A fixed list of monomials of one degree serving as matrix columns.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(monomials: Vec<Monomial>) -> Self {
        let index = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        MonomialBasis { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn column(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of a polynomial supported on this basis.
    pub fn row_of(&self, p: &Polynomial) -> SparseRow {
        p.terms().map(|(m, c)| (self.index[m], c.clone())).collect()
    }

    pub fn polynomial_of(&self, nvars: usize, row: &SparseRow) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            row.iter()
                .map(|(c, v)| (self.monomials[*c].clone(), v.clone())),
        )
    }
}

/// Rank of a dense matrix.
pub fn rank(matrix: &[Vec<Scalar>]) -> usize {
    let mut e = Echelon::new();
    for r in matrix {
        e.insert(dense_to_sparse(r));
    }
    e.rank()
}

pub fn dense_to_sparse(row: &[Scalar]) -> SparseRow {
    row.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

/// Determinant of a square dense matrix by fraction-exact elimination.
pub fn determinant(matrix: &[Vec<Scalar>]) -> Scalar {
    let n = matrix.len();
    let mut a: Vec<Vec<Scalar>> = matrix.to_vec();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Scalar::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &pivot;
            let (above, below) = a.split_at_mut(r);
            for (x, y) in below[0][col..].iter_mut().zip(&above[col][col..]) {
                *x -= &f * y;
            }
        }
    }
    det
}
