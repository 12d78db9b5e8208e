//! Gröbner-free ideal membership by linear algebra in a single degree.
//!
//! For a homogeneous ideal `I` the degree-`d` part `I_d` is spanned by the
//! products `m * g` with `g` a generator and `m` a monomial of degree
//! `d - deg g`. Row reducing that spanning set answers membership and
//! dimension questions independently of any term order.

use crate::error::{check_dim, Result};
use crate::linalg::{Echelon, MonomialBasis, SparseRow};
use crate::poly::{count_monomials, monomials_of_degree, HomogeneousIdeal, Monomial, Polynomial};

/// Row-reduced spanning set of `I_d` over a fixed monomial column basis.
#[derive(Clone, Debug)]
pub struct DegreePart {
    pub degree: u32,
    pub basis: MonomialBasis,
    pub echelon: Echelon,
}

impl DegreePart {
    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Codimension of `I_d` in `S_d`.
    pub fn quotient_dim(&self) -> usize {
        self.basis.len() - self.echelon.rank()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        debug_assert!(f.is_zero() || f.homogeneous_degree() == Some(self.degree));
        self.echelon.contains(self.basis.row_of(f))
    }

    /// Canonical basis of `I_d` as polynomials.
    pub fn polynomials(&self, nvars: usize) -> Vec<Polynomial> {
        self.echelon
            .rref()
            .iter()
            .map(|r| self.basis.polynomial_of(nvars, r))
            .collect()
    }
}

/// `I_d` with columns in the standard monomial enumeration.
pub fn degree_part(ideal: &HomogeneousIdeal, degree: u32) -> DegreePart {
    let basis = MonomialBasis::new(monomials_of_degree(ideal.nvars(), degree));
    degree_part_in(ideal, degree, basis)
}

/// `I_d` with caller-chosen column order (must list every degree-`d` monomial).
pub fn degree_part_in(ideal: &HomogeneousIdeal, degree: u32, basis: MonomialBasis) -> DegreePart {
    debug_assert_eq!(basis.len() as u64, count_monomials(ideal.nvars(), degree));
    let mut echelon = Echelon::new();
    for g in ideal.generators() {
        let gd = g.homogeneous_degree().expect("homogeneous generator");
        if gd > degree {
            continue;
        }
        for m in monomials_of_degree(ideal.nvars(), degree - gd) {
            if echelon.rank() == basis.len() {
                break;
            }
            let row: SparseRow = g
                .terms()
                .map(|(t, c)| (basis.column(&t.mul(&m)).expect("full basis"), c.clone()))
                .collect();
            echelon.insert(row);
        }
    }
    DegreePart {
        degree,
        basis,
        echelon,
    }
}

/// `f in I`, decided in the degree of `f`.
pub fn contains(ideal: &HomogeneousIdeal, f: &Polynomial) -> Result<bool> {
    check_dim(ideal.nvars(), f.nvars())?;
    if f.is_zero() {
        return Ok(true);
    }
    let Some(d) = f.homogeneous_degree() else {
        return Err(crate::Error::NotHomogeneous);
    };
    Ok(degree_part(ideal, d).contains(f))
}

/// `dim (S/I)_d` from the rank of the spanning matrix.
pub fn quotient_dim(ideal: &HomogeneousIdeal, degree: u32) -> usize {
    degree_part(ideal, degree).quotient_dim()
}

/// `I_d = J_d` for every `d <= bound`.
pub fn agree_up_to(a: &HomogeneousIdeal, b: &HomogeneousIdeal, bound: u32) -> Result<bool> {
    check_dim(a.nvars(), b.nvars())?;
    for d in 0..=bound {
        if degree_part(a, d).echelon.rref() != degree_part(b, d).echelon.rref() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Monomials of degree `d`, sorted by the key `key` (stable on ties).
pub fn sorted_monomials(
    nvars: usize,
    degree: u32,
    key: impl Fn(&Monomial) -> i64,
) -> Vec<Monomial> {
    let mut ms = monomials_of_degree(nvars, degree);
    ms.sort_by_key(|m| key(m));
    ms
}
