use super::{Polynomial, TermOrder};
use crate::error::{check_dim, Error, Result};
use std::cmp::Ordering;

/// Generators of a homogeneous ideal.
///
/// Zero generators are dropped; the rest are scaled to be monic under
/// graded lex, deduplicated, and sorted by (degree, leading monomial).
/// The empty list is the zero ideal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HomogeneousIdeal {
    nvars: usize,
    generators: Vec<Polynomial>,
}

impl HomogeneousIdeal {
    pub fn new(nvars: usize, generators: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut gens = Vec::new();
        for g in generators {
            check_dim(nvars, g.nvars())?;
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
            gens.push(g.monic(&TermOrder::GradedLex));
        }
        gens.sort_by(canonical_cmp);
        gens.dedup();
        Ok(HomogeneousIdeal {
            nvars,
            generators: gens,
        })
    }

    pub fn zero(nvars: usize) -> Self {
        HomogeneousIdeal {
            nvars,
            generators: Vec::new(),
        }
    }

    /// The ideal generated by the listed coordinates.
    pub fn coordinates(nvars: usize, vars: &[usize]) -> Self {
        Self::new(nvars, vars.iter().map(|&i| Polynomial::var(nvars, i))).expect("linear forms")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn max_degree(&self) -> u32 {
        self.generators
            .iter()
            .filter_map(Polynomial::homogeneous_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn degree_sum(&self) -> u32 {
        self.generators
            .iter()
            .filter_map(Polynomial::homogeneous_degree)
            .sum()
    }

    /// `self + <extra>`.
    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        Self::new(self.nvars, self.generators.iter().cloned().chain(extra))
    }

    /// `true` iff no generator involves any variable outside `keep`.
    pub fn supported_on(&self, keep: &[bool]) -> bool {
        self.generators
            .iter()
            .all(|g| g.terms().all(|(m, _)| m.supported_on(keep)))
    }

    /// Generators rendered with `names`, in canonical order.
    pub fn generator_strings(&self, names: &[String], order: &TermOrder) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| g.fmt_with(names, order))
            .collect()
    }
}

fn canonical_cmp(a: &Polynomial, b: &Polynomial) -> Ordering {
    let ord = TermOrder::GradedLex;
    let da = a.homogeneous_degree();
    let db = b.homogeneous_degree();
    da.cmp(&db)
        .then_with(|| {
            ord.cmp(
                a.leading_monomial(&ord).unwrap(),
                b.leading_monomial(&ord).unwrap(),
            )
        })
        .then_with(|| {
            let ta: Vec<_> = a.terms().collect();
            let tb: Vec<_> = b.terms().collect();
            ta.cmp(&tb)
        })
}
