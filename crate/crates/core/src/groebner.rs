//! Buchberger's algorithm for homogeneous ideals.

use crate::error::{check_dim, Error, Result};
use crate::poly::{
    count_monomials, monomials_of_degree, HomogeneousIdeal, Monomial, Polynomial, Scalar, SortKey,
    TermOrder,
};
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};

/// A Gröbner basis together with the order it was computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    basis: Vec<Polynomial>,
    order: TermOrder,
    reduced: bool,
}

/// Basis element with its leading monomial cached. Always monic.
#[derive(Clone, Debug)]
struct Reducer {
    lead: Monomial,
    poly: Polynomial,
}

impl Reducer {
    fn new(p: Polynomial, order: &TermOrder) -> Reducer {
        let p = p.monic(order);
        let lead = p.leading_monomial(order).expect("nonzero").clone();
        Reducer { lead, poly: p }
    }
}

type Work = BTreeMap<SortKey, (Monomial, Scalar)>;

fn to_work(f: &Polynomial, order: &TermOrder) -> Work {
    f.terms()
        .map(|(m, c)| (order.sort_key(m), (m.clone(), c.clone())))
        .collect()
}

fn subtract_multiple(work: &mut Work, r: &Reducer, q: &Monomial, c: &Scalar, order: &TermOrder) {
    for (t, tc) in r.poly.terms() {
        if *t == r.lead {
            continue;
        }
        let m = t.mul(q);
        let key = order.sort_key(&m);
        let delta = c * tc;
        match work.get_mut(&key) {
            Some(entry) => {
                entry.1 -= delta;
                if entry.1.is_zero() {
                    work.remove(&key);
                }
            }
            None => {
                work.insert(key, (m, -delta));
            }
        }
    }
}

/// Full reduction: no term of the result is divisible by a reducer lead.
fn reduce(f: &Polynomial, reducers: &[Reducer], order: &TermOrder) -> Polynomial {
    let mut work = to_work(f, order);
    let mut rest = Vec::new();
    while let Some((_, (m, c))) = work.pop_last() {
        match reducers.iter().find(|r| r.lead.divides(&m)) {
            Some(r) => {
                let q = r.lead.quotient_of(&m).expect("divides");
                subtract_multiple(&mut work, r, &q, &c, order);
            }
            None => rest.push((m, c)),
        }
    }
    Polynomial::from_terms(f.nvars(), rest)
}

/// Reduces only while the leading term is divisible.
fn top_reduce(f: &Polynomial, reducers: &[Reducer], order: &TermOrder) -> Polynomial {
    let mut work = to_work(f, order);
    loop {
        let Some((_, (m, _))) = work.last_key_value() else {
            return Polynomial::zero(f.nvars());
        };
        let Some(r) = reducers.iter().find(|r| r.lead.divides(m)) else {
            break;
        };
        let (_, (m, c)) = work.pop_last().expect("nonempty");
        let q = r.lead.quotient_of(&m).expect("divides");
        subtract_multiple(&mut work, r, &q, &c, order);
    }
    Polynomial::from_terms(f.nvars(), work.into_values())
}

fn check_order(order: &TermOrder, nvars: usize) -> Result<()> {
    match order.arity() {
        Some(n) => check_dim(n, nvars),
        None => Ok(()),
    }
}

/// S-polynomial of `f` and `g` with respect to their leading terms.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &TermOrder) -> Result<Polynomial> {
    check_dim(f.nvars(), g.nvars())?;
    check_order(order, f.nvars())?;
    let (fm, fc) = f.leading_term(order).ok_or(Error::ZeroPolynomial)?;
    let (gm, gc) = g.leading_term(order).ok_or(Error::ZeroPolynomial)?;
    let l = fm.lcm(gm);
    let a = f.mul_monomial(&fm.quotient_of(&l).expect("lcm"), &fc.recip());
    let b = g.mul_monomial(&gm.quotient_of(&l).expect("lcm"), &gc.recip());
    Ok(a.sub(&b))
}

/// Remainder of `f` on division by `basis`; fully reduced.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &TermOrder) -> Result<Polynomial> {
    check_order(order, f.nvars())?;
    let mut reducers = Vec::with_capacity(basis.len());
    for b in basis {
        check_dim(f.nvars(), b.nvars())?;
        if b.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        reducers.push(Reducer::new(b.clone(), order));
    }
    Ok(reduce(f, &reducers, order))
}

/// Queue entries processed by increasing degree: input generators first
/// within a degree, then S-pairs ordered by their lcm.
#[derive(PartialEq, Eq, PartialOrd, Ord)]
enum Task {
    Generator(usize),
    Pair(SortKey, usize, usize),
}

/// Reduced Gröbner basis of `ideal` under `order`.
///
/// Homogeneous Buchberger with the normal selection strategy: all work is
/// done in increasing degree, so every pair is reduced against a basis
/// that is already complete in lower degrees.
pub fn buchberger(ideal: &HomogeneousIdeal, order: &TermOrder) -> Result<GroebnerBasis> {
    let nvars = ideal.nvars();
    check_order(order, nvars)?;
    let gens = ideal.generators();
    let mut queue: BTreeSet<(u32, Task)> = gens
        .iter()
        .enumerate()
        .map(|(k, g)| {
            (
                g.homogeneous_degree().expect("homogeneous"),
                Task::Generator(k),
            )
        })
        .collect();
    let mut basis: Vec<Reducer> = Vec::new();
    while let Some((_, task)) = queue.pop_first() {
        let candidate = match task {
            Task::Generator(k) => gens[k].clone(),
            Task::Pair(_, i, j) => {
                let (a, b) = (&basis[i], &basis[j]);
                s_polynomial(&a.poly, &b.poly, order)?
            }
        };
        let h = top_reduce(&candidate, &basis, order);
        if h.is_zero() {
            continue;
        }
        let h = reduce(&h, &basis, order);
        let r = Reducer::new(h, order);
        let new = basis.len();
        for (i, b) in basis.iter().enumerate() {
            let l = b.lead.lcm(&r.lead);
            queue.insert((l.degree(), Task::Pair(order.sort_key(&l), i, new)));
        }
        basis.push(r);
    }
    Ok(GroebnerBasis::from_raw(basis, order.clone()))
}

impl GroebnerBasis {
    /// Minimalises, interreduces and sorts a complete (not necessarily
    /// reduced) Gröbner basis.
    fn from_raw(raw: Vec<Reducer>, order: TermOrder) -> GroebnerBasis {
        let mut minimal: Vec<Reducer> = Vec::new();
        for (i, r) in raw.iter().enumerate() {
            let redundant = raw
                .iter()
                .enumerate()
                .any(|(j, s)| j != i && s.lead.divides(&r.lead) && (s.lead != r.lead || j < i));
            if !redundant {
                minimal.push(r.clone());
            }
        }
        minimal.sort_by(|a, b| order.cmp(&a.lead, &b.lead));
        let mut basis = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<Reducer> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, r)| r.clone())
                .collect();
            let r = &minimal[i];
            let tail = r.poly.sub(&Polynomial::monomial(
                r.lead.clone(),
                crate::poly::scalar(1),
            ));
            let tail = reduce(&tail, &others, &order);
            basis.push(tail.add(&Polynomial::monomial(
                r.lead.clone(),
                crate::poly::scalar(1),
            )));
        }
        GroebnerBasis {
            basis,
            order,
            reduced: true,
        }
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn nvars(&self) -> Option<usize> {
        self.basis.first().map(Polynomial::nvars)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|p| p.leading_monomial(&self.order).expect("nonzero").clone())
            .collect()
    }

    /// `true` iff the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(|p| p.homogeneous_degree() == Some(0))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, &self.basis, &self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Degree-`d` monomials outside the leading ideal; a basis of `(S/I)_d`.
    pub fn standard_monomials(&self, nvars: usize, degree: u32) -> Vec<Monomial> {
        let leads = self.leading_monomials();
        monomials_of_degree(nvars, degree)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect()
    }

    /// `dim (S/I)_d`, counted without listing monomials when possible.
    pub fn quotient_dim(&self, nvars: usize, degree: u32) -> u64 {
        if self.basis.is_empty() {
            return count_monomials(nvars, degree);
        }
        self.standard_monomials(nvars, degree).len() as u64
    }

    /// Every S-polynomial of the basis reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                let s = s_polynomial(&self.basis[i], &self.basis[j], &self.order).expect("nonzero");
                if !self.normal_form(&s).expect("dims").is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// The basis as a canonical ideal.
    pub fn ideal(&self, nvars: usize) -> HomogeneousIdeal {
        HomogeneousIdeal::new(nvars, self.basis.iter().cloned()).expect("homogeneous basis")
    }
}

/// Generators of `I ∩ k[x_i : i in keep]`, as polynomials in the full ring.
pub fn eliminate(ideal: &HomogeneousIdeal, keep: &[usize]) -> Result<HomogeneousIdeal> {
    let nvars = ideal.nvars();
    if keep.is_empty() {
        return Err(Error::Precondition(
            "elimination must keep at least one variable".into(),
        ));
    }
    let mut kept = vec![false; nvars];
    for &k in keep {
        if k >= nvars {
            return Err(Error::Dimension {
                expected: nvars,
                found: k + 1,
            });
        }
        kept[k] = true;
    }
    let dropped: Vec<usize> = (0..nvars).filter(|&i| !kept[i]).collect();
    let order = TermOrder::elimination(nvars, &dropped);
    let gb = buchberger(ideal, &order)?;
    HomogeneousIdeal::new(
        nvars,
        gb.basis()
            .iter()
            .filter(|p| p.terms().all(|(m, _)| m.supported_on(&kept)))
            .cloned(),
    )
}

/// Equality of ideals via reduced Gröbner bases under graded lex.
pub fn ideals_equal(a: &HomogeneousIdeal, b: &HomogeneousIdeal) -> Result<bool> {
    check_dim(a.nvars(), b.nvars())?;
    let order = TermOrder::GradedLex;
    Ok(buchberger(a, &order)?.basis() == buchberger(b, &order)?.basis())
}

/// Canonical form of an ideal: its reduced graded-lex Gröbner basis.
pub fn canonical(ideal: &HomogeneousIdeal) -> Result<HomogeneousIdeal> {
    Ok(buchberger(ideal, &TermOrder::GradedLex)?.ideal(ideal.nvars()))
}
