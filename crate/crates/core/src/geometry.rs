//! Flat limits, joins, linear sections and smoothness tests.

use crate::error::{check_dim, Error, Result};
use crate::groebner::{buchberger, eliminate, ideals_equal};
use crate::hilbert_chow::hilbert_data;
use crate::linalg::{Echelon, MonomialBasis};
use crate::oracle::{self, degree_part, degree_part_in};
use crate::poly::{
    monomials_of_degree, scalar, HomogeneousIdeal, OnePS, Polynomial, ProjectivePoint, Scalar,
    TermOrder,
};
use num_traits::Zero;

/// A decomposition `V = U ⊕ W` into coordinate subspaces.
///
/// `u_vars` index the coordinates on `U` (the functions vanishing on
/// `P(W)`), `w_vars` the remaining ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Splitting {
    nvars: usize,
    u_vars: Vec<usize>,
    w_vars: Vec<usize>,
}

impl Splitting {
    pub fn new(nvars: usize, u_vars: &[usize]) -> Result<Self> {
        let mut is_u = vec![false; nvars];
        for &i in u_vars {
            if i >= nvars {
                return Err(Error::Dimension {
                    expected: nvars,
                    found: i + 1,
                });
            }
            if is_u[i] {
                return Err(Error::Precondition(format!("variable {i} listed twice")));
            }
            is_u[i] = true;
        }
        let u: Vec<usize> = (0..nvars).filter(|&i| is_u[i]).collect();
        let w: Vec<usize> = (0..nvars).filter(|&i| !is_u[i]).collect();
        if u.is_empty() || w.is_empty() {
            return Err(Error::Precondition("both summands must be nonzero".into()));
        }
        Ok(Splitting {
            nvars,
            u_vars: u,
            w_vars: w,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn u_vars(&self) -> &[usize] {
        &self.u_vars
    }

    pub fn w_vars(&self) -> &[usize] {
        &self.w_vars
    }

    pub fn w_mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.nvars];
        for &i in &self.w_vars {
            m[i] = true;
        }
        m
    }

    /// Subgroup acting with weight `a` on `U` and `b` on `W`.
    pub fn two_weight(&self, a: i64, b: i64) -> OnePS {
        let mut s = vec![b; self.nvars];
        for &i in &self.u_vars {
            s[i] = a;
        }
        OnePS::from_vector_weights(&s)
    }
}

/// Ideal of `lim_{t -> 0} lambda(t) X`: the initial parts of a Gröbner
/// basis under the `lambda`-refined order.
pub fn flat_limit(ideal: &HomogeneousIdeal, lambda: &OnePS) -> Result<HomogeneousIdeal> {
    check_dim(ideal.nvars(), lambda.nvars())?;
    let gb = buchberger(ideal, &TermOrder::WeightRefinedLex(lambda.clone()))?;
    HomogeneousIdeal::new(
        ideal.nvars(),
        gb.basis().iter().map(|g| g.initial_part_unchecked(lambda)),
    )
}

/// Flat limit truncated at `degree_bound`, computed degree by degree by
/// linear algebra only.
///
/// In each degree the columns are ordered by increasing weight, so the
/// first nonzero entry of every echelon row sits at its minimal weight.
/// The initial parts of the echelon rows then span the initial parts of
/// all elements of `I_m`.
pub fn flat_limit_oracle(
    ideal: &HomogeneousIdeal,
    lambda: &OnePS,
    degree_bound: u32,
) -> Result<HomogeneousIdeal> {
    let nvars = ideal.nvars();
    check_dim(nvars, lambda.nvars())?;
    if degree_bound < ideal.max_degree() {
        return Err(Error::Precondition(format!(
            "degree bound {degree_bound} is below the generator degree {}",
            ideal.max_degree()
        )));
    }
    let mut found = HomogeneousIdeal::zero(nvars);
    for m in 0..=degree_bound {
        let cols = oracle::sorted_monomials(nvars, m, |mono| mono.dot(lambda.weights()));
        let part = degree_part_in(ideal, m, MonomialBasis::new(cols));
        let known = degree_part(&found, m);
        let mut span = known.echelon.clone();
        let mut fresh = Vec::new();
        for row in part.echelon.rows() {
            let f = part.basis.polynomial_of(nvars, row);
            let init = f.initial_part_unchecked(lambda);
            if span.insert(known.basis.row_of(&init)) {
                fresh.push(init);
            }
        }
        if !fresh.is_empty() {
            found = found.with_generators(fresh)?;
        }
    }
    Ok(found)
}

/// Extends an ideal supported on the `W` coordinates to the full ring;
/// the result is the ideal of the join with `P(U)`.
pub fn join_ideal(ideal_y: &HomogeneousIdeal, split: &Splitting) -> Result<HomogeneousIdeal> {
    check_dim(split.nvars(), ideal_y.nvars())?;
    if !ideal_y.supported_on(&split.w_mask()) {
        return Err(Error::Precondition(
            "generator involves a U coordinate".into(),
        ));
    }
    Ok(ideal_y.clone())
}

/// Re-embeds an ideal of `k[y_0..y_k]` into `k[x_0..x_{N}]` via `y_j -> x_{map[j]}`.
pub fn embed(ideal: &HomogeneousIdeal, nvars: usize, map: &[usize]) -> Result<HomogeneousIdeal> {
    check_dim(ideal.nvars(), map.len())?;
    let m: Vec<Option<usize>> = map.iter().map(|&i| Some(i)).collect();
    HomogeneousIdeal::new(
        nvars,
        ideal
            .generators()
            .iter()
            .map(|g| g.remap(&m, nvars).expect("total map")),
    )
}

/// Restricts an ideal supported on `vars` to the subring in those variables.
pub fn restrict(ideal: &HomogeneousIdeal, vars: &[usize]) -> Result<HomogeneousIdeal> {
    let mut map = vec![None; ideal.nvars()];
    for (j, &i) in vars.iter().enumerate() {
        map[i] = Some(j);
    }
    let mut gens = Vec::new();
    for g in ideal.generators() {
        gens.push(g.remap(&map, vars.len()).ok_or_else(|| {
            Error::Precondition("generator involves a variable outside the subring".into())
        })?);
    }
    HomogeneousIdeal::new(vars.len(), gens)
}

/// `true` iff `pr_{P(U)}: X --> P(U)` is dominant, i.e. no nonzero
/// polynomial in the `U` coordinates vanishes on `X`.
pub fn projection_dominant(ideal: &HomogeneousIdeal, split: &Splitting) -> Result<bool> {
    check_dim(split.nvars(), ideal.nvars())?;
    Ok(eliminate(ideal, split.u_vars())?.is_zero_ideal())
}

/// Result of cutting by linear forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSection {
    /// `I + <forms>` in the full ring.
    pub ideal: HomogeneousIdeal,
    /// For coordinate forms: the surviving variables and the image of `I`
    /// in the polynomial ring on them.
    pub subring: Option<(Vec<usize>, HomogeneousIdeal)>,
}

/// `I + <forms>` for linear forms.
///
/// When every form is a multiple of a coordinate, the section is also
/// returned inside the coordinate subring: since
/// `(I + (x)) ∩ k[rest] = I|_{x = 0}`, substituting zero is exact.
pub fn linear_section(ideal: &HomogeneousIdeal, forms: &[Polynomial]) -> Result<LinearSection> {
    let nvars = ideal.nvars();
    let mut cut = vec![false; nvars];
    let mut coordinate = true;
    for f in forms {
        check_dim(nvars, f.nvars())?;
        if f.is_zero() {
            continue;
        }
        if f.homogeneous_degree() != Some(1) {
            return Err(Error::Precondition("section by a non-linear form".into()));
        }
        match (f.len(), f.terms().next()) {
            (1, Some((m, _))) => cut[m.pure_power_var().expect("linear monomial")] = true,
            _ => coordinate = false,
        }
    }
    let full = ideal.with_generators(forms.iter().cloned())?;
    let subring = if coordinate {
        let keep: Vec<usize> = (0..nvars).filter(|&i| !cut[i]).collect();
        let sub = restrict(&coordinate_section(ideal, &cut)?, &keep)?;
        Some((keep, sub))
    } else {
        None
    };
    Ok(LinearSection {
        ideal: full,
        subring,
    })
}

/// `I|_{x_i = 0 for cut[i]}` in the full ring (no cut variables added).
pub fn coordinate_section(ideal: &HomogeneousIdeal, cut: &[bool]) -> Result<HomogeneousIdeal> {
    check_dim(ideal.nvars(), cut.len())?;
    HomogeneousIdeal::new(
        ideal.nvars(),
        ideal.generators().iter().map(|g| g.substitute_zero(cut)),
    )
}

/// Outcome of [`verify_limit_is_join`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinReport {
    pub holds: bool,
    pub dominant: bool,
    /// The subgroup used, as coordinate weights.
    pub lambda: OnePS,
    pub limit: HomogeneousIdeal,
    /// Ideal of `Y = X ∩ P(W)` in the `W` coordinates.
    pub section: HomogeneousIdeal,
    pub join: HomogeneousIdeal,
}

/// Checks that the flat limit under weight `a` on `U`, `b` on `W`
/// (`a < b`) is the join of `X ∩ P(W)` with `P(U)`.
pub fn verify_limit_is_join(
    ideal: &HomogeneousIdeal,
    split: &Splitting,
    a: i64,
    b: i64,
) -> Result<JoinReport> {
    check_dim(split.nvars(), ideal.nvars())?;
    if a >= b {
        return Err(Error::Precondition(format!(
            "need a < b, got a = {a}, b = {b}"
        )));
    }
    let dominant = projection_dominant(ideal, split)?;
    if !dominant {
        return Err(Error::Precondition(
            "projection to P(U) is not dominant".into(),
        ));
    }
    let mut cut = vec![false; split.nvars()];
    for &i in split.u_vars() {
        cut[i] = true;
    }
    let section_full = coordinate_section(ideal, &cut)?;
    let section = restrict(&section_full, split.w_vars())?;
    let join = join_ideal(&section_full, split)?;
    let lambda = split.two_weight(a, b);
    let limit = flat_limit(ideal, &lambda)?;
    let holds = ideals_equal(&limit, &join)?;
    Ok(JoinReport {
        holds,
        dominant,
        lambda,
        limit,
        section,
        join,
    })
}

/// Jacobian matrix of the generators at a point.
fn jacobian_at(ideal: &HomogeneousIdeal, p: &ProjectivePoint) -> Result<Vec<Vec<Scalar>>> {
    let mut rows = Vec::new();
    for g in ideal.generators() {
        let mut row = Vec::with_capacity(ideal.nvars());
        for i in 0..ideal.nvars() {
            row.push(g.partial_derivative(i).evaluate(p.coords())?);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Dimension of the projective tangent space of `X` at `p`.
pub fn tangent_space_dim(ideal: &HomogeneousIdeal, p: &ProjectivePoint) -> Result<usize> {
    check_dim(ideal.nvars(), p.dim())?;
    for g in ideal.generators() {
        if !g.evaluate(p.coords())?.is_zero() {
            return Err(Error::Precondition(
                "point does not lie on the subscheme".into(),
            ));
        }
    }
    let rank = crate::linalg::rank(&jacobian_at(ideal, p)?);
    Ok(ideal.nvars() - 1 - rank)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Smoothness {
    Smooth,
    Singular,
    /// The minor ideal is irrelevant but vanishes in degree only above the
    /// search bound.
    Inconclusive,
}

impl Smoothness {
    pub fn as_str(&self) -> &'static str {
        match self {
            Smoothness::Smooth => "smooth",
            Smoothness::Singular => "singular",
            Smoothness::Inconclusive => "inconclusive",
        }
    }
}

/// Determinant of a small square matrix of polynomials by cofactor expansion.
fn poly_det(m: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    match m.len() {
        0 => Polynomial::constant(nvars, scalar(1)),
        1 => m[0][0].clone(),
        n => {
            let mut acc = Polynomial::zero(nvars);
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != c)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][c].mul(&poly_det(&minor, nvars));
                acc = if c % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Ideal cut out by `I` and the `c x c` minors of its Jacobian matrix,
/// where `c` is the codimension.
pub fn jacobian_ideal(ideal: &HomogeneousIdeal, expected_dim: i64) -> Result<HomogeneousIdeal> {
    let nvars = ideal.nvars();
    let codim = nvars as i64 - 1 - expected_dim;
    if codim < 0 {
        return Err(Error::Precondition(
            "dimension exceeds the ambient space".into(),
        ));
    }
    let codim = codim as usize;
    let partials: Vec<Vec<Polynomial>> = ideal
        .generators()
        .iter()
        .map(|g| (0..nvars).map(|i| g.partial_derivative(i)).collect())
        .collect();
    let mut minors = Vec::new();
    for rows in subsets(partials.len(), codim) {
        for cols in subsets(nvars, codim) {
            let m: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| partials[r][c].clone()).collect())
                .collect();
            minors.push(poly_det(&m, nvars));
        }
    }
    ideal.with_generators(minors)
}

/// Jacobian criterion for the singular locus of a projective scheme of
/// the given dimension.
///
/// `Smooth` if the ideal `J` of `I` plus the maximal minors vanishes in
/// some degree up to `4 * (sum of generator degrees)`; `Singular` if `J`
/// is not primary to the irrelevant ideal (some coordinate has no pure
/// power among the leading monomials, so `V(J)` is nonempty).
pub fn singular_locus_empty(ideal: &HomogeneousIdeal, expected_dim: i64) -> Result<Smoothness> {
    let hd = hilbert_data(ideal)?;
    if hd.dimension != expected_dim {
        return Err(Error::Precondition(format!(
            "expected dimension {expected_dim}, found {}",
            hd.dimension
        )));
    }
    if expected_dim < 0 {
        return Ok(Smoothness::Smooth);
    }
    let nvars = ideal.nvars();
    let j = jacobian_ideal(ideal, expected_dim)?;
    let gb = buchberger(&j, &TermOrder::GradedLex)?;
    let leads = gb.leading_monomials();
    let mut top = vec![None::<u32>; nvars];
    for l in &leads {
        if let Some(v) = l.pure_power_var() {
            let e = l.exponent(v);
            top[v] = Some(top[v].map_or(e, |t: u32| t.min(e)));
        }
    }
    if top.iter().any(Option::is_none) {
        return Ok(Smoothness::Singular);
    }
    // S/J is finite dimensional; it vanishes by degree sum(e_i - 1) + 1.
    let vanish_by: u32 = top.iter().map(|e| e.unwrap() - 1).sum::<u32>() + 1;
    let bound = 4 * ideal.degree_sum().max(1);
    for m in 0..=vanish_by.min(bound) {
        if gb.quotient_dim(nvars, m) == 0 {
            return Ok(Smoothness::Smooth);
        }
    }
    Ok(Smoothness::Inconclusive)
}

/// `true` iff no linear form vanishes on `X`.
pub fn is_nondegenerate(ideal: &HomogeneousIdeal) -> bool {
    degree_part(ideal, 1).dim() == 0
}

/// Linear forms in the ideal, as a basis of `I_1`.
pub fn linear_part(ideal: &HomogeneousIdeal) -> Vec<Polynomial> {
    degree_part(ideal, 1).polynomials(ideal.nvars())
}

/// Independent check that `points` lie on `X`.
pub fn contains_point(ideal: &HomogeneousIdeal, p: &ProjectivePoint) -> Result<bool> {
    check_dim(ideal.nvars(), p.dim())?;
    for g in ideal.generators() {
        if !g.evaluate(p.coords())?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Ideal of a finite set of points, from the linear conditions in each
/// degree up to `bound`.
pub fn ideal_of_points(
    nvars: usize,
    points: &[ProjectivePoint],
    bound: u32,
) -> Result<HomogeneousIdeal> {
    let mut found = HomogeneousIdeal::zero(nvars);
    for m in 1..=bound {
        let monos = monomials_of_degree(nvars, m);
        // kernel of the evaluation map S_m -> k^points
        let mut evals: Vec<Vec<Scalar>> = Vec::new();
        for p in points {
            check_dim(nvars, p.dim())?;
            evals.push(
                monos
                    .iter()
                    .map(|mono| Polynomial::monomial(mono.clone(), scalar(1)).evaluate(p.coords()))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let kernel = kernel_basis(&evals, monos.len());
        let known = degree_part(&found, m);
        let mut span: Echelon = known.echelon.clone();
        let mut fresh = Vec::new();
        for v in kernel {
            let f = Polynomial::from_terms(nvars, monos.iter().cloned().zip(v));
            if span.insert(known.basis.row_of(&f)) {
                fresh.push(f);
            }
        }
        if !fresh.is_empty() {
            found = found.with_generators(fresh)?;
        }
    }
    Ok(found)
}

/// Basis of `{v : A v = 0}` for a dense `rows x ncols` matrix.
pub fn kernel_basis(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(crate::linalg::dense_to_sparse(r));
    }
    let rref = e.rref();
    let pivots: Vec<usize> = rref
        .iter()
        .map(|r| *r.keys().next().expect("nonzero"))
        .collect();
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Scalar::zero(); ncols];
        v[free] = scalar(1);
        for (r, &p) in rref.iter().zip(&pivots) {
            if let Some(c) = r.get(&free) {
                v[p] = -c.clone();
            }
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert_chow::hilbert_function;

    fn p(n: usize, t: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_int_terms(n, t)
    }

    fn conic3() -> HomogeneousIdeal {
        HomogeneousIdeal::new(3, [p(3, &[(1, &[1, 0, 1]), (-1, &[0, 2, 0])])]).unwrap()
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
    fn flat_limit_examples() {
        let lambda = OnePS::new(vec![2, -1, -1]);
        let lim = flat_limit(&conic3(), &lambda).unwrap();
        assert_eq!(
            lim,
            HomogeneousIdeal::new(3, [p(3, &[(1, &[0, 2, 0])])]).unwrap()
        );
        assert!(
            oracle::agree_up_to(&lim, &flat_limit_oracle(&conic3(), &lambda, 4).unwrap(), 4)
                .unwrap()
        );

        assert_eq!(
            flat_limit(&conic3(), &OnePS::new(vec![1, 1, 1])).unwrap(),
            conic3()
        );

        let tc = twisted_cubic();
        let l = OnePS::new(vec![1, 1, -1, -1]);
        let lim = flat_limit(&tc, &l).unwrap();
        assert!(oracle::agree_up_to(&lim, &flat_limit_oracle(&tc, &l, 4).unwrap(), 4).unwrap());
        for m in 0..6 {
            assert_eq!(hilbert_function(&lim, m), hilbert_function(&tc, m));
        }
        assert_eq!(flat_limit(&lim, &l).unwrap(), lim);

        let x = HomogeneousIdeal::coordinates(3, &[0]);
        assert_eq!(flat_limit_oracle(&x, &lambda, 3).unwrap(), x);
    }

    #[test]
    fn joins() {
        let split = Splitting::new(3, &[0]).unwrap();
        let point = HomogeneousIdeal::coordinates(3, &[2]);
        assert_eq!(join_ideal(&point, &split).unwrap(), point);

        let split4 = Splitting::new(4, &[0]).unwrap();
        let conic =
            HomogeneousIdeal::new(4, [p(4, &[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2, 0])])]).unwrap();
        let h = hilbert_data(&join_ideal(&conic, &split4).unwrap()).unwrap();
        assert_eq!((h.dimension, h.degree), (2, 2));

        let two = HomogeneousIdeal::new(3, [p(3, &[(1, &[0, 1, 1])])]).unwrap();
        let h = hilbert_data(&join_ideal(&two, &split).unwrap()).unwrap();
        assert_eq!((h.dimension, h.degree), (1, 2));

        assert!(join_ideal(&HomogeneousIdeal::coordinates(3, &[0]), &split).is_err());
    }

    #[test]
    fn dominance() {
        let split = Splitting::new(3, &[0]).unwrap();
        assert!(!projection_dominant(&HomogeneousIdeal::coordinates(3, &[0]), &split).unwrap());
        assert!(projection_dominant(&conic3(), &split).unwrap());
        assert!(projection_dominant(&HomogeneousIdeal::zero(3), &split).unwrap());
    }

    #[test]
    fn limit_is_join_for_a_conic() {
        // x^2 - y z meets {x = 0} in the two points y z = 0
        let conic = HomogeneousIdeal::new(3, [p(3, &[(1, &[2, 0, 0]), (-1, &[0, 1, 1])])]).unwrap();
        let split = Splitting::new(3, &[0]).unwrap();
        let report = verify_limit_is_join(&conic, &split, -3, 1).unwrap();
        assert!(report.holds);
        assert_eq!(
            report.join,
            HomogeneousIdeal::new(3, [p(3, &[(1, &[0, 1, 1])])]).unwrap()
        );
        assert!(verify_limit_is_join(&conic, &split, 1, -3).is_err());
    }

    #[test]
    fn sections() {
        let conic = conic3();
        let y3 = Polynomial::var(3, 2);
        let s = linear_section(&conic, std::slice::from_ref(&y3)).unwrap();
        assert_eq!(s.ideal, conic.with_generators([y3.clone()]).unwrap());
        let (keep, sub) = s.subring.unwrap();
        assert_eq!(keep, vec![0, 1]);
        assert_eq!(
            sub,
            HomogeneousIdeal::new(2, [p(2, &[(1, &[0, 2])])]).unwrap()
        );
        assert_eq!(linear_section(&conic, &[]).unwrap().ideal, conic);
        assert_eq!(
            linear_section(&HomogeneousIdeal::zero(3), &[y3])
                .unwrap()
                .ideal,
            HomogeneousIdeal::coordinates(3, &[2])
        );
        assert!(linear_section(&conic, &[Polynomial::var(3, 0).pow(2)]).is_err());
    }

    #[test]
    fn tangent_spaces() {
        let cone =
            HomogeneousIdeal::new(4, [p(4, &[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2, 0])])]).unwrap();
        let vertex = ProjectivePoint::from_ints(&[1, 0, 0, 0]).unwrap();
        assert_eq!(tangent_space_dim(&cone, &vertex).unwrap(), 3);
        let on_conic = ProjectivePoint::from_ints(&[1, 1, 1]).unwrap();
        assert_eq!(tangent_space_dim(&conic3(), &on_conic).unwrap(), 1);
        let line = HomogeneousIdeal::coordinates(3, &[2]);
        assert_eq!(
            tangent_space_dim(&line, &ProjectivePoint::from_ints(&[1, 5, 0]).unwrap()).unwrap(),
            1
        );
        assert!(
            tangent_space_dim(&line, &ProjectivePoint::from_ints(&[0, 0, 1]).unwrap()).is_err()
        );
        // a point of the cone off the vertex: conic point joined with the vertex
        let p_off = ProjectivePoint::from_ints(&[2, 1, 1, 1]).unwrap();
        assert_eq!(tangent_space_dim(&cone, &p_off).unwrap(), 2);
    }

    #[test]
    fn smoothness() {
        assert_eq!(
            singular_locus_empty(&conic3(), 1).unwrap(),
            Smoothness::Smooth
        );
        // y2^2 y3 - y1^2 (y1 + y3)
        let nodal = HomogeneousIdeal::new(
            3,
            [p(3, &[(1, &[0, 2, 1]), (-1, &[3, 0, 0]), (-1, &[2, 0, 1])])],
        )
        .unwrap();
        assert_eq!(
            singular_locus_empty(&nodal, 1).unwrap(),
            Smoothness::Singular
        );
        let crossing = HomogeneousIdeal::new(3, [p(3, &[(1, &[1, 1, 0])])]).unwrap();
        assert_eq!(
            singular_locus_empty(&crossing, 1).unwrap(),
            Smoothness::Singular
        );
        assert_eq!(
            singular_locus_empty(&twisted_cubic(), 1).unwrap(),
            Smoothness::Smooth
        );
        assert!(singular_locus_empty(&conic3(), 0).is_err());
    }

    #[test]
    fn nondegeneracy() {
        assert!(is_nondegenerate(&conic3()));
        assert!(!is_nondegenerate(&HomogeneousIdeal::coordinates(3, &[2])));
        assert!(is_nondegenerate(&twisted_cubic()));
    }

    #[test]
    fn points_ideal() {
        let pts: Vec<_> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
            .iter()
            .map(|c| ProjectivePoint::from_ints(c).unwrap())
            .collect();
        let i = ideal_of_points(3, &pts, 3).unwrap();
        let h = hilbert_data(&i).unwrap();
        assert_eq!((h.dimension, h.degree), (0, 4));
        for q in &pts {
            assert!(contains_point(&i, q).unwrap());
        }
    }
}
