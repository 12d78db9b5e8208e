//! Hyperplanar admissible flags in standard coordinates, their limits
//! under the staged one-parameter subgroups, stage weights, and the
//! per-stage stability checks.
//!
//! Coordinates are ordered `w_1, ..., w_m, x_1, ..., x_n` with
//! `m = dim V - n`: the `w` coordinates span `W^*` and `x_k` is dual to
//! `v_k`. The flag of linear subspaces is `Z^i = W ⊕ <v_1, ..., v_i>`,
//! cut out by `x_{i+1} = ... = x_n = 0`.

use crate::error::{check_dim, Error, Result};
use crate::geometry::{
    coordinate_section, flat_limit, is_nondegenerate, restrict, singular_locus_empty, Smoothness,
};
use crate::groebner::ideals_equal;
use crate::hilbert_chow::{
    chow_points_stability, chow_weight_numeric, hilbert_data, PointConfiguration, PointStability,
    StabilityVerdict, UniPoly,
};
use crate::parabolic::{lie_unipotent_stabilizer_dim_all, stage_data, GradedOnePS};
use crate::poly::{scalar, HomogeneousIdeal, Polynomial, ProjectivePoint, Scalar};
use num_traits::Zero;

/// Outcome of a check that may be undecidable with the tools at hand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Pass,
    Fail,
    Inconclusive,
    /// Not tested at all.
    Unchecked,
}

impl Check {
    pub fn as_str(&self) -> &'static str {
        match self {
            Check::Pass => "pass",
            Check::Fail => "fail",
            Check::Inconclusive => "inconclusive",
            Check::Unchecked => "unchecked",
        }
    }

    pub fn from_bool(ok: bool) -> Check {
        if ok {
            Check::Pass
        } else {
            Check::Fail
        }
    }

    /// Conjunction: any failure fails, otherwise anything undecided
    /// makes the whole undecided.
    pub fn all(checks: impl IntoIterator<Item = Check>) -> Check {
        let mut out = Check::Pass;
        for c in checks {
            match c {
                Check::Fail => return Check::Fail,
                Check::Pass => {}
                _ => out = Check::Inconclusive,
            }
        }
        out
    }
}

impl From<Smoothness> for Check {
    fn from(s: Smoothness) -> Check {
        match s {
            Smoothness::Smooth => Check::Pass,
            Smoothness::Singular => Check::Fail,
            Smoothness::Inconclusive => Check::Inconclusive,
        }
    }
}

/// A flag `X^0 ⊂ ... ⊂ X^n` with `X^i = X^n ∩ P(Z^i)`, stored through
/// the ideal of `X^n`; the lower strata are derived.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplanarFlag {
    n: usize,
    dim_v: usize,
    top_ideal: HomogeneousIdeal,
    points0: Option<PointConfiguration>,
}

impl HyperplanarFlag {
    pub fn new(
        n: usize,
        dim_v: usize,
        top_ideal: HomogeneousIdeal,
        points0: Option<PointConfiguration>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("flag length must be at least 1".into()));
        }
        if n + 1 >= dim_v {
            return Err(Error::Precondition(format!(
                "need n + 1 < dim V, got n = {n}, dim V = {dim_v}"
            )));
        }
        check_dim(dim_v, top_ideal.nvars())?;
        if let Some(p) = &points0 {
            check_dim(dim_v - n, p.dim_w())?;
        }
        Ok(HyperplanarFlag {
            n,
            dim_v,
            top_ideal,
            points0,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    /// `dim W = dim V - n`.
    pub fn dim_w(&self) -> usize {
        self.dim_v - self.n
    }

    pub fn top_ideal(&self) -> &HomogeneousIdeal {
        &self.top_ideal
    }

    pub fn points0(&self) -> Option<&PointConfiguration> {
        self.points0.as_ref()
    }

    /// Variables of the subring of `P(Z^i)`.
    pub fn subring_vars(&self, i: usize) -> Vec<usize> {
        (0..self.dim_w() + i).collect()
    }

    /// Ideal of `X^i` in the full ring.
    pub fn stratum_ideal(&self, i: usize) -> Result<HomogeneousIdeal> {
        self.check_stratum(i)?;
        stratum_from(&self.top_ideal, self.dim_w(), self.n, i)
    }

    /// Ideal of `X^i` inside `P(Z^i)`.
    pub fn stratum_subring_ideal(&self, i: usize) -> Result<HomogeneousIdeal> {
        self.check_stratum(i)?;
        let cut = x_mask(self.dim_v, self.dim_w(), i + 1, self.n);
        restrict(
            &coordinate_section(&self.top_ideal, &cut)?,
            &self.subring_vars(i),
        )
    }

    /// All strata, `X^0` first.
    pub fn configuration(&self) -> Result<FlagConfiguration> {
        FlagConfiguration::new(
            (0..=self.n)
                .map(|i| self.stratum_ideal(i))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// Degree of `X^n`.
    pub fn degree(&self) -> Result<u64> {
        Ok(hilbert_data(&self.top_ideal)?.degree)
    }

    fn check_stratum(&self, i: usize) -> Result<()> {
        if i > self.n {
            return Err(Error::Precondition(format!(
                "stratum {i} outside 0..{}",
                self.n
            )));
        }
        Ok(())
    }
}

/// Mask of the coordinates `x_from, ..., x_to` (1-based, empty if `from > to`).
fn x_mask(dim_v: usize, dim_w: usize, from: usize, to: usize) -> Vec<bool> {
    let mut m = vec![false; dim_v];
    for k in from..=to {
        m[dim_w + k - 1] = true;
    }
    m
}

fn x_vars(dim_w: usize, from: usize, to: usize) -> Vec<usize> {
    (from..=to).map(|k| dim_w + k - 1).collect()
}

/// `I|_{x_{i+1..n} = 0} + <x_{i+1}, ..., x_n>`.
fn stratum_from(
    ideal: &HomogeneousIdeal,
    dim_w: usize,
    n: usize,
    i: usize,
) -> Result<HomogeneousIdeal> {
    let cut = x_mask(ideal.nvars(), dim_w, i + 1, n);
    let nvars = ideal.nvars();
    coordinate_section(ideal, &cut)?.with_generators(
        x_vars(dim_w, i + 1, n)
            .into_iter()
            .map(|v| Polynomial::var(nvars, v)),
    )
}

/// Ideals of `n + 1` strata in the full ring, indexed by dimension.
///
/// Limits of flags are tuples of this shape that need not be cut from
/// their top member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagConfiguration {
    strata: Vec<HomogeneousIdeal>,
}

impl FlagConfiguration {
    pub fn new(strata: Vec<HomogeneousIdeal>) -> Result<Self> {
        if strata.len() < 2 {
            return Err(Error::Precondition("need at least two strata".into()));
        }
        let nvars = strata[0].nvars();
        for s in &strata {
            check_dim(nvars, s.nvars())?;
        }
        if strata.len() + 1 > nvars {
            return Err(Error::Precondition(
                "too many strata for the ambient space".into(),
            ));
        }
        Ok(FlagConfiguration { strata })
    }

    /// Flag length `n`.
    pub fn n(&self) -> usize {
        self.strata.len() - 1
    }

    pub fn nvars(&self) -> usize {
        self.strata[0].nvars()
    }

    pub fn dim_w(&self) -> usize {
        self.nvars() - self.n()
    }

    pub fn strata(&self) -> &[HomogeneousIdeal] {
        &self.strata
    }

    pub fn stratum(&self, i: usize) -> &HomogeneousIdeal {
        &self.strata[i]
    }

    /// Stratumwise ideal equality.
    pub fn equal_strata(&self, other: &FlagConfiguration) -> Result<Vec<bool>> {
        check_dim(self.strata.len(), other.strata.len())?;
        self.strata
            .iter()
            .zip(&other.strata)
            .map(|(a, b)| ideals_equal(a, b))
            .collect()
    }
}

/// Outcome of [`degree_admissible`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admissibility {
    pub admissible: bool,
    /// Empty iff admissible.
    pub reasons: Vec<String>,
}

/// Whether `(n, d, dim V)` satisfies the degree conditions of the
/// moduli construction: `d > dim V - n` and
/// `d != (dim V - n - 1 + i) / (n + 1 - i)` for `i = 1..n`.
pub fn degree_admissible(n: u64, d: u64, dim_v: u64) -> Admissibility {
    let mut reasons = Vec::new();
    let (n, d, dim_v) = (n as i64, d as i64, dim_v as i64);
    if n < 1 {
        reasons.push("flag length n must be at least 1".to_string());
    }
    if dim_v < n + 2 {
        reasons.push(format!("n + 1 < dim V fails: n = {n}, dim V = {dim_v}"));
    }
    if d <= dim_v - n {
        reasons.push(format!(
            "d = {d} is not greater than dim V - n = {}",
            dim_v - n
        ));
    }
    for i in 1..=n {
        if d * (n + 1 - i) == dim_v - n - 1 + i {
            reasons.push(format!(
                "d = {d} equals (dim V - n - 1 + i) / (n + 1 - i) for i = {i}"
            ));
        }
    }
    Admissibility {
        admissible: reasons.is_empty(),
        reasons,
    }
}

/// Default Chow exponent on `X^0`: `10 n d`.
pub fn default_a0(n: u64, d: u64) -> u64 {
    10 * n * d
}

/// Checks on one stratum of a flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumCheck {
    pub stratum: usize,
    pub hilbert_polynomial: UniPoly,
    pub dimension: i64,
    pub degree: u64,
    pub dimension_ok: bool,
    pub degree_ok: bool,
    /// Not contained in a hyperplane of `P(Z^i)`.
    pub nondegenerate: bool,
    /// Jacobian criterion inside `P(Z^i)`; for `X^0` this decides
    /// reducedness. `None` when the dimension is wrong.
    pub smoothness: Option<Smoothness>,
}

/// Certificate that the supplied points are `X^0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointsCheck {
    pub all_on_x0: bool,
    pub distinct: bool,
    /// Number of points with multiplicity equals `d`.
    pub count_matches: bool,
}

impl PointsCheck {
    /// The points, with multiplicity, describe the cycle of `X^0`.
    pub fn certifies_cycle(&self) -> bool {
        self.all_on_x0 && self.count_matches
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagValidation {
    pub degree: u64,
    pub strata: Vec<StratumCheck>,
    pub hilbert_type: Vec<UniPoly>,
    pub points: Option<PointsCheck>,
    pub x0_reduced: Check,
    pub point_stability: Option<PointStability>,
    pub non_degenerate: Check,
    pub non_singular: Check,
    pub stable: Check,
    /// Connectedness of `X^1, ..., X^n` is not tested.
    pub connected: Check,
    pub verdict: Check,
}

/// Runs the structural, non-degeneracy, smoothness and stability checks.
pub fn validate_flag(flag: &HyperplanarFlag) -> Result<FlagValidation> {
    let d = flag.degree()?;
    let mut strata = Vec::new();
    for i in 0..=flag.n {
        let hd = hilbert_data(&flag.stratum_ideal(i)?)?;
        let sub = flag.stratum_subring_ideal(i)?;
        let dimension_ok = hd.dimension == i as i64;
        let smoothness = if dimension_ok {
            Some(singular_locus_empty(&sub, i as i64)?)
        } else {
            None
        };
        strata.push(StratumCheck {
            stratum: i,
            dimension: hd.dimension,
            degree: hd.degree,
            dimension_ok,
            degree_ok: hd.degree == d,
            nondegenerate: is_nondegenerate(&sub),
            smoothness,
            hilbert_polynomial: hd.hilbert_polynomial,
        });
    }
    let x0 = flag.stratum_ideal(0)?;
    let points = match &flag.points0 {
        None => None,
        Some(cfg) => {
            let mut all_on = true;
            for p in cfg.points() {
                all_on &= x0_contains(&x0, flag.dim_v, p)?;
            }
            Some(PointsCheck {
                all_on_x0: all_on,
                distinct: cfg.is_reduced(),
                count_matches: cfg.length() as u64 == d,
            })
        }
    };
    let smooth = |s: &StratumCheck| s.smoothness.map_or(Check::Fail, Check::from);
    let x0_reduced = Check::all([Check::from_bool(strata[0].degree_ok), smooth(&strata[0])]);
    let point_stability = match (&flag.points0, &points) {
        (Some(cfg), Some(pc)) if pc.certifies_cycle() => Some(chow_points_stability(cfg)),
        _ => None,
    };
    let stable = match &point_stability {
        Some(s) => Check::from_bool(s.verdict == StabilityVerdict::Stable),
        None => Check::Inconclusive,
    };
    let non_degenerate = Check::from_bool(strata.iter().all(|s| s.nondegenerate));
    let non_singular =
        Check::all(std::iter::once(x0_reduced).chain(strata[1..].iter().map(smooth)));
    let structural = Check::from_bool(strata.iter().all(|s| s.dimension_ok && s.degree_ok));
    let verdict = Check::all([structural, non_degenerate, non_singular, stable]);
    Ok(FlagValidation {
        degree: d,
        hilbert_type: strata
            .iter()
            .map(|s| s.hilbert_polynomial.clone())
            .collect(),
        strata,
        points,
        x0_reduced,
        point_stability,
        non_degenerate,
        non_singular,
        stable,
        connected: Check::Unchecked,
        verdict,
    })
}

/// Lifts a point of `P(W)` to `P(V)` and tests membership in `X^0`.
fn x0_contains(x0: &HomogeneousIdeal, dim_v: usize, p: &ProjectivePoint) -> Result<bool> {
    let mut coords = p.coords().to_vec();
    coords.resize(dim_v, Scalar::zero());
    for g in x0.generators() {
        if !g.evaluate(&coords)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Limit of a configuration under the stage-`i` subgroup `lambda^[i]`.
///
/// Strata below `i` are fixed. Stratum `j >= i` becomes the join of
/// `X^{i-1}` with `P(<v_i, ..., v_j>)`: the equations of `X^{i-1}` in
/// `w, x_1, ..., x_{i-1}` together with `x_{j+1}, ..., x_n`. With `check`
/// set, every stratum is also recomputed as a flat limit and compared.
pub fn configuration_limit(
    cfg: &FlagConfiguration,
    i: usize,
    check: bool,
) -> Result<FlagConfiguration> {
    let n = cfg.n();
    if i == 0 || i > n {
        return Err(Error::Precondition(format!("stage {i} outside 1..{n}")));
    }
    let dim_w = cfg.dim_w();
    let base = coordinate_section(cfg.stratum(i - 1), &x_mask(cfg.nvars(), dim_w, i, n))?;
    let mut strata: Vec<HomogeneousIdeal> = cfg.strata()[..i].to_vec();
    for j in i..=n {
        let nvars = cfg.nvars();
        strata.push(
            base.with_generators(
                x_vars(dim_w, j + 1, n)
                    .into_iter()
                    .map(|v| Polynomial::var(nvars, v)),
            )?,
        );
    }
    let out = FlagConfiguration::new(strata)?;
    if check {
        let g = GradedOnePS::flag_default(n, dim_w)?;
        let lambda = stage_data(&g, i)?.lambda_bracket;
        for j in 0..=n {
            let limit = flat_limit(cfg.stratum(j), &lambda)?;
            if !ideals_equal(&limit, out.stratum(j))? {
                return Err(Error::CrossCheck(format!(
                    "stage {i}: stratum {j} differs from its flat limit"
                )));
            }
        }
    }
    Ok(out)
}

/// `p^[i]` applied to a flag.
pub fn flag_limit(flag: &HyperplanarFlag, i: usize, check: bool) -> Result<FlagConfiguration> {
    configuration_limit(&flag.configuration()?, i, check)
}

fn check_flag_grading(n: usize, g: &GradedOnePS) -> Result<()> {
    let m = g.multiplicities();
    if m.len() != n + 1 || m[1..].iter().any(|&k| k != 1) {
        return Err(Error::Precondition(format!(
            "grading needs multiplicities (dim V - n, 1, ..., 1) with n = {n}"
        )));
    }
    Ok(())
}

fn stage_inputs(n: usize, d: u64, g: &GradedOnePS, i: usize, a0: u64) -> Result<(Scalar, Scalar)> {
    check_flag_grading(n, g)?;
    let adm = degree_admissible(n as u64, d, g.dim() as u64);
    if !adm.admissible {
        return Err(Error::Precondition(format!(
            "inadmissible degree: {}",
            adm.reasons.join("; ")
        )));
    }
    if a0 == 0 {
        return Err(Error::Precondition("a0 must be positive".into()));
    }
    let sd = stage_data(g, i)?;
    Ok((sd.beta_le, sd.beta_gt))
}

/// Weight of `p^[i]` of any flag with these parameters under
/// `lambda^[i]`, for the Chow linearisation with exponents
/// `(a0, 1, ..., 1)`.
///
/// Strata `j < i` lie in the `beta_<=i` weight space and contribute
/// `beta_<=i d (j + 1)` (times `a0` for `j = 0`); each join stratum
/// `j >= i` contributes `d (beta_>i (j - i + 1) + beta_<=i i)`.
pub fn flag_stage_weight(n: usize, d: u64, g: &GradedOnePS, i: usize, a0: u64) -> Result<Scalar> {
    let (le, gt) = stage_inputs(n, d, g, i, a0)?;
    let d = scalar(d as i64);
    let mut total = scalar(a0 as i64) * &le * &d;
    for j in 1..i {
        total += &le * &d * scalar(j as i64 + 1);
    }
    for j in i..=n {
        total += &d * (&gt * scalar((j - i + 1) as i64) + &le * scalar(i as i64));
    }
    Ok(total)
}

/// The same sum assembled with the three-case join weight:
/// `beta_>i (j - i + 1)` if `j > 2i - 1`, `beta_<=i d i` if `j < 2i - 1`,
/// and `i (beta_>i + d beta_<=i)` if `j = 2i - 1`.
///
/// Kept for comparison; it disagrees with the numeric weight of the
/// limit whenever `d > 1`.
pub fn flag_stage_weight_case_formula(
    n: usize,
    d: u64,
    g: &GradedOnePS,
    i: usize,
    a0: u64,
) -> Result<Scalar> {
    let (le, gt) = stage_inputs(n, d, g, i, a0)?;
    let d = scalar(d as i64);
    let mut total = scalar(a0 as i64) * &le * &d;
    for j in 1..i {
        total += &le * &d * scalar(j as i64 + 1);
    }
    for j in i..=n {
        let (jj, edge) = (j as i64, 2 * i as i64 - 1);
        total += match jj.cmp(&edge) {
            std::cmp::Ordering::Greater => &gt * scalar(jj - i as i64 + 1),
            std::cmp::Ordering::Less => &le * &d * scalar(i as i64),
            std::cmp::Ordering::Equal => (&gt + &d * &le) * scalar(i as i64),
        };
    }
    Ok(total)
}

/// Numeric weights of a `lambda^[i]`-fixed configuration, one per
/// stratum, divided back by the stage's scaling factor.
pub fn stratum_weights(cfg: &FlagConfiguration, g: &GradedOnePS, i: usize) -> Result<Vec<Scalar>> {
    let sd = stage_data(g, i)?;
    let scale = scalar(sd.scale);
    cfg.strata()
        .iter()
        .map(|s| Ok(chow_weight_numeric(s, &sd.lambda_bracket)?.chow_weight / &scale))
        .collect()
}

/// One stage of [`StabilityReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageRecord {
    pub stage: usize,
    /// Numeric weight of the limit, `a0 w_0 + w_1 + ... + w_n`.
    pub weight: Scalar,
    pub stratum_weights: Vec<Scalar>,
    pub family_weight: Scalar,
    /// Denominator cleared to make `lambda^[i]` integral.
    pub scale: i64,
    pub weight_matches_family_constant: bool,
    pub lie_stabilizer_dim: usize,
    /// Chow stability of `X^0`, tested at stage 1 only; later stages have
    /// a one-dimensional block and a trivial reductive part.
    pub point_stability: Option<StabilityVerdict>,
    /// The flag differs from its limit, so it is not fixed by the
    /// retraction and lies outside the unipotent sweep.
    pub sweep_excluded: bool,
    pub minimal_weight: Check,
    pub stabilizer: Check,
    pub sweep: Check,
    pub verdict: Check,
}

/// The three conditions of stage `i`: minimal weight of the limit,
/// trivial unipotent stabiliser plus stability of the reductive part,
/// and exclusion from the unipotent sweep. `check` is passed on to
/// [`configuration_limit`].
pub fn nrgit_stage_check(
    flag: &HyperplanarFlag,
    i: usize,
    g: &GradedOnePS,
    a0: u64,
    check: bool,
) -> Result<StageRecord> {
    check_dim(flag.dim_v, g.dim())?;
    check_flag_grading(flag.n, g)?;
    let d = flag.degree()?;
    let sd = stage_data(g, i)?;
    let family_weight = flag_stage_weight(flag.n, d, g, i, a0)?;
    let original = flag.configuration()?;
    let limit = configuration_limit(&original, i, check)?;

    let ws = stratum_weights(&limit, g, i)?;
    let weight = ws[1..]
        .iter()
        .fold(scalar(a0 as i64) * &ws[0], |acc, w| acc + w);
    let weight_matches = weight == family_weight;

    let lie = lie_unipotent_stabilizer_dim_all(limit.strata(), g, i)?;
    let point_stability = if i == 1 {
        match flag.points0.as_ref() {
            Some(cfg) => {
                let x0 = original.stratum(0);
                let mut certified = cfg.length() as u64 == d;
                for p in cfg.points() {
                    certified &= x0_contains(x0, flag.dim_v, p)?;
                }
                certified.then(|| chow_points_stability(cfg).verdict)
            }
            None => None,
        }
    } else {
        None
    };
    let point_check = match (i, point_stability) {
        (1, None) => Check::Inconclusive,
        (1, Some(v)) => Check::from_bool(v == StabilityVerdict::Stable),
        _ => Check::Pass,
    };
    let sweep_excluded = original.equal_strata(&limit)?.iter().any(|e| !e);

    let minimal_weight = Check::from_bool(weight_matches);
    let stabilizer = Check::all([Check::from_bool(lie == 0), point_check]);
    let sweep = Check::from_bool(sweep_excluded);
    Ok(StageRecord {
        stage: i,
        weight,
        stratum_weights: ws,
        family_weight,
        scale: sd.scale,
        weight_matches_family_constant: weight_matches,
        lie_stabilizer_dim: lie,
        point_stability,
        sweep_excluded,
        minimal_weight,
        stabilizer,
        sweep,
        verdict: Check::all([minimal_weight, stabilizer, sweep]),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub stages: Vec<StageRecord>,
    /// Conjunction of the stage verdicts.
    pub verdict: Check,
}

/// [`nrgit_stage_check`] at every stage `1..n`, in order.
pub fn stability_report(
    flag: &HyperplanarFlag,
    g: &GradedOnePS,
    a0: u64,
    check: bool,
) -> Result<StabilityReport> {
    let stages = (1..=flag.n)
        .map(|i| nrgit_stage_check(flag, i, g, a0, check))
        .collect::<Result<Vec<_>>>()?;
    let verdict = Check::all(stages.iter().map(|s| s.verdict));
    Ok(StabilityReport { stages, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, t: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_int_terms(n, t)
    }

    fn pt(c: &[i64]) -> ProjectivePoint {
        ProjectivePoint::from_ints(c).unwrap()
    }

    fn three_points() -> PointConfiguration {
        PointConfiguration::new(2, vec![pt(&[1, 0]), pt(&[0, 1]), pt(&[1, 1])]).unwrap()
    }

    /// `y1^2 y2 - y1 y2^2 + x^3`, meeting `x = 0` in `[1:0], [0:1], [1:1]`.
    fn cubic_flag() -> HyperplanarFlag {
        let f = p(3, &[(1, &[2, 1, 0]), (-1, &[1, 2, 0]), (1, &[0, 0, 3])]);
        HyperplanarFlag::new(
            1,
            3,
            HomogeneousIdeal::new(3, [f]).unwrap(),
            Some(three_points()),
        )
        .unwrap()
    }

    fn beta() -> GradedOnePS {
        GradedOnePS::new(vec![1, -2], vec![2, 1]).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        assert!(degree_admissible(1, 3, 3).admissible);
        let a = degree_admissible(1, 2, 3);
        assert!(!a.admissible);
        assert!(a.reasons[0].contains("not greater"));
        let a = degree_admissible(2, 3, 4);
        assert!(!a.admissible);
        assert_eq!(a.reasons.len(), 1);
        assert!(a.reasons[0].contains("i = 2"));
        assert!(!degree_admissible(2, 5, 3).admissible);
    }

    #[test]
    fn strata_of_cubic_flag() {
        let flag = cubic_flag();
        let x0 = flag.stratum_ideal(0).unwrap();
        assert_eq!(x0.generators().len(), 2);
        let sub = flag.stratum_subring_ideal(0).unwrap();
        assert_eq!(sub.nvars(), 2);
        assert_eq!(sub.generators(), &[p(2, &[(1, &[2, 1]), (-1, &[1, 2])])]);
    }

    #[test]
    fn cubic_flag_validates() {
        let v = validate_flag(&cubic_flag()).unwrap();
        assert_eq!(v.degree, 3);
        assert_eq!(v.verdict, Check::Pass);
        assert_eq!(v.hilbert_type[0].to_string(), "3");
        assert_eq!(v.hilbert_type[1].to_string(), "3*t");
        assert_eq!(v.connected, Check::Unchecked);
    }

    #[test]
    fn tangent_section_is_not_reduced() {
        // y1^2 y2 + x^3 - x y2^2 meets x = 0 in 2[0:1] + [1:0]
        let f = p(3, &[(1, &[2, 1, 0]), (1, &[0, 0, 3]), (-1, &[0, 2, 1])]);
        let flag =
            HyperplanarFlag::new(1, 3, HomogeneousIdeal::new(3, [f]).unwrap(), None).unwrap();
        let v = validate_flag(&flag).unwrap();
        assert_eq!(v.strata[1].smoothness, Some(Smoothness::Smooth));
        assert_eq!(v.x0_reduced, Check::Fail);
        assert_eq!(v.non_singular, Check::Fail);
        assert_eq!(v.stable, Check::Inconclusive);
    }

    #[test]
    fn degenerate_curve_fails() {
        // the line y2 = 0 inside P^2 is degenerate in P(Z^1)
        let l = p(3, &[(1, &[0, 1, 0])]);
        let flag =
            HyperplanarFlag::new(1, 3, HomogeneousIdeal::new(3, [l]).unwrap(), None).unwrap();
        let v = validate_flag(&flag).unwrap();
        assert_eq!(v.non_degenerate, Check::Fail);
        assert_eq!(v.verdict, Check::Fail);
    }

    #[test]
    fn cubic_limit_is_three_concurrent_lines() {
        let lim = flag_limit(&cubic_flag(), 1, true).unwrap();
        let lines = HomogeneousIdeal::new(3, [p(3, &[(1, &[2, 1, 0]), (-1, &[1, 2, 0])])]).unwrap();
        assert!(ideals_equal(lim.stratum(1), &lines).unwrap());
        assert_eq!(lim.stratum(0), &cubic_flag().stratum_ideal(0).unwrap());
        // fixed point
        let again = configuration_limit(&lim, 1, true).unwrap();
        assert!(again.equal_strata(&lim).unwrap().iter().all(|&e| e));
    }

    #[test]
    fn stage_weights() {
        assert_eq!(flag_stage_weight(1, 3, &beta(), 1, 5).unwrap(), scalar(12));
        assert_eq!(
            flag_stage_weight_case_formula(1, 3, &beta(), 1, 5).unwrap(),
            scalar(16)
        );
        assert!(flag_stage_weight(1, 2, &beta(), 1, 5).is_err());
    }

    #[test]
    fn cubic_stage_check_passes() {
        let r = nrgit_stage_check(&cubic_flag(), 1, &beta(), 5, true).unwrap();
        assert_eq!(r.stratum_weights, vec![scalar(3), scalar(-3)]);
        assert_eq!(r.weight, scalar(12));
        assert!(r.weight_matches_family_constant);
        assert_eq!(r.lie_stabilizer_dim, 0);
        assert_eq!(r.point_stability, Some(StabilityVerdict::Stable));
        assert!(r.sweep_excluded);
        assert_eq!(r.verdict, Check::Pass);
    }

    #[test]
    fn cone_lies_in_the_sweep() {
        let f = p(3, &[(1, &[2, 1, 0]), (-1, &[1, 2, 0])]);
        let flag = HyperplanarFlag::new(
            1,
            3,
            HomogeneousIdeal::new(3, [f]).unwrap(),
            Some(three_points()),
        )
        .unwrap();
        let r = nrgit_stage_check(&flag, 1, &beta(), 5, true).unwrap();
        assert_eq!(r.sweep, Check::Fail);
        assert_eq!(r.verdict, Check::Fail);
    }

    #[test]
    fn coincident_points_are_unstable() {
        let f = p(3, &[(1, &[2, 1, 0]), (1, &[0, 0, 3]), (-1, &[0, 2, 1])]);
        let pts = PointConfiguration::new(2, vec![pt(&[0, 1]), pt(&[0, 1]), pt(&[1, 0])]).unwrap();
        let flag =
            HyperplanarFlag::new(1, 3, HomogeneousIdeal::new(3, [f]).unwrap(), Some(pts)).unwrap();
        let r = nrgit_stage_check(&flag, 1, &beta(), 5, true).unwrap();
        assert_eq!(r.point_stability, Some(StabilityVerdict::Unstable));
        assert_eq!(r.stabilizer, Check::Fail);
    }

    #[test]
    fn missing_points_are_inconclusive() {
        let f = p(3, &[(1, &[2, 1, 0]), (-1, &[1, 2, 0]), (1, &[0, 0, 3])]);
        let flag =
            HyperplanarFlag::new(1, 3, HomogeneousIdeal::new(3, [f]).unwrap(), None).unwrap();
        let r = nrgit_stage_check(&flag, 1, &beta(), 5, true).unwrap();
        assert_eq!(r.stabilizer, Check::Inconclusive);
        assert_eq!(r.verdict, Check::Inconclusive);
    }

    #[test]
    fn rejects_bad_shapes() {
        let f = HomogeneousIdeal::zero(3);
        assert!(HyperplanarFlag::new(2, 3, f.clone(), None).is_err());
        assert!(HyperplanarFlag::new(0, 3, f, None).is_err());
    }
}
