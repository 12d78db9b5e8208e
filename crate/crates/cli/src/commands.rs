//! Command dispatch: each command maps a document onto one library
//! operation and returns a JSON result.

use crate::error::CliError;
use crate::parse::InputDocument;
use clap::ValueEnum;
use flagstab_core::flags::{
    default_a0, degree_admissible, flag_limit, flag_stage_weight, flag_stage_weight_case_formula,
    stability_report, validate_flag, Check, HyperplanarFlag, StageRecord,
};
use flagstab_core::geometry::{
    flat_limit, flat_limit_oracle, join_ideal, restrict, verify_limit_is_join, Splitting,
};
use flagstab_core::groebner::buchberger;
use flagstab_core::hilbert_chow::{
    chow_points_stability, chow_weight_join, chow_weight_join_tensor, chow_weight_numeric,
    hilbert_data, hilbert_function, is_fixed_by, PointConfiguration, StabilityVerdict,
};
use flagstab_core::oracle::agree_up_to;
use flagstab_core::parabolic::{lie_u_bracket_positions, stage_data, GradedOnePS};
use flagstab_core::poly::{HomogeneousIdeal, OnePS, ProjectivePoint, Scalar, TermOrder};
use serde_json::{json, Map, Value};

pub const VERSION_STAMP: &str = "flagstab-json/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum Command {
    Gb,
    FlatLimit,
    Hilbert,
    ChowWeight,
    ChowPoints,
    Join,
    VerifyLimitJoin,
    Grading,
    FlagValidate,
    FlagLimit,
    FlagWeight,
    FlagCheck,
    Admissible,
    Batch,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gb => "gb",
            Command::FlatLimit => "flat-limit",
            Command::Hilbert => "hilbert",
            Command::ChowWeight => "chow-weight",
            Command::ChowPoints => "chow-points",
            Command::Join => "join",
            Command::VerifyLimitJoin => "verify-limit-join",
            Command::Grading => "grading",
            Command::FlagValidate => "flag-validate",
            Command::FlagLimit => "flag-limit",
            Command::FlagWeight => "flag-weight",
            Command::FlagCheck => "flag-check",
            Command::Admissible => "admissible",
            Command::Batch => "batch",
        }
    }

    pub fn from_name(s: &str) -> Option<Command> {
        Command::value_variants()
            .iter()
            .copied()
            .find(|c| c.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Run the independent cross-checks as well.
    pub check: bool,
    /// Degree up to which linear-algebra cross-checks compare.
    pub degree_bound: u32,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            check: false,
            degree_bound: 6,
        }
    }
}

/// A computed result; `inconclusive` selects exit code 2.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub result: Value,
    pub inconclusive: bool,
}

impl Outcome {
    fn done(result: Value) -> Self {
        Outcome {
            result,
            inconclusive: false,
        }
    }
}

type R<T> = Result<T, CliError>;

fn missing(what: &str) -> CliError {
    CliError::Input(format!("missing `{what}` section"))
}

fn q(x: &Scalar) -> Value {
    Value::String(x.to_string())
}

fn ring(doc: &InputDocument) -> R<&[String]> {
    if doc.variables.is_empty() {
        return Err(missing("ring"));
    }
    Ok(&doc.variables)
}

/// The document's ideal; a non-homogeneous generator is reported at its
/// position.
fn ideal(doc: &InputDocument) -> R<HomogeneousIdeal> {
    let n = ring(doc)?.len();
    if doc.ideal.is_empty() {
        return Err(missing("ideal"));
    }
    for g in &doc.ideal {
        if !g.value.is_homogeneous() {
            return Err(CliError::Parse {
                line: g.line,
                col: g.col,
                msg: "generator is not homogeneous".into(),
            });
        }
    }
    Ok(HomogeneousIdeal::new(
        n,
        doc.ideal.iter().map(|g| g.value.clone()),
    )?)
}

fn weights(doc: &InputDocument) -> R<OnePS> {
    doc.weights
        .clone()
        .map(OnePS::new)
        .ok_or_else(|| missing("weights"))
}

/// Weighted order when the document has weights, graded lex otherwise.
fn order(doc: &InputDocument) -> TermOrder {
    match &doc.weights {
        Some(w) => TermOrder::WeightRefinedLex(OnePS::new(w.clone())),
        None => TermOrder::GradedLex,
    }
}

/// Generator strings sorted by leading monomial under `order`.
fn gens(ideal: &HomogeneousIdeal, names: &[String], order: &TermOrder) -> Vec<String> {
    let mut g: Vec<_> = ideal.generators().iter().collect();
    g.sort_by(|a, b| {
        order
            .cmp(
                a.leading_monomial(order).unwrap(),
                b.leading_monomial(order).unwrap(),
            )
            .then_with(|| a.fmt_with(names, order).cmp(&b.fmt_with(names, order)))
    });
    g.iter().map(|p| p.fmt_with(names, order)).collect()
}

fn int_field(v: Option<u64>, what: &str) -> R<u64> {
    v.ok_or_else(|| missing(what))
}

fn to_usize(v: u64) -> usize {
    v as usize
}

fn splitting(doc: &InputDocument) -> R<Splitting> {
    let n = ring(doc)?.len();
    let u = doc.splitting.as_ref().ok_or_else(|| missing("splitting"))?;
    Ok(Splitting::new(n, u)?)
}

fn points(doc: &InputDocument, dim: usize) -> R<Option<PointConfiguration>> {
    if doc.points.is_empty() {
        return Ok(None);
    }
    let mut pts = Vec::new();
    for p in &doc.points {
        if p.value.len() != dim {
            return Err(CliError::Parse {
                line: p.line,
                col: p.col,
                msg: format!("point has {} coordinates, expected {dim}", p.value.len()),
            });
        }
        pts.push(
            ProjectivePoint::new(p.value.clone()).map_err(|e| CliError::Parse {
                line: p.line,
                col: p.col,
                msg: e.to_string(),
            })?,
        );
    }
    Ok(Some(PointConfiguration::new(dim, pts)?))
}

/// Canonicalised echo of the sections present in the document.
pub fn canonical_input(doc: &InputDocument) -> Value {
    let mut m = Map::new();
    if !doc.variables.is_empty() {
        m.insert("ring".into(), json!(doc.variables));
        if let Ok(i) = ideal(doc) {
            m.insert("ideal".into(), json!(gens(&i, &doc.variables, &order(doc))));
        }
    }
    if let Some(w) = &doc.weights {
        m.insert("weights".into(), json!(w));
    }
    if let Some(s) = &doc.splitting {
        let names: Vec<&String> = s.iter().map(|&k| &doc.variables[k]).collect();
        m.insert("splitting".into(), json!(names));
    }
    for (k, v) in [("a", doc.a), ("b", doc.b)] {
        if let Some(v) = v {
            m.insert(k.into(), json!(v));
        }
    }
    for (k, v) in [
        ("n", doc.n),
        ("d", doc.d),
        ("dimv", doc.dimv),
        ("a0", doc.a0),
        ("stage", doc.stage),
    ] {
        if let Some(v) = v {
            m.insert(k.into(), json!(v));
        }
    }
    if let Some(b) = &doc.beta {
        m.insert("beta".into(), json!(b));
    }
    if let Some(mu) = &doc.multiplicities {
        m.insert("multiplicities".into(), json!(mu));
    }
    if !doc.points.is_empty() {
        let pts: Vec<Vec<Value>> = doc
            .points
            .iter()
            .map(|p| p.value.iter().map(q).collect())
            .collect();
        m.insert("points".into(), json!(pts));
    }
    Value::Object(m)
}

/// Runs one command on a parsed document.
pub fn run(cmd: Command, doc: &InputDocument, opts: &Options) -> R<Outcome> {
    match cmd {
        Command::Gb => gb(doc, opts),
        Command::FlatLimit => flat_limit_cmd(doc, opts),
        Command::Hilbert => hilbert(doc, opts),
        Command::ChowWeight => chow_weight(doc),
        Command::ChowPoints => chow_points(doc),
        Command::Join => join(doc),
        Command::VerifyLimitJoin => verify_join(doc),
        Command::Grading => grading(doc),
        Command::FlagValidate => flag_validate(doc),
        Command::FlagLimit => flag_limit_cmd(doc, opts),
        Command::FlagWeight => flag_weight(doc),
        Command::FlagCheck => flag_check(doc, opts),
        Command::Admissible => admissible(doc),
        Command::Batch => Err(CliError::Input(
            "batch takes a directory, not a document".into(),
        )),
    }
}

fn gb(doc: &InputDocument, opts: &Options) -> R<Outcome> {
    let names = ring(doc)?;
    let i = ideal(doc)?;
    let ord = order(doc);
    let basis = buchberger(&i, &ord)?;
    let leads: Vec<String> = basis
        .leading_monomials()
        .iter()
        .map(|m| m.fmt_with(names))
        .collect();
    let mut r = json!({
        "basis": basis.basis().iter().map(|g| g.fmt_with(names, &ord)).collect::<Vec<_>>(),
        "leading_monomials": leads,
        "reduced": basis.is_reduced(),
        "order": if doc.weights.is_some() { "weighted" } else { "graded-lex" },
    });
    if opts.check {
        let criterion = basis.satisfies_buchberger_criterion();
        let bound = opts.degree_bound.max(i.max_degree());
        let agrees = agree_up_to(&basis.ideal(names.len()), &i, bound)?;
        r["check"] = json!({
            "buchberger_criterion": criterion,
            "degree_bound": bound,
            "oracle_agrees": agrees,
        });
        if !(criterion && agrees) {
            return Err(flagstab_core::Error::CrossCheck(
                "Gröbner basis failed its cross-check".into(),
            )
            .into());
        }
    }
    Ok(Outcome::done(r))
}

fn flat_limit_cmd(doc: &InputDocument, opts: &Options) -> R<Outcome> {
    let names = ring(doc)?;
    let i = ideal(doc)?;
    let lambda = weights(doc)?;
    let lim = flat_limit(&i, &lambda)?;
    let mut r = json!({
        "generators": gens(&lim, names, &order(doc)),
        "fixed": is_fixed_by(&lim, &lambda)?,
    });
    if opts.check {
        let bound = opts.degree_bound.max(i.max_degree());
        let oracle = flat_limit_oracle(&i, &lambda, bound)?;
        let agrees = agree_up_to(&lim, &oracle, bound)?;
        r["check"] = json!({ "degree_bound": bound, "oracle_agrees": agrees });
        if !agrees {
            return Err(flagstab_core::Error::CrossCheck(
                "flat limit differs from the oracle".into(),
            )
            .into());
        }
    }
    Ok(Outcome::done(r))
}

fn hilbert(doc: &InputDocument, opts: &Options) -> R<Outcome> {
    let i = ideal(doc)?;
    let h = hilbert_data(&i)?;
    let values: Vec<(u32, u64)> = h.hilbert_function.iter().map(|(m, v)| (*m, *v)).collect();
    let mut r = json!({
        "hilbert_polynomial": h.hilbert_polynomial.to_string(),
        "dimension": h.dimension,
        "degree": h.degree,
        "stabilization_degree": h.stabilization_degree,
        "values": values,
    });
    if opts.check {
        let bound = opts.degree_bound;
        let agrees = (0..=bound).all(|m| {
            h.hilbert_function
                .get(&m)
                .is_none_or(|v| *v == hilbert_function(&i, m))
        });
        r["check"] = json!({ "degree_bound": bound, "rank_agrees": agrees });
        if !agrees {
            return Err(flagstab_core::Error::CrossCheck(
                "Hilbert function cross-check failed".into(),
            )
            .into());
        }
    }
    Ok(Outcome::done(r))
}

fn chow_weight(doc: &InputDocument) -> R<Outcome> {
    let i = ideal(doc)?;
    let lambda = weights(doc)?;
    let w = chow_weight_numeric(&i, &lambda)?;
    let values: Vec<(u32, i64)> = w.values.iter().map(|(m, v)| (*m, *v)).collect();
    Ok(Outcome::done(json!({
        "chow_weight": q(&w.chow_weight),
        "dimension": w.dimension,
        "graded_weights": values,
        "fitted": w.fitted.to_string(),
    })))
}

fn chow_points(doc: &InputDocument) -> R<Outcome> {
    let dim = ring(doc)?.len();
    let cfg = points(doc, dim)?.ok_or_else(|| missing("point"))?;
    let s = chow_points_stability(&cfg);
    let one_based = |v: &[usize]| v.iter().map(|k| k + 1).collect::<Vec<_>>();
    let lines: Vec<usize> = s
        .witness
        .contained
        .iter()
        .map(|&k| doc.points[k].line)
        .collect();
    Ok(Outcome::done(json!({
        "verdict": s.verdict.as_str(),
        "excess": s.excess,
        "length": cfg.length(),
        "reduced": cfg.is_reduced(),
        "witness": {
            "spanning": one_based(&s.witness.spanning),
            "contained": one_based(&s.witness.contained),
            "contained_lines": lines,
            "span_dim": s.witness.span_dim,
        },
    })))
}

fn two_weights(doc: &InputDocument) -> R<(i64, i64)> {
    Ok((
        doc.a.ok_or_else(|| missing("a"))?,
        doc.b.ok_or_else(|| missing("b"))?,
    ))
}

fn join(doc: &InputDocument) -> R<Outcome> {
    let names = ring(doc)?;
    let i = ideal(doc)?;
    let split = splitting(doc)?;
    let (a, b) = two_weights(doc)?;
    let j = join_ideal(&i, &split)?;
    let y = restrict(&i, split.w_vars())?;
    let h = hilbert_data(&y)?;
    if h.dimension < 0 {
        return Err(CliError::Input("the subscheme of P(W) is empty".into()));
    }
    let (dim_y, d) = (h.dimension as u64, h.degree);
    let dim_pu = split.u_vars().len() as u64 - 1;
    let cases = chow_weight_join(a, b, d, dim_y, dim_pu).ok();
    let tensor = chow_weight_join_tensor(a, b, d, dim_y, dim_pu)?;
    let balanced = a * split.u_vars().len() as i64 + b * split.w_vars().len() as i64 == 0;
    let numeric = if balanced {
        Some(q(
            &chow_weight_numeric(&j, &split.two_weight(a, b))?.chow_weight
        ))
    } else {
        None
    };
    Ok(Outcome::done(json!({
        "join": gens(&j, names, &TermOrder::GradedLex),
        "dim_y": dim_y,
        "degree": d,
        "dim_pu": dim_pu,
        "weight_case_formula": cases,
        "weight_tensor_formula": tensor,
        "weight_numeric": numeric,
    })))
}

fn verify_join(doc: &InputDocument) -> R<Outcome> {
    let names = ring(doc)?;
    let i = ideal(doc)?;
    let split = splitting(doc)?;
    let (a, b) = two_weights(doc)?;
    let rep = verify_limit_is_join(&i, &split, a, b)?;
    let w_names: Vec<String> = split.w_vars().iter().map(|&k| names[k].clone()).collect();
    Ok(Outcome::done(json!({
        "holds": rep.holds,
        "dominant": rep.dominant,
        "coordinate_weights": rep.lambda.weights(),
        "limit": gens(&rep.limit, names, &TermOrder::GradedLex),
        "section": gens(&rep.section, &w_names, &TermOrder::GradedLex),
        "join": gens(&rep.join, names, &TermOrder::GradedLex),
    })))
}

fn graded(doc: &InputDocument) -> R<GradedOnePS> {
    let beta = doc.beta.clone().ok_or_else(|| missing("beta"))?;
    let mults = doc
        .multiplicities
        .clone()
        .ok_or_else(|| missing("multiplicities"))?;
    Ok(GradedOnePS::new(
        beta,
        mults.into_iter().map(to_usize).collect(),
    )?)
}

/// Explicit grading if given, otherwise the default one for the flag shape.
fn flag_grading(doc: &InputDocument, n: usize, dim_v: usize) -> R<GradedOnePS> {
    if doc.beta.is_some() || doc.multiplicities.is_some() {
        graded(doc)
    } else {
        Ok(GradedOnePS::flag_default(n, dim_v - n)?)
    }
}

fn stages(doc: &InputDocument, last: usize) -> R<Vec<usize>> {
    match doc.stage {
        None => Ok((1..=last).collect()),
        Some(s) if s >= 1 && s as usize <= last => Ok(vec![s as usize]),
        Some(s) => Err(CliError::Input(format!("stage {s} outside 1..{last}"))),
    }
}

fn grading(doc: &InputDocument) -> R<Outcome> {
    let g = graded(doc)?;
    let mut out = Vec::new();
    for i in stages(doc, g.len() - 1)? {
        let sd = stage_data(&g, i)?;
        out.push(json!({
            "stage": i,
            "beta_le": q(&sd.beta_le),
            "beta_gt": q(&sd.beta_gt),
            "m_le": sd.m_le,
            "m_gt": sd.m_gt,
            "scale": sd.scale,
            "lambda_bracket": sd.lambda_bracket.vector_weights(),
            "lambda_paren": sd.lambda_paren.vector_weights(),
            "lie_u_bracket_dim": lie_u_bracket_positions(&g, i).len(),
        }));
    }
    Ok(Outcome::done(json!({ "dim": g.dim(), "stages": out })))
}

fn flag(doc: &InputDocument) -> R<HyperplanarFlag> {
    let dim_v = ring(doc)?.len();
    if let Some(v) = doc.dimv {
        if v as usize != dim_v {
            return Err(CliError::Input(format!(
                "dimv is {v} but the ring has {dim_v} variables"
            )));
        }
    }
    let n = to_usize(int_field(doc.n, "n")?);
    if n == 0 || n + 1 >= dim_v {
        return Err(CliError::Input(format!(
            "need 1 <= n and n + 1 < dim V, got n = {n}, dim V = {dim_v}"
        )));
    }
    let pts = points(doc, dim_v - n)?;
    Ok(HyperplanarFlag::new(n, dim_v, ideal(doc)?, pts)?)
}

fn flag_validate(doc: &InputDocument) -> R<Outcome> {
    let f = flag(doc)?;
    let v = validate_flag(&f)?;
    let strata: Vec<Value> = v
        .strata
        .iter()
        .map(|s| {
            json!({
                "stratum": s.stratum,
                "hilbert_polynomial": s.hilbert_polynomial.to_string(),
                "dimension": s.dimension,
                "degree": s.degree,
                "dimension_ok": s.dimension_ok,
                "degree_ok": s.degree_ok,
                "nondegenerate": s.nondegenerate,
                "smoothness": s.smoothness.map(|x| x.as_str()),
            })
        })
        .collect();
    let points = v.points.as_ref().map(|p| {
        json!({ "all_on_x0": p.all_on_x0, "distinct": p.distinct, "count_matches": p.count_matches })
    });
    let stability = v.point_stability.as_ref().map(|s| {
        json!({
            "verdict": s.verdict.as_str(),
            "excess": s.excess,
            "witness_contained": s.witness.contained.iter().map(|k| k + 1).collect::<Vec<_>>(),
        })
    });
    Ok(Outcome {
        result: json!({
            "degree": v.degree,
            "strata": strata,
            "hilbert_type": v.hilbert_type.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "points": points,
            "x0_reduced": v.x0_reduced.as_str(),
            "point_stability": stability,
            "non_degenerate": v.non_degenerate.as_str(),
            "non_singular": v.non_singular.as_str(),
            "stable": v.stable.as_str(),
            "connected": v.connected.as_str(),
            "verdict": v.verdict.as_str(),
        }),
        inconclusive: v.verdict == Check::Inconclusive,
    })
}

fn flag_limit_cmd(doc: &InputDocument, opts: &Options) -> R<Outcome> {
    let names = ring(doc)?;
    let f = flag(doc)?;
    let mut out = Vec::new();
    for i in stages(doc, f.n())? {
        let lim = flag_limit(&f, i, opts.check)?;
        let strata: Vec<Vec<String>> = lim
            .strata()
            .iter()
            .map(|s| gens(s, names, &TermOrder::GradedLex))
            .collect();
        out.push(json!({ "stage": i, "strata": strata }));
    }
    Ok(Outcome::done(
        json!({ "cross_checked": opts.check, "stages": out }),
    ))
}

fn flag_weight(doc: &InputDocument) -> R<Outcome> {
    let n = to_usize(int_field(doc.n, "n")?);
    let d = int_field(doc.d, "d")?;
    let g = match (&doc.beta, doc.dimv) {
        (Some(_), _) => graded(doc)?,
        (None, Some(v)) => GradedOnePS::flag_default(n, (v as usize).saturating_sub(n).max(1))?,
        (None, None) => return Err(missing("beta or dimv")),
    };
    if let Some(v) = doc.dimv {
        if v as usize != g.dim() {
            return Err(CliError::Input(format!(
                "dimv is {v} but the grading has dimension {}",
                g.dim()
            )));
        }
    }
    let a0 = doc.a0.unwrap_or(default_a0(n as u64, d));
    let mut out = Vec::new();
    for i in stages(doc, n)? {
        out.push(json!({
            "stage": i,
            "weight": q(&flag_stage_weight(n, d, &g, i, a0)?),
            "case_formula_weight": q(&flag_stage_weight_case_formula(n, d, &g, i, a0)?),
            "scale": stage_data(&g, i)?.scale,
        }));
    }
    Ok(Outcome::done(json!({
        "a0": a0,
        "beta": g.weights(),
        "multiplicities": g.multiplicities(),
        "stages": out,
    })))
}

fn stage_json(s: &StageRecord) -> Value {
    json!({
        "stage": s.stage,
        "weight": q(&s.weight),
        "stratum_weights": s.stratum_weights.iter().map(q).collect::<Vec<_>>(),
        "family_weight": q(&s.family_weight),
        "scale": s.scale,
        "weight_matches_family_constant": s.weight_matches_family_constant,
        "lie_stabilizer_dim": s.lie_stabilizer_dim,
        "point_stability": s.point_stability.map(|v: StabilityVerdict| v.as_str()),
        "sweep_excluded": s.sweep_excluded,
        "minimal_weight": s.minimal_weight.as_str(),
        "stabilizer": s.stabilizer.as_str(),
        "sweep": s.sweep.as_str(),
        "verdict": s.verdict.as_str(),
    })
}

fn flag_check(doc: &InputDocument, opts: &Options) -> R<Outcome> {
    let f = flag(doc)?;
    let g = flag_grading(doc, f.n(), f.dim_v())?;
    let d = f.degree()?;
    let a0 = doc.a0.unwrap_or(default_a0(f.n() as u64, d));
    let report = stability_report(&f, &g, a0, opts.check)?;
    let selected = stages(doc, f.n())?;
    let records: Vec<Value> = report
        .stages
        .iter()
        .filter(|s| selected.contains(&s.stage))
        .map(stage_json)
        .collect();
    let verdict = Check::all(
        report
            .stages
            .iter()
            .filter(|s| selected.contains(&s.stage))
            .map(|s| s.verdict),
    );
    Ok(Outcome {
        result: json!({
            "a0": a0,
            "degree": d,
            "beta": g.weights(),
            "multiplicities": g.multiplicities(),
            "stages": records,
            "verdict": verdict.as_str(),
        }),
        inconclusive: verdict == Check::Inconclusive,
    })
}

fn admissible(doc: &InputDocument) -> R<Outcome> {
    let a = degree_admissible(
        int_field(doc.n, "n")?,
        int_field(doc.d, "d")?,
        int_field(doc.dimv, "dimv")?,
    );
    Ok(Outcome::done(
        json!({ "admissible": a.admissible, "reasons": a.reasons }),
    ))
}
