//! Line-oriented input documents.
//!
//! ```text
//! # comment
//! ring x, y, z
//! ideal: x*z - y^2
//! weights: 2, -1, -1
//! ```
//!
//! Each line is `key: value`; `ring` may omit the colon. `ideal:` and
//! `point:` lines accumulate, every other key may appear once.

use crate::error::CliError;
use flagstab_core::poly::{scalar, Polynomial, Scalar, TermOrder};
use num_traits::{One, Zero};
use std::fmt::Write as _;

/// A value together with the position it was read from. Positions are
/// ignored by equality.
#[derive(Clone, Debug)]
pub struct Located<T> {
    pub value: T,
    pub line: usize,
    pub col: usize,
}

impl<T: PartialEq> PartialEq for Located<T> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl<T: Eq> Eq for Located<T> {}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InputDocument {
    /// Command name, used by batch runs.
    pub command: Option<String>,
    pub variables: Vec<String>,
    pub ideal: Vec<Located<Polynomial>>,
    pub weights: Option<Vec<i64>>,
    /// Variables spanning the coordinates on `U`.
    pub splitting: Option<Vec<usize>>,
    pub a: Option<i64>,
    pub b: Option<i64>,
    pub n: Option<u64>,
    pub d: Option<u64>,
    pub dimv: Option<u64>,
    pub a0: Option<u64>,
    pub beta: Option<Vec<i64>>,
    pub multiplicities: Option<Vec<u64>>,
    pub stage: Option<u64>,
    pub points: Vec<Located<Vec<Scalar>>>,
}

const KEYS: &[&str] = &[
    "command",
    "ring",
    "ideal",
    "weights",
    "splitting",
    "a",
    "b",
    "n",
    "d",
    "dimv",
    "a0",
    "beta",
    "multiplicities",
    "stage",
    "point",
];

fn err(line: usize, col: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// Parses a document; errors carry 1-based line and column.
pub fn parse(text: &str) -> Result<InputDocument, CliError> {
    let mut doc = InputDocument::default();
    let mut ring_seen = false;
    let mut seen: Vec<&str> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let lead = content.len() - content.trim_start().len();
        let body = content.trim_start();
        let (key, value, value_col) = match body.find(':') {
            Some(pos) => (body[..pos].trim(), &body[pos + 1..], lead + pos + 2),
            None if body.starts_with("ring") && body[4..].starts_with(char::is_whitespace) => {
                ("ring", &body[4..], lead + 5)
            }
            None => return Err(err(line, lead + 1, "expected `key: value`")),
        };
        let Some(&key) = KEYS.iter().find(|k| **k == key) else {
            return Err(err(line, lead + 1, format!("unknown key `{key}`")));
        };
        if key != "ideal" && key != "point" {
            if seen.contains(&key) {
                return Err(err(line, lead + 1, format!("`{key}` given twice")));
            }
            seen.push(key);
        }
        let needs_ring = matches!(key, "ideal" | "weights" | "splitting");
        if needs_ring && !ring_seen {
            return Err(err(
                line,
                lead + 1,
                format!("`{key}` before the `ring` line"),
            ));
        }
        let nvars = doc.variables.len();
        match key {
            "command" => doc.command = Some(value.trim().to_string()),
            "ring" => {
                doc.variables = parse_ring(value, line, value_col)?;
                ring_seen = true;
            }
            "ideal" => {
                for (piece, col) in split_list(value, value_col) {
                    let poly = parse_polynomial(piece, &doc.variables, line, col)?;
                    doc.ideal.push(Located {
                        value: poly,
                        line,
                        col,
                    });
                }
            }
            "weights" => {
                let w = int_list(value, line, value_col)?;
                if w.len() != nvars {
                    return Err(err(
                        line,
                        first_col(value, value_col),
                        format!("{} weights for {nvars} variables", w.len()),
                    ));
                }
                doc.weights = Some(w);
            }
            "splitting" => {
                let mut vars = Vec::new();
                for (piece, col) in split_list(value, value_col) {
                    let name = piece.trim();
                    let k = doc
                        .variables
                        .iter()
                        .position(|v| v == name)
                        .ok_or_else(|| err(line, col, format!("undeclared variable `{name}`")))?;
                    vars.push(k);
                }
                doc.splitting = Some(vars);
            }
            "a" => doc.a = Some(one_int(value, line, value_col)?),
            "b" => doc.b = Some(one_int(value, line, value_col)?),
            "n" => doc.n = Some(one_nat(value, line, value_col)?),
            "d" => doc.d = Some(one_nat(value, line, value_col)?),
            "dimv" => doc.dimv = Some(one_nat(value, line, value_col)?),
            "a0" => doc.a0 = Some(one_nat(value, line, value_col)?),
            "stage" => doc.stage = Some(one_nat(value, line, value_col)?),
            "beta" => doc.beta = Some(int_list(value, line, value_col)?),
            "multiplicities" => {
                let m = int_list(value, line, value_col)?;
                if let Some(k) = m.iter().position(|&v| v < 0) {
                    return Err(err(
                        line,
                        value_col,
                        format!("negative multiplicity at entry {}", k + 1),
                    ));
                }
                doc.multiplicities = Some(m.into_iter().map(|v| v as u64).collect());
            }
            "point" => {
                let mut coords = Vec::new();
                for (piece, col) in split_list(value, value_col) {
                    coords.push(parse_rational(piece.trim(), line, col)?);
                }
                doc.points.push(Located {
                    value: coords,
                    line,
                    col: value_col,
                });
            }
            _ => unreachable!(),
        }
    }
    Ok(doc)
}

/// Splits on commas outside parentheses, returning trimmed pieces with
/// the 1-based column of their first non-blank character. A blank value
/// gives no pieces.
fn split_list(value: &str, start_col: usize) -> Vec<(&str, usize)> {
    if value.trim().is_empty() {
        return Vec::new();
    }
    let mut bounds = Vec::new();
    let mut depth = 0i32;
    let mut begin = 0;
    for (k, c) in value.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                bounds.push((begin, k));
                begin = k + 1;
            }
            _ => {}
        }
    }
    bounds.push((begin, value.len()));
    bounds
        .into_iter()
        .map(|(b, e)| {
            let piece = &value[b..e];
            (piece.trim(), first_col(piece, start_col + b))
        })
        .collect()
}

/// Column of the first non-blank character of `s`, which starts at `col`.
fn first_col(s: &str, col: usize) -> usize {
    col + s.len() - s.trim_start().len()
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_ring(value: &str, line: usize, col: usize) -> Result<Vec<String>, CliError> {
    let mut vars: Vec<String> = Vec::new();
    for (piece, c) in split_list(value, col) {
        if !is_identifier(piece) {
            return Err(err(line, c, format!("invalid variable name `{piece}`")));
        }
        if vars.iter().any(|v| v == piece) {
            return Err(err(line, c, format!("variable `{piece}` declared twice")));
        }
        vars.push(piece.to_string());
    }
    if vars.is_empty() {
        return Err(err(line, col, "ring declares no variables"));
    }
    Ok(vars)
}

fn one_int(value: &str, line: usize, col: usize) -> Result<i64, CliError> {
    let t = value.trim();
    t.parse().map_err(|_| {
        err(
            line,
            first_col(value, col),
            format!("expected an integer, found `{t}`"),
        )
    })
}

fn one_nat(value: &str, line: usize, col: usize) -> Result<u64, CliError> {
    let t = value.trim();
    t.parse().map_err(|_| {
        err(
            line,
            first_col(value, col),
            format!("expected a non-negative integer, found `{t}`"),
        )
    })
}

fn int_list(value: &str, line: usize, col: usize) -> Result<Vec<i64>, CliError> {
    split_list(value, col)
        .into_iter()
        .map(|(piece, c)| {
            piece
                .parse()
                .map_err(|_| err(line, c, format!("expected an integer, found `{piece}`")))
        })
        .collect()
}

fn parse_rational(s: &str, line: usize, col: usize) -> Result<Scalar, CliError> {
    let bad = || err(line, col, format!("malformed rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: i64 = num.parse().map_err(|_| bad())?;
    let q: i64 = den.parse().map_err(|_| bad())?;
    if q == 0 {
        return Err(err(line, col, format!("zero denominator in `{s}`")));
    }
    Ok(Scalar::new(p.into(), q.into()))
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str, line: usize, col: usize) -> Result<Vec<(Tok, usize)>, CliError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let here = col + k;
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let text: String = chars[start..k].iter().collect();
            let v = text
                .parse()
                .map_err(|_| err(line, here, format!("integer `{text}` is too large")))?;
            out.push((Tok::Num(v), here));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push((Tok::Ident(chars[start..k].iter().collect()), here));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), here));
            k += 1;
        } else {
            return Err(err(line, here, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct ExprParser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    vars: &'a [String],
    line: usize,
    end_col: usize,
}

impl ExprParser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    fn error(&self, msg: impl Into<String>) -> CliError {
        err(self.line, self.col(), msg)
    }

    fn expr(&mut self) -> Result<Polynomial, CliError> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek() {
            let c = *c;
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' {
                acc.add(&rhs)
            } else {
                acc.sub(&rhs)
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, CliError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek() {
            let c = *c;
            self.pos += 1;
            let col = self.col();
            let rhs = self.unary()?;
            if c == '*' {
                acc = acc.mul(&rhs);
            } else {
                let divisor = constant_value(&rhs)
                    .ok_or_else(|| err(self.line, col, "division by a non-constant"))?;
                if divisor.is_zero() {
                    return Err(err(self.line, col, "division by zero"));
                }
                acc = acc.scale(&(Scalar::one() / divisor));
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, CliError> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, CliError> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Num(e)) => {
                    let e = u32::try_from(*e).map_err(|_| self.error("exponent too large"))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.error("expected a non-negative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, CliError> {
        let n = self.vars.len();
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(Polynomial::constant(n, scalar(v)))
            }
            Some(Tok::Ident(name)) => {
                let k = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| self.error(format!("undeclared variable `{name}`")))?;
                self.pos += 1;
                Ok(Polynomial::var(n, k))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::Op(')')) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(self.error("expected `)`")),
                }
            }
            Some(t) => Err(self.error(format!("unexpected `{}`", tok_text(&t)))),
            None => Err(self.error("unexpected end of expression")),
        }
    }
}

fn tok_text(t: &Tok) -> String {
    match t {
        Tok::Num(v) => v.to_string(),
        Tok::Ident(s) => s.clone(),
        Tok::Op(c) => c.to_string(),
    }
}

fn constant_value(p: &Polynomial) -> Option<Scalar> {
    if p.is_zero() {
        return Some(Scalar::zero());
    }
    match p.terms().collect::<Vec<_>>().as_slice() {
        [(m, c)] if m.is_one() => Some((*c).clone()),
        _ => None,
    }
}

/// Parses an infix polynomial over the declared variables.
pub fn parse_polynomial(
    s: &str,
    vars: &[String],
    line: usize,
    col: usize,
) -> Result<Polynomial, CliError> {
    let toks = tokenize(s, line, col)?;
    let mut p = ExprParser {
        toks,
        pos: 0,
        vars,
        line,
        end_col: col + s.chars().count(),
    };
    let poly = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.error(format!("unexpected `{}`", tok_text(&p.toks[p.pos].0))));
    }
    Ok(poly)
}

/// `p/q`, or `p` for integers.
pub fn rational_string(q: &Scalar) -> String {
    q.to_string()
}

/// Writes a document back in input syntax; `parse` inverts it.
pub fn serialize(doc: &InputDocument) -> String {
    let mut out = String::new();
    let join_ints = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(", ");
    if let Some(c) = &doc.command {
        let _ = writeln!(out, "command: {c}");
    }
    if !doc.variables.is_empty() {
        let _ = writeln!(out, "ring {}", doc.variables.join(", "));
    }
    for g in &doc.ideal {
        let _ = writeln!(
            out,
            "ideal: {}",
            g.value.fmt_with(&doc.variables, &TermOrder::GradedLex)
        );
    }
    if let Some(w) = &doc.weights {
        let _ = writeln!(out, "weights: {}", join_ints(w));
    }
    if let Some(s) = &doc.splitting {
        let names: Vec<&str> = s.iter().map(|&k| doc.variables[k].as_str()).collect();
        let _ = writeln!(out, "splitting: {}", names.join(", "));
    }
    for (key, v) in [("a", doc.a), ("b", doc.b)] {
        if let Some(v) = v {
            let _ = writeln!(out, "{key}: {v}");
        }
    }
    for (key, v) in [
        ("n", doc.n),
        ("d", doc.d),
        ("dimv", doc.dimv),
        ("a0", doc.a0),
    ] {
        if let Some(v) = v {
            let _ = writeln!(out, "{key}: {v}");
        }
    }
    if let Some(b) = &doc.beta {
        let _ = writeln!(out, "beta: {}", join_ints(b));
    }
    if let Some(m) = &doc.multiplicities {
        let m: Vec<String> = m.iter().map(u64::to_string).collect();
        let _ = writeln!(out, "multiplicities: {}", m.join(", "));
    }
    if let Some(s) = doc.stage {
        let _ = writeln!(out, "stage: {s}");
    }
    for p in &doc.points {
        let c: Vec<String> = p.value.iter().map(rational_string).collect();
        let _ = writeln!(out, "point: {}", c.join(", "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_conic_document() {
        let doc = parse("ring x,y,z\nideal: x*z - y^2\nweights: 2,-1,-1\n").unwrap();
        assert_eq!(doc.variables, vec!["x", "y", "z"]);
        assert_eq!(doc.ideal.len(), 1);
        assert_eq!(
            doc.ideal[0].value,
            Polynomial::from_int_terms(3, &[(1, &[1, 0, 1]), (-1, &[0, 2, 0])])
        );
        assert_eq!(doc.weights, Some(vec![2, -1, -1]));
    }

    #[test]
    fn expression_grammar() {
        let vars: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
        let p = parse_polynomial("(x - y)^2 - -2*x*y + 3/2*y^2", &vars, 1, 1).unwrap();
        assert_eq!(p.fmt_with(&vars, &TermOrder::GradedLex), "x^2 + 5/2*y^2");
        let q = parse_polynomial("x*y/4", &vars, 1, 1).unwrap();
        assert_eq!(q.fmt_with(&vars, &TermOrder::GradedLex), "1/4*x*y");
    }

    #[test]
    fn errors_have_positions() {
        let e = parse("ring x,y,z\nideal: x*w").unwrap_err();
        assert_eq!(e.to_string(), "line 2, column 10: undeclared variable `w`");
        let e = parse("ring x,y,z\nweights: 1,1").unwrap_err();
        assert!(e
            .to_string()
            .starts_with("line 2, column 10: 2 weights for 3 variables"));
        let e = parse("ring x,y\npoint: 1/0, 1").unwrap_err();
        assert!(e.to_string().contains("zero denominator"));
        let e = parse("ring x,y\npoint: 1/, 1").unwrap_err();
        assert!(e.to_string().contains("malformed rational"));
        let e = parse("ideal: x").unwrap_err();
        assert!(e.to_string().contains("before the `ring` line"));
        let e = parse("ring x\nideal: x / x").unwrap_err();
        assert!(e.to_string().contains("non-constant"));
    }

    #[test]
    fn comments_and_accumulation() {
        let doc =
            parse("# conic pair\nring x, y, z\nideal: x, y # two\nideal: z^2\npoint: 1, -1/2, 0\n")
                .unwrap();
        assert_eq!(doc.ideal.len(), 3);
        assert_eq!(doc.ideal[2].line, 4);
        assert_eq!(doc.points[0].value[1], Scalar::new((-1).into(), 2.into()));
    }

    #[test]
    fn serialize_round_trips() {
        let text = "command: flag-check\nring y1, y2, x\nideal: y1^2*y2 - y1*y2^2 + x^3\nweights: 1, 1, -2\nsplitting: x\na: -2\nb: 1\nn: 1\nd: 3\ndimv: 3\na0: 30\nbeta: 1, -2\nmultiplicities: 2, 1\nstage: 1\npoint: 1, 0\npoint: 1/2, 1\n";
        let doc = parse(text).unwrap();
        assert_eq!(serialize(&doc), text);
        assert_eq!(parse(&serialize(&doc)).unwrap(), doc);
    }
}
