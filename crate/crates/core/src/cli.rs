//! Front end for the `tracecount` binary: system files, commands and reports.
//!
//! A system file has a `vars x, y, ...` header, then one polynomial per line.
//! Lines starting with `H:` declare sign-condition polynomials, `#` starts a
//! comment and blank lines are ignored.

use std::fmt;

use serde::Serialize;

use crate::arith::Rational;
use crate::count::{count_with_general_position, find_shape, hermite_count, ShapeSchedule, ShapeStatus};
use crate::error::{Error, ParseError};
use crate::groebner::buchberger;
use crate::oracle::{count_all_real, oracle_count_with};
use crate::poly::{identifiers_in, parse_polynomial_at, MonomialOrder, OrderKind, Polynomial, VarContext};
use crate::quadform::{
    definiteness_of_type, hurwitz_type, type_of, type_via_descartes, Definiteness, FormType, SymMatrix,
};

pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NOT_ZERO_DIMENSIONAL: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;
pub const EXIT_ORACLE_INAPPLICABLE: i32 = 4;
pub const EXIT_DISAGREEMENT: i32 = 5;

pub const DEFAULT_MAX_TRIALS: usize = 12;

/// Error with the process exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotZeroDimensional { .. } => EXIT_NOT_ZERO_DIMENSIONAL,
        Error::InternalConsistency(_) => EXIT_INTERNAL,
        Error::NotRadical
        | Error::NotShapeForm(_)
        | Error::ShapeUnobtainable { .. }
        | Error::StepBudgetExceeded(_)
        | Error::EndpointIsRoot(_)
        | Error::EmptyInterval => EXIT_ORACLE_INAPPLICABLE,
        _ => EXIT_INPUT,
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::new(exit_code(&e), e.to_string())
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::new(EXIT_INPUT, format!("parse error at {e}"))
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Clone, Debug)]
pub struct SystemFile {
    pub ctx: VarContext,
    pub system: Vec<Polynomial>,
    pub hs: Vec<Polynomial>,
}

fn shift(e: ParseError, offset: usize) -> ParseError {
    ParseError::new(e.line, e.column + offset, e.message)
}

/// Parses a system file.
pub fn parse_system(text: &str) -> Result<SystemFile, ParseError> {
    let mut ctx: Option<VarContext> = None;
    let mut system = Vec::new();
    let mut hs = Vec::new();
    let mut last_line = 1;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let body = content.trim_start();
        let indent = content.chars().count() - body.chars().count();
        let body = body.trim_end();
        if body.is_empty() {
            continue;
        }
        let Some(ctx) = &ctx else {
            ctx = Some(parse_header(body, line, indent)?);
            continue;
        };
        if let Some(rest) = body.strip_prefix("H:") {
            let h = parse_polynomial_at(rest, ctx, line).map_err(|e| shift(e, indent + 2))?;
            if h.is_zero() {
                return Err(ParseError::new(line, indent + 1, "H must be a nonzero polynomial"));
            }
            hs.push(h);
        } else {
            system.push(parse_polynomial_at(body, ctx, line).map_err(|e| shift(e, indent))?);
        }
    }
    let ctx = ctx.ok_or_else(|| ParseError::new(1, 1, "missing `vars` header"))?;
    if system.is_empty() {
        return Err(ParseError::new(last_line + 1, 1, "expected at least one polynomial after the `vars` header"));
    }
    Ok(SystemFile { ctx, system, hs })
}

fn parse_header(body: &str, line: usize, indent: usize) -> Result<VarContext, ParseError> {
    let rest = body
        .strip_prefix("vars")
        .filter(|r| r.is_empty() || r.starts_with(char::is_whitespace))
        .ok_or_else(|| ParseError::new(line, indent + 1, "expected a `vars x, y, ...` header"))?;
    let mut names = Vec::new();
    let mut col = indent + 5;
    for piece in rest.split(',') {
        let name = piece.trim();
        let lead = piece.chars().count() - piece.trim_start().chars().count();
        let ok = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(ParseError::new(line, col + lead, format!("invalid variable name `{name}`")));
        }
        if names.contains(&name.to_string()) {
            return Err(ParseError::new(line, col + lead, format!("variable `{name}` declared twice")));
        }
        names.push(name.to_string());
        col += piece.chars().count() + 1;
    }
    VarContext::new(names).map_err(|e| ParseError::new(line, indent + 1, e.to_string()))
}

#[derive(Clone, Debug)]
pub struct Options {
    pub order: OrderKind,
    pub t: Option<Rational>,
    pub max_trials: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { order: OrderKind::DegRevLex, t: None, max_trials: DEFAULT_MAX_TRIALS }
    }
}

impl Options {
    pub fn schedule(&self) -> ShapeSchedule {
        match &self.t {
            Some(t) => ShapeSchedule::Fixed(t.clone()),
            None => ShapeSchedule::Retry { max_trials: self.max_trials },
        }
    }
}

fn canonical(p: &Polynomial) -> String {
    p.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HCountJson {
    pub h: String,
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

/// `count` output; field order is the JSON key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountOutput {
    pub total_real: usize,
    pub dim_algebra: usize,
    pub distinct_complex: usize,
    pub h_counts: Vec<HCountJson>,
    pub general_position_t: Option<Rational>,
    #[serde(skip)]
    pub trace_form_type: FormType,
    #[serde(skip)]
    pub shape: Option<String>,
    #[serde(skip)]
    pub shape_note: String,
}

impl fmt::Display for CountOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "real solutions (distinct):     {}", self.total_real)?;
        writeln!(f, "complex solutions (with mult): {}", self.dim_algebra)?;
        writeln!(f, "complex solutions (distinct):  {}", self.distinct_complex)?;
        writeln!(f, "trace form type:               {}", self.trace_form_type)?;
        for h in &self.h_counts {
            writeln!(f, "H = {}: pos {}, neg {}, zero {}", h.h, h.pos, h.neg, h.zero)?;
        }
        match &self.general_position_t {
            Some(t) => writeln!(f, "general position: t = {t}")?,
            None => writeln!(f, "general position: not needed")?,
        }
        match &self.shape {
            Some(s) => {
                writeln!(f, "shape basis:")?;
                for line in s.lines() {
                    writeln!(f, "  {line}")?;
                }
            }
            None => writeln!(f, "shape basis: {}", self.shape_note)?,
        }
        Ok(())
    }
}

fn describe_shape(status: &ShapeStatus) -> (Option<String>, String) {
    match status {
        ShapeStatus::Found { shape, .. } => (Some(shape.to_string()), String::new()),
        ShapeStatus::Empty => (None, "none (no complex solutions)".into()),
        ShapeStatus::NotRadical { .. } => (None, "none (eliminant not squarefree; ideal not radical)".into()),
        ShapeStatus::Exhausted { trials } => (None, format!("none found in {trials} trials")),
    }
}

pub fn cmd_count(text: &str, opts: &Options) -> CliResult<CountOutput> {
    let file = parse_system(text)?;
    let order = MonomialOrder::new(opts.order, file.ctx.len());
    let report = count_with_general_position(&file.system, &file.hs, &order, &opts.schedule())?;
    let (shape, shape_note) = describe_shape(&report.shape);
    Ok(CountOutput {
        total_real: report.real.total_real,
        dim_algebra: report.real.total_complex,
        distinct_complex: report.real.distinct_complex,
        h_counts: report
            .h_counts
            .iter()
            .map(|(h, c)| HCountJson { h: canonical(h), pos: c.positive, neg: c.negative, zero: c.zero })
            .collect(),
        general_position_t: report.general_position_t().cloned(),
        trace_form_type: report.real.trace_form_type,
        shape,
        shape_note,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HermiteOutput {
    pub polynomial: String,
    pub r: usize,
    pub s: usize,
    #[serde(rename = "type")]
    pub form_type: FormType,
    pub rank: usize,
    pub dim: usize,
}

impl fmt::Display for HermiteOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "polynomial: {}", self.polynomial)?;
        writeln!(f, "real roots (distinct): r = {}", self.r)?;
        writeln!(f, "non-real conjugate pairs: s = {}", self.s)?;
        writeln!(f, "trace form type: {}", self.form_type)?;
        writeln!(f, "rank: {} (of dim {})", self.rank, self.dim)
    }
}

/// Hermite's count for a univariate polynomial literal.
pub fn cmd_hermite(literal: &str) -> CliResult<HermiteOutput> {
    let names = identifiers_in(literal)?;
    if names.len() > 1 {
        return Err(CliError::new(
            EXIT_INPUT,
            format!("expected a univariate polynomial, found variables {}", names.join(", ")),
        ));
    }
    let var = names.into_iter().next().unwrap_or_else(|| "x".to_string());
    let ctx = VarContext::new([var])?;
    let g = parse_polynomial_at(literal, &ctx, 1)?;
    let h = hermite_count(&g)?;
    Ok(HermiteOutput {
        polynomial: canonical(&g),
        r: h.real,
        s: h.complex_pairs,
        form_type: h.form_type,
        rank: h.rank,
        dim: h.dim,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureOutput {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub rank: usize,
    pub signature: i64,
    pub definiteness: Definiteness,
    /// Type from leading principal minors, when all are nonzero.
    pub hurwitz: Option<FormType>,
    /// Whether the characteristic-polynomial count matches the diagonalization.
    pub descartes_agrees: bool,
}

impl fmt::Display for SignatureOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "type: ({}, {}) on n = {}", self.p, self.q, self.n)?;
        writeln!(f, "rank: {}", self.rank)?;
        writeln!(f, "signature: {}", self.signature)?;
        writeln!(f, "definiteness: {}", self.definiteness)?;
        match &self.hurwitz {
            Some(t) => writeln!(f, "hurwitz: {t}")?,
            None => writeln!(f, "hurwitz: not applicable (a leading minor vanishes)")?,
        }
        writeln!(f, "descartes check: {}", if self.descartes_agrees { "AGREE" } else { "DISAGREE" })
    }
}

pub fn cmd_signature(text: &str) -> CliResult<SignatureOutput> {
    let s = SymMatrix::parse(text)?;
    let t = type_of(&s);
    let hurwitz = hurwitz_type(&s);
    let descartes_agrees = type_via_descartes(&s) == t;
    if !descartes_agrees || hurwitz.as_ref().is_some_and(|h| h != &t) {
        return Err(CliError::new(EXIT_INTERNAL, format!("signature routes disagree on type {t}")));
    }
    Ok(SignatureOutput {
        n: t.n,
        p: t.p,
        q: t.q,
        rank: t.rank(),
        signature: t.signature(),
        definiteness: definiteness_of_type(&t),
        hurwitz,
        descartes_agrees,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeOutput {
    pub variables: Vec<String>,
    /// `X_i - g_i(X_n)` for `i < n`, then `g_n(X_n)`.
    pub generators: Vec<String>,
    pub general_position_t: Option<Rational>,
}

impl fmt::Display for ShapeOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.general_position_t {
            Some(t) => writeln!(f, "general position: t = {t}")?,
            None => writeln!(f, "general position: not needed")?,
        }
        for g in &self.generators {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

pub fn cmd_shape(text: &str, opts: &Options) -> CliResult<ShapeOutput> {
    let file = parse_system(text)?;
    let order = MonomialOrder::lex(file.ctx.len());
    match find_shape(&file.system, &[], &opts.schedule())?.0 {
        ShapeStatus::Found { t, shape } => Ok(ShapeOutput {
            variables: file.ctx.names().to_vec(),
            generators: shape.generators().iter().map(|g| g.display_with(&order)).collect(),
            general_position_t: t,
        }),
        ShapeStatus::Empty => {
            Err(CliError::new(EXIT_ORACLE_INAPPLICABLE, "no shape basis: the system has no complex solutions"))
        }
        ShapeStatus::NotRadical { .. } => Err(Error::NotRadical.into()),
        ShapeStatus::Exhausted { trials } => Err(Error::ShapeUnobtainable { trials }.into()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub quantity: String,
    pub signature: usize,
    pub oracle: usize,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyOutput {
    pub comparisons: Vec<Comparison>,
    pub general_position_t: Option<Rational>,
    pub all_agree: bool,
}

impl fmt::Display for VerifyOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.comparisons.iter().map(|c| c.quantity.len()).max().unwrap_or(8).max(8);
        writeln!(f, "{:<width$}  {:>9}  {:>6}  verdict", "quantity", "signature", "oracle")?;
        for c in &self.comparisons {
            let verdict = if c.agree { "AGREE" } else { "DISAGREE" };
            writeln!(f, "{:<width$}  {:>9}  {:>6}  {verdict}", c.quantity, c.signature, c.oracle)?;
        }
        writeln!(f, "{}", if self.all_agree { "all counts agree" } else { "counts DISAGREE" })
    }
}

fn compare(quantity: impl Into<String>, signature: usize, oracle: usize) -> Comparison {
    Comparison { quantity: quantity.into(), signature, oracle, agree: signature == oracle }
}

/// Runs the signature counts and the Sturm oracle and compares them.
pub fn cmd_verify(text: &str, opts: &Options) -> CliResult<VerifyOutput> {
    let file = parse_system(text)?;
    let order = MonomialOrder::new(opts.order, file.ctx.len());
    let report = count_with_general_position(&file.system, &file.hs, &order, &opts.schedule())?;
    let inapplicable = |e: Error| -> CliError {
        let code = exit_code(&e);
        if code == EXIT_ORACLE_INAPPLICABLE {
            CliError::new(code, format!("oracle inapplicable: {e}"))
        } else {
            e.into()
        }
    };
    let schedule = opts.schedule();
    let one = Polynomial::one(&file.ctx);
    let base = oracle_count_with(&file.system, &one, &schedule).map_err(inapplicable)?;

    let mut comparisons = vec![compare("total_real", report.real.total_real, base.total_real)];
    if file.ctx.len() == 1 && file.system.len() == 1 {
        let g = file.system[0].to_univariate(0)?;
        let sturm = if g.is_zero() { 0 } else { count_all_real(&g)? };
        let hermite = hermite_count(&file.system[0])?;
        comparisons.push(compare("hermite r vs sturm", hermite.real, sturm));
    }
    for (h, counts) in &report.h_counts {
        let o = oracle_count_with(&file.system, h, &schedule).map_err(inapplicable)?;
        let name = canonical(h);
        comparisons.push(compare(format!("H = {name}: pos"), counts.positive, o.positive));
        comparisons.push(compare(format!("H = {name}: neg"), counts.negative, o.negative));
        comparisons.push(compare(format!("H = {name}: zero"), counts.zero, o.zero));
    }
    let all_agree = comparisons.iter().all(|c| c.agree);
    Ok(VerifyOutput { comparisons, general_position_t: base.t, all_agree })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroebnerOutput {
    pub order: String,
    pub variables: Vec<String>,
    pub basis: Vec<String>,
    /// `dim Q[X]/I` when the ideal is zero-dimensional.
    pub dim_algebra: Option<usize>,
}

impl fmt::Display for GroebnerOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "reduced Groebner basis ({}, {}):", self.order, self.variables.join(" > "))?;
        for g in &self.basis {
            writeln!(f, "  {g}")?;
        }
        match self.dim_algebra {
            Some(d) => writeln!(f, "zero-dimensional, dim = {d}"),
            None => writeln!(f, "not zero-dimensional"),
        }
    }
}

pub fn cmd_groebner(text: &str, opts: &Options) -> CliResult<GroebnerOutput> {
    let file = parse_system(text)?;
    let order = MonomialOrder::new(opts.order, file.ctx.len());
    let gb = buchberger(&file.system, &order)?;
    let dim_algebra = match crate::groebner::quotient_algebra(&gb) {
        Ok(alg) => Some(alg.dim()),
        Err(Error::NotZeroDimensional { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(GroebnerOutput {
        order: opts.order.to_string(),
        variables: file.ctx.names().to_vec(),
        basis: gb.generators().iter().map(|g| g.display_with(&order)).collect(),
        dim_algebra,
    })
}
