//! Real and complex solution counts from trace-form signatures.
//!
//! For a zero-dimensional system with quotient algebra `A`:
//!
//! * the signature of the trace form of `A` is the number of distinct real
//!   solutions, its rank the number of distinct complex ones, and `dim A`
//!   the number of complex solutions with multiplicity;
//! * for a weight `H`, with `sigma1 = sign(Phi_H)`, `sigma2 = sign(Phi_{H^2})`
//!   and `sigma3` the trace-form signature of `Q[X]/<system, H>`, the real
//!   solutions split as `p_H = (sigma2 + sigma1)/2` with `H > 0`,
//!   `q_H = (sigma2 - sigma1)/2` with `H < 0` and `z_H = sigma3` with `H = 0`.
//!
//! None of this needs radicality or general position. Only the shape basis
//! (eliminant plus coordinate polynomials) does.

use std::fmt;

use serde::Serialize;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, QuotientAlgebra};
use crate::poly::{general_position_transform, MonomialOrder, Polynomial, UniPoly, VarContext};
use crate::quadform::{type_of, FormType};
use crate::traceform::{trace_form, TraceVector};

/// Order used for the counting algebras; any order gives the same counts.
fn counting_order(ctx: &VarContext) -> MonomialOrder {
    MonomialOrder::degrevlex(ctx.len())
}

fn system_context(system: &[Polynomial]) -> Result<VarContext> {
    let ctx = system.first().ok_or(Error::AllZeroGenerators)?.context().clone();
    if system.iter().any(|p| p.context() != &ctx) {
        return Err(Error::ContextMismatch);
    }
    Ok(ctx)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HermiteCount {
    /// Distinct real roots.
    pub real: usize,
    /// Pairs of distinct non-real roots.
    pub complex_pairs: usize,
    pub form_type: FormType,
    pub rank: usize,
    pub dim: usize,
}

/// Hermite's count for a univariate polynomial: the trace form of
/// `Q[X]/(g)` has type `(r + s, s)` with `r` real roots and `s` conjugate pairs.
pub fn hermite_count(g: &Polynomial) -> Result<HermiteCount> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let var = g.univariate_variable()?;
    if var.is_none() {
        return Ok(HermiteCount {
            real: 0,
            complex_pairs: 0,
            form_type: FormType { p: 0, q: 0, n: 0 },
            rank: 0,
            dim: 0,
        });
    }
    let alg = QuotientAlgebra::from_system(std::slice::from_ref(g), &counting_order(g.context()))?;
    let t = type_of(&trace_form(&alg));
    if t.p < t.q {
        return Err(Error::InternalConsistency(format!("trace form type {t} has negative signature")));
    }
    Ok(HermiteCount { real: t.p - t.q, complex_pairs: t.q, form_type: t, rank: t.rank(), dim: alg.dim() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealCount {
    /// Distinct real solutions.
    pub total_real: usize,
    /// Complex solutions counted with multiplicity (`dim A`).
    pub total_complex: usize,
    /// Distinct complex solutions (rank of the trace form).
    pub distinct_complex: usize,
    pub trace_form_type: FormType,
}

fn real_count_of(alg: &QuotientAlgebra) -> Result<RealCount> {
    let t = type_of(&trace_form(alg));
    if t.p < t.q {
        return Err(Error::InternalConsistency(format!("trace form type {t} has negative signature")));
    }
    Ok(RealCount { total_real: t.p - t.q, total_complex: alg.dim(), distinct_complex: t.rank(), trace_form_type: t })
}

pub fn count_real_points(system: &[Polynomial]) -> Result<RealCount> {
    let ctx = system_context(system)?;
    let alg = QuotientAlgebra::from_system(system, &counting_order(&ctx))?;
    real_count_of(&alg)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignCounts {
    /// Real solutions with `H > 0`.
    pub positive: usize,
    /// Real solutions with `H < 0`.
    pub negative: usize,
    /// Real solutions with `H = 0`.
    pub zero: usize,
    /// `sign Phi_H`.
    pub sigma_h: i64,
    /// `sign Phi_{H^2}`.
    pub sigma_h2: i64,
    /// Trace-form signature of `Q[X]/<system, H>`; 0 for the zero ring.
    pub sigma_zero_set: i64,
    /// `rank Phi_H`: distinct complex solutions with `H != 0`.
    pub rank_h: usize,
}

impl SignCounts {
    pub fn total_real(&self) -> usize {
        self.positive + self.negative + self.zero
    }
}

fn sign_counts_in(alg: &QuotientAlgebra, system: &[Polynomial], h: &Polynomial) -> Result<SignCounts> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if h.context() != alg.context() {
        return Err(Error::ContextMismatch);
    }
    let tv = TraceVector::new(alg);
    let phi_h = type_of(&tv.generalized_trace_form(h)?);
    let phi_h2 = type_of(&tv.generalized_trace_form(&(h * h))?);

    let mut extended = system.to_vec();
    extended.push(h.clone());
    let b = QuotientAlgebra::from_system(&extended, alg.groebner_basis().order())?;
    let sigma3 = if b.dim() == 0 { 0 } else { type_of(&trace_form(&b)).signature() };

    let (s1, s2) = (phi_h.signature(), phi_h2.signature());
    if (s1 + s2) % 2 != 0 || s2 < s1.abs() || sigma3 < 0 {
        return Err(Error::InternalConsistency(format!(
            "signatures sign(Phi_h) = {s1}, sign(Phi_h^2) = {s2}, sign(tr_B) = {sigma3} are inconsistent"
        )));
    }
    Ok(SignCounts {
        positive: ((s2 + s1) / 2) as usize,
        negative: ((s2 - s1) / 2) as usize,
        zero: sigma3 as usize,
        sigma_h: s1,
        sigma_h2: s2,
        sigma_zero_set: sigma3,
        rank_h: phi_h.rank(),
    })
}

/// Sign-condition counts of `h` on the real solutions of `system`.
pub fn sign_condition_counts(system: &[Polynomial], h: &Polynomial) -> Result<SignCounts> {
    let ctx = system_context(system)?;
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let alg = QuotientAlgebra::from_system(system, &counting_order(&ctx))?;
    sign_counts_in(&alg, system, h)
}

/// Shape presentation `X_i - g_i(X_n)` (i < n), `g_n(X_n)` of a radical ideal
/// whose solutions have pairwise distinct last coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeBasis {
    ctx: VarContext,
    coordinates: Vec<UniPoly>,
    eliminant: UniPoly,
}

impl ShapeBasis {
    pub fn context(&self) -> &VarContext {
        &self.ctx
    }

    /// `g_1..g_{n-1}`, polynomials in the last variable.
    pub fn coordinate_polynomials(&self) -> &[UniPoly] {
        &self.coordinates
    }

    /// `g_n`: monic and squarefree.
    pub fn eliminant(&self) -> &UniPoly {
        &self.eliminant
    }

    pub fn degree(&self) -> usize {
        self.eliminant.degree().unwrap_or(0)
    }

    /// Generators `X_1 - g_1(X_n), ..., g_n(X_n)`.
    pub fn generators(&self) -> Vec<Polynomial> {
        let n = self.ctx.len();
        let mut out: Vec<Polynomial> = self
            .coordinates
            .iter()
            .enumerate()
            .map(|(i, g)| &Polynomial::var(&self.ctx, i) - &Polynomial::from_univariate(&self.ctx, n - 1, g))
            .collect();
        out.push(Polynomial::from_univariate(&self.ctx, n - 1, &self.eliminant));
        out
    }

    /// `H(g_1(T), ..., g_{n-1}(T), T) mod g_n(T)`.
    pub fn reduce_to_eliminant(&self, h: &Polynomial) -> Result<UniPoly> {
        if h.context() != &self.ctx {
            return Err(Error::ContextMismatch);
        }
        let mut images: Vec<UniPoly> =
            self.coordinates.iter().map(|g| g.rem(&self.eliminant)).collect::<Result<_>>()?;
        images.push(UniPoly::x().rem(&self.eliminant)?);
        let mut acc = UniPoly::zero();
        for (m, c) in h.terms() {
            let mut term = UniPoly::constant(c.clone());
            for (img, &e) in images.iter().zip(m.exponents()) {
                for _ in 0..e {
                    term = term.mul(img).rem(&self.eliminant)?;
                }
            }
            acc = acc.add(&term);
        }
        acc.rem(&self.eliminant)
    }
}

impl fmt::Display for ShapeBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = MonomialOrder::lex(self.ctx.len());
        for g in self.generators() {
            writeln!(f, "{}", g.display_with(&order))?;
        }
        Ok(())
    }
}

/// Reads a shape basis off the reduced lex basis (`X_1 > ... > X_n`).
pub fn shape_basis(system: &[Polynomial]) -> Result<ShapeBasis> {
    let ctx = system_context(system)?;
    let n = ctx.len();
    let order = MonomialOrder::lex(n);
    let gb = buchberger(system, &order)?;
    if gb.is_unit() {
        return Err(Error::NotShapeForm("the system has no solutions".into()));
    }
    let unbounded = gb.unbounded_variables();
    if !unbounded.is_empty() {
        return Err(Error::NotZeroDimensional {
            variables: unbounded.iter().map(|&v| ctx.name(v).to_string()).collect(),
        });
    }
    let gens = gb.generators();
    if gens.len() != n {
        return Err(Error::NotShapeForm(format!("{} generators instead of {n}", gens.len())));
    }
    // reduced lex basis sorted descending: X_1 - g_1, ..., X_{n-1} - g_{n-1}, g_n
    let last = n - 1;
    let eliminant = gens[last]
        .to_univariate(last)
        .map_err(|_| Error::NotShapeForm(format!("last generator involves variables other than {}", ctx.name(last))))?;
    let mut coordinates = Vec::with_capacity(last);
    for (i, g) in gens[..last].iter().enumerate() {
        let xi = Polynomial::var(&ctx, i);
        let rest = &xi - g;
        let gi = rest.to_univariate(last).ok().filter(|_| g.coefficient(xi.terms().next().unwrap().0).is_one());
        match gi {
            Some(gi) => coordinates.push(gi),
            None => {
                return Err(Error::NotShapeForm(format!(
                    "generator `{}` is not of the form {} - g({})",
                    g.display_with(&order),
                    ctx.name(i),
                    ctx.name(last)
                )))
            }
        }
    }
    if !eliminant.is_squarefree() {
        return Err(Error::NotRadical);
    }
    Ok(ShapeBasis { ctx, coordinates, eliminant })
}

/// Outcome of the shape search in [`count_with_general_position`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeStatus {
    /// Shape found; `t` is the general-position parameter, `None` if no transform was needed.
    Found { t: Option<Rational>, shape: ShapeBasis },
    /// The system has no complex solutions.
    Empty,
    /// The eliminant is not squarefree, so the ideal is not radical.
    NotRadical { t: Option<Rational> },
    /// No tried parameter produced shape form.
    Exhausted { trials: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HCount {
    pub h: String,
    #[serde(flatten)]
    pub counts: SignCounts,
}

#[derive(Clone, Debug)]
pub struct CountReport {
    pub real: RealCount,
    pub h_counts: Vec<(Polynomial, SignCounts)>,
    pub shape: ShapeStatus,
}

impl CountReport {
    pub fn general_position_t(&self) -> Option<&Rational> {
        match &self.shape {
            ShapeStatus::Found { t, .. } => t.as_ref(),
            _ => None,
        }
    }

    pub fn shape_basis(&self) -> Option<&ShapeBasis> {
        match &self.shape {
            ShapeStatus::Found { shape, .. } => Some(shape),
            _ => None,
        }
    }
}

/// How [`find_shape`] chooses general-position parameters.
#[derive(Clone, Debug)]
pub enum ShapeSchedule {
    /// Try the system as given, then `t = 1, 2, ..., max_trials`.
    Retry { max_trials: usize },
    /// Use exactly this parameter.
    Fixed(Rational),
}

/// Searches for a shape basis, transforming `extra` polynomials alongside the system.
pub fn find_shape(
    system: &[Polynomial],
    extra: &[Polynomial],
    schedule: &ShapeSchedule,
) -> Result<(ShapeStatus, Vec<Polynomial>)> {
    let attempt = |t: Option<&Rational>| -> Result<(std::result::Result<ShapeBasis, Error>, Vec<Polynomial>)> {
        match t {
            None => Ok((shape_basis(system), extra.to_vec())),
            Some(t) => {
                let sys = general_position_transform(system, t)?;
                let ex = general_position_transform(extra, t)?;
                Ok((shape_basis(&sys), ex))
            }
        }
    };
    let candidates: Vec<Option<Rational>> = match schedule {
        ShapeSchedule::Fixed(t) => vec![Some(t.clone())],
        ShapeSchedule::Retry { max_trials } => {
            std::iter::once(None).chain((1..=*max_trials as i64).map(|k| Some(Rational::from(k)))).collect()
        }
    };
    let trials = candidates.len();
    for t in candidates {
        let (res, ex) = attempt(t.as_ref())?;
        match res {
            Ok(shape) => return Ok((ShapeStatus::Found { t, shape }, ex)),
            Err(Error::NotRadical) => return Ok((ShapeStatus::NotRadical { t }, ex)),
            Err(Error::NotShapeForm(msg)) if msg.contains("no solutions") => return Ok((ShapeStatus::Empty, ex)),
            Err(Error::NotShapeForm(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok((ShapeStatus::Exhausted { trials }, Vec::new()))
}

/// Full count: totals, per-`H` sign counts and a shape basis when one is found.
///
/// `order` only picks the quotient basis; the counts do not depend on it.
pub fn count_with_general_position(
    system: &[Polynomial],
    hs: &[Polynomial],
    order: &MonomialOrder,
    schedule: &ShapeSchedule,
) -> Result<CountReport> {
    let ctx = system_context(system)?;
    if hs.iter().any(|h| h.context() != &ctx) || order.arity() != ctx.len() {
        return Err(Error::ContextMismatch);
    }
    let alg = QuotientAlgebra::from_system(system, order)?;
    let real = real_count_of(&alg)?;
    let h_counts = hs.iter().map(|h| Ok((h.clone(), sign_counts_in(&alg, system, h)?))).collect::<Result<Vec<_>>>()?;
    let shape = if alg.dim() == 0 { ShapeStatus::Empty } else { find_shape(system, &[], schedule)?.0 };
    Ok(CountReport { real, h_counts, shape })
}
