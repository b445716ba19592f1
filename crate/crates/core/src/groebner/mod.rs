//! Reduced Gröbner bases by Buchberger's algorithm.
//!
//! Pairs are selected by the normal strategy (smallest lcm first) and pruned
//! with Buchberger's product and chain criteria. Internally polynomials are
//! kept as term vectors sorted ascending under the active order, so the
//! leading term is always the last element.

mod quotient;

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, VarContext};

pub use quotient::{mult_matrix, quotient_algebra, QuotientAlgebra};

#[derive(Clone, Debug)]
struct TermVec {
    // ascending under the order; last is leading
    terms: Vec<(Monomial, Rational)>,
}

impl TermVec {
    fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, Rational)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        TermVec { terms }
    }

    fn to_poly(&self, ctx: &VarContext) -> Polynomial {
        Polynomial::from_terms(ctx, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &(Monomial, Rational) {
        self.terms.last().expect("nonzero polynomial")
    }

    fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.last() {
            if !lc.is_one() {
                let inv = lc.inverse().expect("nonzero leading coefficient");
                for (_, c) in &mut self.terms {
                    *c *= &inv;
                }
            }
        }
    }

    /// `self - coeff * shift * g`
    fn sub_scaled(&self, coeff: &Rational, shift: &Monomial, g: &TermVec, order: &MonomialOrder) -> TermVec {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(m, c)| (m.mul(shift), c * coeff)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Less => out.push(a.next().unwrap().clone()),
                Ordering::Greater => {
                    let (m, c) = b.next().unwrap();
                    out.push((m, -c));
                }
                Ordering::Equal => {
                    let (m, c1) = a.next().unwrap();
                    let (_, c2) = b.next().unwrap();
                    let c = c1 - c2;
                    if !c.is_zero() {
                        out.push((m.clone(), c));
                    }
                }
            }
        }
        TermVec { terms: out }
    }
}

/// Full reduction of `f` modulo `basis`, always dividing by the first generator
/// whose leading monomial divides the current leading term.
fn reduce(f: &TermVec, basis: &[TermVec], order: &MonomialOrder) -> TermVec {
    let mut p = f.clone();
    let mut remainder: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((lm, lc)) = p.terms.last() {
        let divisor = basis.iter().find_map(|g| g.lead().0.quotient_of(lm).map(|shift| (g, shift)));
        match divisor {
            Some((g, shift)) => {
                let coeff = lc.checked_div(&g.lead().1).expect("generator leading coefficient is nonzero");
                p = p.sub_scaled(&coeff, &shift, g, order);
            }
            None => remainder.push(p.terms.pop().unwrap()),
        }
    }
    remainder.reverse();
    TermVec { terms: remainder }
}

fn s_polynomial(f: &TermVec, g: &TermVec, order: &MonomialOrder) -> TermVec {
    let (fm, fc) = f.lead();
    let (gm, gc) = g.lead();
    let lcm = fm.lcm(gm);
    let fs = fm.quotient_of(&lcm).unwrap();
    let gs = gm.quotient_of(&lcm).unwrap();
    let zero = TermVec { terms: Vec::new() };
    let left = zero.sub_scaled(&-fc.inverse().unwrap(), &fs, f, order);
    left.sub_scaled(&gc.inverse().unwrap(), &gs, g, order)
}

/// A Gröbner basis together with the order it was computed for.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ctx: VarContext,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    internal: Vec<TermVec>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn context(&self) -> &VarContext {
        &self.ctx
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Generators sorted by leading monomial, largest first.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.internal.iter().map(|g| g.lead().0.clone()).collect()
    }

    /// True for the basis `{1}` of the whole ring.
    pub fn is_unit(&self) -> bool {
        self.internal.iter().any(|g| g.lead().0.is_one())
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.context() != &self.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(self.reduce_poly(p))
    }

    pub(crate) fn reduce_poly(&self, p: &Polynomial) -> Polynomial {
        reduce(&TermVec::from_poly(p, &self.order), &self.internal, &self.order).to_poly(&self.ctx)
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Variables with no pure power among the leading monomials.
    pub fn unbounded_variables(&self) -> Vec<usize> {
        if self.is_unit() {
            return Vec::new();
        }
        let lms = self.leading_monomials();
        (0..self.ctx.len()).filter(|&v| !lms.iter().any(|m| m.pure_power_var() == Some(v))).collect()
    }

    /// Checks the Buchberger criterion directly: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let g = &self.internal;
        (0..g.len()).all(|i| {
            (i + 1..g.len()).all(|j| reduce(&s_polynomial(&g[i], &g[j], &self.order), g, &self.order).is_zero())
        })
    }

    /// True when the ideals of `self` and `other` coincide (mutual reduction to zero).
    pub fn same_ideal(&self, other: &GroebnerBasis) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        for g in self.generators() {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    let ctx = gens.first().ok_or(Error::AllZeroGenerators)?.context().clone();
    if gens.iter().any(|g| g.context() != &ctx) {
        return Err(Error::ContextMismatch);
    }
    if order.arity() != ctx.len() {
        return Err(Error::ArityMismatch { expected: ctx.len(), got: order.arity() });
    }
    let mut basis: Vec<TermVec> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let mut t = TermVec::from_poly(g, order);
        t.make_monic();
        basis.push(t);
    }
    if basis.is_empty() {
        return Err(Error::AllZeroGenerators);
    }

    let unit = |ctx: &VarContext| {
        let one = Polynomial::one(ctx);
        GroebnerBasis {
            ctx: ctx.clone(),
            order: order.clone(),
            internal: vec![TermVec::from_poly(&one, order)],
            generators: vec![one],
            reduced: true,
        }
    };
    if basis.iter().any(|g| g.lead().0.is_one()) {
        return Ok(unit(&ctx));
    }

    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    let lcm_of = |basis: &[TermVec], (i, j): (usize, usize)| basis[i].lead().0.lcm(&basis[j].lead().0);

    while !pending.is_empty() {
        let &pair = pending
            .iter()
            .min_by(|&&a, &&b| order.cmp(&lcm_of(&basis, a), &lcm_of(&basis, b)).then(a.cmp(&b)))
            .unwrap();
        pending.remove(&pair);
        let (i, j) = pair;
        let (mi, mj) = (&basis[i].lead().0, &basis[j].lead().0);
        if mi.is_coprime(mj) {
            continue;
        }
        let lcm = mi.lcm(mj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().0.divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let mut h = reduce(&s_polynomial(&basis[i], &basis[j], order), &basis, order);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.lead().0.is_one() {
            return Ok(unit(&ctx));
        }
        let new = basis.len();
        basis.push(h);
        for k in 0..new {
            pending.insert((k, new));
        }
    }

    Ok(finish(&ctx, order, basis))
}

/// Minimalizes, interreduces and sorts a Gröbner basis.
fn finish(ctx: &VarContext, order: &MonomialOrder, basis: Vec<TermVec>) -> GroebnerBasis {
    let mut minimal: Vec<TermVec> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lm = &g.lead().0;
        let redundant =
            basis.iter().enumerate().any(|(j, h)| j != i && h.lead().0.divides(lm) && (h.lead().0 != *lm || j < i));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    minimal.sort_by(|a, b| order.cmp(&b.lead().0, &a.lead().0));
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<TermVec> =
            minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        let mut r = reduce(&minimal[i], &others, order);
        r.make_monic();
        reduced.push(r);
    }
    GroebnerBasis {
        ctx: ctx.clone(),
        order: order.clone(),
        generators: reduced.iter().map(|t| t.to_poly(ctx)).collect(),
        internal: reduced,
        reduced: true,
    }
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(p)
}

/// Finite staircase test: every variable has a pure power among the leading monomials.
pub fn is_zero_dimensional(gb: &GroebnerBasis) -> bool {
    gb.unbounded_variables().is_empty()
}
