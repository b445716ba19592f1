//! Sparse multivariate polynomials over the rationals.
//!
//! A [`Polynomial`] is a map from [`Monomial`] to nonzero [`Rational`]
//! coefficients, tied to a [`VarContext`] naming its variables. Term order is
//! not part of the representation: leading terms are always taken with respect
//! to an explicit [`MonomialOrder`].

mod order;
mod parse;
mod transform;
mod univariate;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use smallvec::SmallVec;

use crate::arith::Rational;
use crate::error::{Error, Result};

pub use order::{MonomialOrder, OrderKind};
pub use parse::{identifiers_in, parse_polynomial, parse_polynomial_at};
pub use transform::{general_position_inverse, general_position_transform};
pub use univariate::UniPoly;

/// Ordered list of distinct variable names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarContext {
    names: Arc<Vec<String>>,
}

impl VarContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidContext("at least one variable is required".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::InvalidContext("empty variable name".into()));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidContext(format!("variable `{n}` declared twice")));
            }
        }
        Ok(VarContext { names: Arc::new(names) })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl fmt::Debug for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

/// Exponent vector of a power product.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn var(n: usize, i: usize) -> Self {
        Self::var_pow(n, i, 1)
    }

    pub fn var_pow(n: usize, i: usize, e: u32) -> Self {
        let mut m = Self::one(n);
        m.0[i] = e;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if exact.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// The variable this monomial is a positive pure power of, if any.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn fmt_with(&self, ctx: &VarContext) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { ctx.name(i).to_string() } else { format!("{}^{}", ctx.name(i), e) })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Sparse polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ctx: VarContext,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ctx: &VarContext) -> Self {
        Polynomial { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ctx: &VarContext, c: Rational) -> Self {
        Self::monomial(ctx, Monomial::one(ctx.len()), c)
    }

    pub fn one(ctx: &VarContext) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn var(ctx: &VarContext, i: usize) -> Self {
        Self::monomial(ctx, Monomial::var(ctx.len(), i), Rational::one())
    }

    pub fn monomial(ctx: &VarContext, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.arity(), ctx.len());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ctx: ctx.clone(), terms }
    }

    /// Builds a polynomial from possibly repeated terms, summing duplicates.
    pub fn from_terms(ctx: &VarContext, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(ctx);
        for (m, c) in terms {
            debug_assert_eq!(m.arity(), ctx.len());
            p.add_term(m, &c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn context(&self) -> &VarContext {
        &self.ctx
    }

    pub fn arity(&self) -> usize {
        self.ctx.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::one(self.arity())).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponents()[var]).max()
    }

    fn check_ctx(&self, other: &Polynomial) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        let mut out = Polynomial::zero(&self.ctx);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ctx);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// The `order`-maximal term.
    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0)).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).ok().map(|(m, _)| m)
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Ok((_, c)) => {
                let inv = c.inverse().expect("leading coefficients are nonzero");
                self.scale(&inv)
            }
            Err(_) => self.clone(),
        }
    }

    /// Exact value at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), got: point.len() });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    v *= &x.pow(e as i32)?;
                }
            }
            total += &v;
        }
        Ok(total)
    }

    /// Ring homomorphism substituting `images[i]` for the i-th variable.
    ///
    /// The images may live in a different context; the result lives in theirs.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), got: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.ctx.clone(),
            None => return Err(Error::ArityMismatch { expected: 1, got: 0 }),
        };
        if images.iter().any(|p| p.ctx != target) {
            return Err(Error::ContextMismatch);
        }
        // powers[i][e] = images[i]^e, grown on demand
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(&target)]; self.arity()];
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, &tc);
            }
        }
        Ok(out)
    }

    /// Index of the single variable occurring in the polynomial, `None` for constants.
    pub fn univariate_variable(&self) -> Result<Option<usize>> {
        let mut var = None;
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    match var {
                        None => var = Some(i),
                        Some(v) if v != i => return Err(Error::NotUnivariate),
                        _ => {}
                    }
                }
            }
        }
        Ok(var)
    }

    /// Dense coefficients in the given variable; fails if any other variable occurs.
    pub fn to_univariate(&self, var: usize) -> Result<UniPoly> {
        let mut coeffs = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponents();
            if e.iter().enumerate().any(|(i, &k)| i != var && k > 0) {
                return Err(Error::NotUnivariate);
            }
            let d = e[var] as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, Rational::zero());
            }
            coeffs[d] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn from_univariate(ctx: &VarContext, var: usize, u: &UniPoly) -> Polynomial {
        Polynomial::from_terms(
            ctx,
            u.coeffs().iter().enumerate().map(|(d, c)| (Monomial::var_pow(ctx.len(), var, d as u32), c.clone())),
        )
    }

    /// Same polynomial viewed in a context with identical arity.
    pub fn with_context(&self, ctx: &VarContext) -> Result<Polynomial> {
        if ctx.len() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), got: ctx.len() });
        }
        Ok(Polynomial { ctx: ctx.clone(), terms: self.terms.clone() })
    }

    /// Terms sorted by a monomial order, largest first.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    /// Text form with terms in descending `order`.
    pub fn display_with(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.sign() < 0;
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&m.fmt_with(&self.ctx));
            } else {
                out.push_str(&format!("{}*{}", abs, m.fmt_with(&self.ctx)));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&MonomialOrder::degrevlex(self.arity())))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

// Operator forms panic on a context mismatch; use the checked_* methods when
// the operands come from different sources.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial context mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial context mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial context mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

/// Squarefree part `g / gcd(g, g')` of a univariate polynomial, made monic.
pub fn univariate_squarefree_part(g: &Polynomial) -> Result<Polynomial> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let var = g.univariate_variable()?.unwrap_or(0);
    let u = g.to_univariate(var)?;
    Ok(Polynomial::from_univariate(g.context(), var, &u.squarefree_part()))
}
