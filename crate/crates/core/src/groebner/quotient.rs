use std::collections::{BTreeMap, HashMap};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, VarContext};
use crate::quadform::Matrix;

use super::{buchberger, GroebnerBasis};

/// Below this total degree `mult_matrix` evaluates `h` at the variable
/// matrices; above it, columns come from normal forms of `h * b_j`.
const EVALUATION_DEGREE_LIMIT: u32 = 4;

/// The finite-dimensional algebra `Q[X]/I` for a zero-dimensional ideal `I`,
/// with its standard-monomial basis and one multiplication matrix per variable.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    gb: GroebnerBasis,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    var_matrices: Vec<Matrix>,
}

impl QuotientAlgebra {
    /// Convenience: Gröbner basis under `order` followed by [`quotient_algebra`].
    pub fn from_system(system: &[Polynomial], order: &MonomialOrder) -> Result<Self> {
        quotient_algebra(&buchberger(system, order)?)
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn context(&self) -> &VarContext {
        self.gb.context()
    }

    /// Standard monomials, ascending in the basis order.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_polynomial(&self, k: usize) -> Polynomial {
        Polynomial::monomial(self.context(), self.basis[k].clone(), Rational::one())
    }

    /// Multiplication matrix of the i-th variable.
    pub fn var_matrix(&self, i: usize) -> &Matrix {
        &self.var_matrices[i]
    }

    pub fn var_matrices(&self) -> &[Matrix] {
        &self.var_matrices
    }

    /// Coordinates of the residue class of `p` in the standard-monomial basis.
    pub fn coords(&self, p: &Polynomial) -> Result<Vec<Rational>> {
        let nf = self.gb.normal_form(p)?;
        Ok(self.coords_of_normal_form(&nf))
    }

    pub(crate) fn coords_of_normal_form(&self, nf: &Polynomial) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        for (m, c) in nf.terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    /// Polynomial with the given coordinates.
    pub fn element(&self, coords: &[Rational]) -> Polynomial {
        Polynomial::from_terms(self.context(), self.basis.iter().cloned().zip(coords.iter().cloned()))
    }

    /// Matrix of multiplication by `h`, column `j` = `h * b_j` in coordinates.
    pub fn mult_matrix_by_normal_forms(&self, h: &Polynomial) -> Result<Matrix> {
        if h.context() != self.context() {
            return Err(Error::ContextMismatch);
        }
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (j, b) in self.basis.iter().enumerate() {
            let col = self.coords(&h.mul_monomial(b, &Rational::one()))?;
            m.set_column(j, &col);
        }
        Ok(m)
    }

    /// Matrix of multiplication by `h`, from `h` evaluated at the variable
    /// matrices by nested Horner schemes (outermost in the first variable).
    pub fn mult_matrix_by_evaluation(&self, h: &Polynomial) -> Result<Matrix> {
        if h.context() != self.context() {
            return Err(Error::ContextMismatch);
        }
        let terms: Vec<(&Monomial, &Rational)> = h.terms().collect();
        Ok(self.horner(&terms, 0))
    }

    fn horner(&self, terms: &[(&Monomial, &Rational)], var: usize) -> Matrix {
        let m = self.dim();
        if var == self.context().len() {
            let c: Rational = terms.iter().map(|(_, c)| *c).sum();
            return Matrix::identity(m).scale(&c);
        }
        let mut by_degree: BTreeMap<u32, Vec<(&Monomial, &Rational)>> = BTreeMap::new();
        for &(mono, c) in terms {
            by_degree.entry(mono.exponents()[var]).or_default().push((mono, c));
        }
        let Some(&top) = by_degree.keys().next_back() else {
            return Matrix::zeros(m, m);
        };
        let x = &self.var_matrices[var];
        let mut acc = Matrix::zeros(m, m);
        for d in (0..=top).rev() {
            if d != top {
                acc = acc.mul(x);
            }
            if let Some(group) = by_degree.get(&d) {
                acc = acc.add(&self.horner(group, var + 1));
            }
        }
        acc
    }
}

/// Standard-monomial basis and variable multiplication matrices of `Q[X]/<gb>`.
pub fn quotient_algebra(gb: &GroebnerBasis) -> Result<QuotientAlgebra> {
    let unbounded = gb.unbounded_variables();
    if !unbounded.is_empty() {
        let variables = unbounded.iter().map(|&v| gb.context().name(v).to_string()).collect();
        return Err(Error::NotZeroDimensional { variables });
    }
    let n = gb.context().len();
    let lms = gb.leading_monomials();
    let is_standard = |m: &Monomial| !lms.iter().any(|l| l.divides(m));

    let mut basis = Vec::new();
    let one = Monomial::one(n);
    if is_standard(&one) {
        let mut seen = std::collections::HashSet::new();
        let mut frontier = vec![one.clone()];
        seen.insert(one);
        while let Some(m) = frontier.pop() {
            for v in 0..n {
                let next = m.mul(&Monomial::var(n, v));
                if is_standard(&next) && seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
            basis.push(m);
        }
    }
    let order = gb.order().clone();
    basis.sort_by(|a, b| order.cmp(a, b));
    let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();

    let mut alg = QuotientAlgebra { gb: gb.clone(), basis, index, var_matrices: Vec::new() };
    let mut mats = Vec::with_capacity(n);
    for v in 0..n {
        let x = Polynomial::var(gb.context(), v);
        mats.push(alg.mult_matrix_by_normal_forms(&x)?);
    }
    alg.var_matrices = mats;
    Ok(alg)
}

/// Matrix of `f -> h f` on the algebra.
pub fn mult_matrix(alg: &QuotientAlgebra, h: &Polynomial) -> Result<Matrix> {
    match h.total_degree() {
        Some(d) if d > EVALUATION_DEGREE_LIMIT => alg.mult_matrix_by_normal_forms(h),
        _ => alg.mult_matrix_by_evaluation(h),
    }
}
