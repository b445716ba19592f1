//! Trace forms `(f, g) -> tr(f g)` and generalized trace forms
//! `(f, g) -> tr(h f g)` on a finite quotient algebra.
//!
//! Gram entries are assembled from two precomputed pieces: the coordinates of
//! every basis product `b_k b_l` (one normal form per distinct product
//! monomial) and the vector of traces `tr(b_i)`. By linearity
//! `tr(h b_k b_l) = sum_i coords(h b_k b_l)_i tr(b_i)`, and
//! `coords(h b_k b_l) = M_h coords(b_k b_l)`, so the `h`-weighted trace vector
//! `transpose(M_h) tr` is computed once per form.

use std::collections::HashMap;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::groebner::{mult_matrix, QuotientAlgebra};
use crate::poly::{Monomial, Polynomial, UniPoly};
use crate::quadform::{Matrix, SymMatrix};

/// Traces of the basis elements plus coordinate vectors of all basis products.
#[derive(Clone, Debug)]
pub struct TraceVector<'a> {
    alg: &'a QuotientAlgebra,
    basis_traces: Vec<Rational>,
    products: HashMap<Monomial, Vec<Rational>>,
}

impl<'a> TraceVector<'a> {
    pub fn new(alg: &'a QuotientAlgebra) -> Self {
        let m = alg.dim();
        let mut products: HashMap<Monomial, Vec<Rational>> = HashMap::new();
        for k in 0..m {
            for l in k..m {
                let mono = alg.basis()[k].mul(&alg.basis()[l]);
                products.entry(mono).or_insert_with_key(|mono| {
                    let p = Polynomial::monomial(alg.context(), mono.clone(), Rational::one());
                    alg.coords(&p).expect("basis products share the algebra's context")
                });
            }
        }
        // tr(b_i) = sum_j [b_i b_j]_j
        let basis_traces =
            (0..m).map(|i| (0..m).map(|j| products[&alg.basis()[i].mul(&alg.basis()[j])][j].clone()).sum()).collect();
        TraceVector { alg, basis_traces, products }
    }

    pub fn algebra(&self) -> &QuotientAlgebra {
        self.alg
    }

    /// `tr(b_i)` for every basis element.
    pub fn basis_traces(&self) -> &[Rational] {
        &self.basis_traces
    }

    /// Trace of multiplication by the monomial `b_k b_l`.
    pub fn product_trace(&self, k: usize, l: usize) -> Rational {
        let mono = self.alg.basis()[k].mul(&self.alg.basis()[l]);
        dot(&self.products[&mono], &self.basis_traces)
    }

    /// Gram matrix of `(f, g) -> tr(h f g)` given `weights_i = tr(h b_i)`.
    fn gram(&self, weights: &[Rational]) -> SymMatrix {
        let m = self.alg.dim();
        let mut g = Matrix::zeros(m, m);
        for k in 0..m {
            for l in k..m {
                let mono = self.alg.basis()[k].mul(&self.alg.basis()[l]);
                let v = dot(&self.products[&mono], weights);
                g[(l, k)] = v.clone();
                g[(k, l)] = v;
            }
        }
        SymMatrix::new(g).expect("assembled symmetrically")
    }

    pub fn trace_form(&self) -> SymMatrix {
        self.gram(&self.basis_traces)
    }

    pub fn generalized_trace_form(&self, h: &Polynomial) -> Result<SymMatrix> {
        let mh = mult_matrix(self.alg, h)?;
        let weights = mh.transpose().mul_vec(&self.basis_traces);
        Ok(self.gram(&weights))
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum()
}

/// Trace of the multiplication map `f -> h f`.
pub fn trace_of(alg: &QuotientAlgebra, h: &Polynomial) -> Result<Rational> {
    if h.context() != alg.context() {
        return Err(Error::ContextMismatch);
    }
    let tv = TraceVector::new(alg);
    Ok(dot(&alg.coords(h)?, tv.basis_traces()))
}

/// Gram matrix of the trace form on the standard-monomial basis.
pub fn trace_form(alg: &QuotientAlgebra) -> SymMatrix {
    TraceVector::new(alg).trace_form()
}

/// Gram matrix of `(f, g) -> tr(h f g)` on the standard-monomial basis.
pub fn generalized_trace_form(alg: &QuotientAlgebra, h: &Polynomial) -> Result<SymMatrix> {
    if h.context() != alg.context() {
        return Err(Error::ContextMismatch);
    }
    TraceVector::new(alg).generalized_trace_form(h)
}

/// Reference route: `tr(M_h M_{b_k} M_{b_l})` entry by entry.
pub fn generalized_trace_form_direct(alg: &QuotientAlgebra, h: &Polynomial) -> Result<SymMatrix> {
    let m = alg.dim();
    let mh = alg.mult_matrix_by_normal_forms(h)?;
    let mb: Vec<Matrix> =
        (0..m).map(|k| alg.mult_matrix_by_normal_forms(&alg.basis_polynomial(k))).collect::<Result<_>>()?;
    let mut g = Matrix::zeros(m, m);
    for k in 0..m {
        let hk = mh.mul(&mb[k]);
        for l in 0..m {
            g[(k, l)] = hk.mul(&mb[l]).trace();
        }
    }
    SymMatrix::new(g)
}

/// Power sums `p_0..p_count-1` of the roots of `g` (with multiplicity), by
/// Newton's identities on the coefficients.
pub fn power_sums(g: &UniPoly, count: usize) -> Result<Vec<Rational>> {
    let m = g.degree().ok_or(Error::ZeroPolynomial)?;
    let monic = g.monic();
    // g = X^m + e_1 X^{m-1} + ... + e_m  (e_k = coefficient of X^{m-k})
    let e = |k: usize| if k <= m { monic.coeff(m - k) } else { Rational::zero() };
    let mut p = Vec::with_capacity(count);
    for k in 0..count {
        if k == 0 {
            p.push(Rational::from(m as i64));
            continue;
        }
        let mut s = Rational::zero();
        for i in 1..k.min(m + 1) {
            s -= &(e(i) * &p[k - i]);
        }
        if k <= m {
            s -= &(e(k) * Rational::from(k as i64));
        }
        p.push(s);
    }
    Ok(p)
}

/// Trace form of `Q[X]/(g)` on the basis `1, X, ..., X^{m-1}` as the Hankel
/// matrix of power sums.
pub fn univariate_trace_form_newton(g: &UniPoly) -> Result<SymMatrix> {
    let m = g.degree().ok_or(Error::ZeroPolynomial)?;
    let sums = power_sums(g, 2 * m.max(1))?;
    let mut h = Matrix::zeros(m, m);
    for k in 0..m {
        for l in 0..m {
            h[(k, l)] = sums[k + l].clone();
        }
    }
    SymMatrix::new(h)
}
