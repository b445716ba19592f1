//! Dense univariate polynomials, used for eliminants, Sturm chains and
//! Newton power sums.

use std::fmt;

use crate::arith::Rational;
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monic linear polynomial `X - root`.
    pub fn linear(root: &Rational) -> Self {
        Self::new(vec![-root, Rational::one()])
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> i32 {
        self.eval(x).sign()
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> UniPoly {
        self.scale(&-Rational::one())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut out = UniPoly::constant(Rational::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn derivative(&self) -> UniPoly {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from(i as i64)).collect())
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let inv = self.leading_coeff().inverse().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Euclidean division; fails on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let inv_lc = divisor.leading_coeff().inverse()?;
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv_lc;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &(&c * d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    pub fn rem(&self, divisor: &UniPoly) -> Result<UniPoly> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Exact quotient, or `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &UniPoly) -> Result<Option<UniPoly>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("divisor is nonzero");
            a = b;
            // keep the remainder monic to curb coefficient growth
            b = r.monic();
        }
        a.monic()
    }

    /// `g / gcd(g, g')`, monic. Zero maps to zero.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_constant() {
            return if self.is_zero() { UniPoly::zero() } else { UniPoly::constant(Rational::one()) };
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd is nonzero").expect("gcd divides its argument").monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_constant()
    }

    /// `self(inner(X))`.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    /// `self(-X)`.
    pub fn reflect(&self) -> UniPoly {
        Self::new(self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect())
    }

    /// Monic polynomial with the given roots (with repetition).
    pub fn from_roots(roots: &[Rational]) -> UniPoly {
        roots.iter().fold(UniPoly::constant(Rational::one()), |acc, r| acc.mul(&UniPoly::linear(r)))
    }

    /// Cauchy root bound `1 + max |a_i / a_n|`; every root has absolute value below it.
    pub fn cauchy_bound(&self) -> Rational {
        let lc = self.leading_coeff().abs();
        let max =
            self.coeffs[..self.coeffs.len().saturating_sub(1)].iter().map(Rational::abs).max().unwrap_or_default();
        Rational::one() + max.checked_div(&lc).unwrap_or_default()
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() < 0;
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mono = match d {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{d}"),
            };
            if mono.is_empty() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("X"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}
