//! Symmetric bilinear forms over the rationals.
//!
//! The type `(p, q)` of a form is computed along two unrelated routes:
//!
//! * [`type_of`] diagonalizes the Gram matrix by congruence (symmetric Gaussian
//!   elimination) and counts signs on the diagonal;
//! * [`type_via_descartes`] takes the characteristic polynomial and reads `p`
//!   and `q` off its coefficient sign changes. All eigenvalues of a real
//!   symmetric matrix are real, so Descartes' bound is exact here.
//!
//! [`hurwitz_type`] gives a third answer from the leading principal minors when
//! none of them vanishes.
//!
//! The characteristic polynomial uses Berkowitz's algorithm, which needs only
//! ring operations (no divisions), so it never stalls on a zero pivot.

mod matrix;

use std::fmt;

use serde::Serialize;

use crate::arith::{sign_changes, Rational};
use crate::error::{Error, ParseError, Result};

pub use matrix::Matrix;

/// Matrix known to be square and symmetric.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymMatrix(Matrix);

impl SymMatrix {
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        if let Some((row, col)) = m.first_asymmetry() {
            return Err(Error::NotSymmetric { row, col });
        }
        Ok(SymMatrix(m))
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(Matrix::from_ints(rows))
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        SymMatrix(Matrix::diagonal(entries))
    }

    pub fn identity(n: usize) -> Self {
        SymMatrix(Matrix::identity(n))
    }

    pub fn n(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    /// `transpose(t) * self * t`, again symmetric.
    pub fn congruent(&self, t: &Matrix) -> SymMatrix {
        SymMatrix(t.transpose().mul(&self.0).mul(t))
    }

    /// Reads the text format: a line with `n`, then `n` rows of `n` rationals.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, header) = lines.next().ok_or_else(|| ParseError::new(1, 1, "missing matrix size"))?;
        let n: usize =
            header.parse().map_err(|_| ParseError::new(line_no, 1, format!("invalid matrix size `{header}`")))?;
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (ln, line) =
                lines.next().ok_or_else(|| ParseError::new(line_no, 1, format!("expected {n} matrix rows")))?;
            let mut row = Vec::with_capacity(n);
            let mut col = 1;
            for tok in line.split_whitespace() {
                let value: Rational =
                    tok.parse().map_err(|_| ParseError::new(ln, col, format!("invalid rational `{tok}`")))?;
                row.push(value);
                col += tok.len() + 1;
            }
            if row.len() != n {
                return Err(ParseError::new(ln, 1, format!("expected {n} entries, found {}", row.len())).into());
            }
            rows.push(row);
        }
        if let Some((ln, _)) = lines.next() {
            return Err(ParseError::new(ln, 1, "unexpected trailing row").into());
        }
        SymMatrix::new(Matrix::from_rows(rows)?)
    }
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Inertia `(p, q)` of a form on an `n`-dimensional space.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct FormType {
    pub p: usize,
    pub q: usize,
    pub n: usize,
}

impl FormType {
    pub fn rank(&self) -> usize {
        self.p + self.q
    }

    pub fn signature(&self) -> i64 {
        self.p as i64 - self.q as i64
    }

    pub fn is_degenerate(&self) -> bool {
        self.rank() < self.n
    }
}

impl fmt::Display for FormType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Definiteness {
    PositiveDefinite,
    NegativeDefinite,
    PositiveSemi,
    NegativeSemi,
    Indefinite,
    Zero,
}

impl fmt::Display for Definiteness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Definiteness::PositiveDefinite => "positive-definite",
            Definiteness::NegativeDefinite => "negative-definite",
            Definiteness::PositiveSemi => "positive-semidefinite",
            Definiteness::NegativeSemi => "negative-semidefinite",
            Definiteness::Indefinite => "indefinite",
            Definiteness::Zero => "zero",
        })
    }
}

/// Result of a congruence diagonalization: `transpose(transform) * S * transform = diag(diagonal)`.
#[derive(Clone, Debug)]
pub struct Diagonalization {
    pub transform: Matrix,
    pub diagonal: Vec<Rational>,
}

impl Diagonalization {
    pub fn diagonal_matrix(&self) -> Matrix {
        Matrix::diagonal(&self.diagonal)
    }

    pub fn form_type(&self) -> FormType {
        FormType {
            p: self.diagonal.iter().filter(|d| d.sign() > 0).count(),
            q: self.diagonal.iter().filter(|d| d.sign() < 0).count(),
            n: self.diagonal.len(),
        }
    }
}

/// Symmetric Gaussian elimination.
///
/// Row and column operations are applied in pairs, so the working matrix stays
/// congruent to `s`. When the pivot `a_kk` is zero but some `a_kj` is not,
/// row/column `j` is added to row/column `k`, which turns the pivot into
/// `2 a_kj + a_jj`; if that also vanishes then `a_jj = -2 a_kj != 0` and a
/// symmetric swap brings it to the pivot position instead.
pub fn congruence_diagonalize(s: &SymMatrix) -> Diagonalization {
    let n = s.n();
    let mut a = s.matrix().clone();
    let mut t = Matrix::identity(n);
    for k in 0..n {
        if a[(k, k)].is_zero() {
            let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) else {
                continue;
            };
            let polarized = Rational::from(2) * &a[(k, j)] + &a[(j, j)];
            if polarized.is_zero() {
                a.swap_rows(k, j);
                a.swap_cols(k, j);
                t.swap_cols(k, j);
            } else {
                let one = Rational::one();
                a.add_row_multiple(k, j, &one);
                a.add_col_multiple(k, j, &one);
                t.add_col_multiple(k, j, &one);
            }
        }
        let inv = a[(k, k)].inverse().expect("pivot made nonzero above");
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = -(&a[(i, k)] * &inv);
            a.add_row_multiple(i, k, &f);
            a.add_col_multiple(i, k, &f);
            t.add_col_multiple(i, k, &f);
        }
    }
    let diagonal = (0..n).map(|i| a[(i, i)].clone()).collect();
    Diagonalization { transform: t, diagonal }
}

/// Sylvester type via congruence diagonalization.
pub fn type_of(s: &SymMatrix) -> FormType {
    congruence_diagonalize(s).form_type()
}

/// Characteristic polynomial `det(X I - m)`, coefficients ascending, leading 1.
///
/// Berkowitz's algorithm: the coefficient vector of the leading `(i+1)x(i+1)`
/// block is a lower-triangular Toeplitz matrix times the vector of the `i x i`
/// block. The Toeplitz column is `1, -a, -R C, -R A C, -R A^2 C, ...` where
/// `A` is the `i x i` block, `R`/`C` the new row/column and `a` the new
/// diagonal entry.
pub fn char_poly(m: &Matrix) -> Result<Vec<Rational>> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(vec![Rational::one()]);
    }
    // highest degree first while building
    let mut poly = vec![Rational::one(), -&m[(0, 0)]];
    for i in 1..n {
        let row: Vec<Rational> = (0..i).map(|j| m[(i, j)].clone()).collect();
        let mut col: Vec<Rational> = (0..i).map(|j| m[(j, i)].clone()).collect();
        let mut toeplitz = Vec::with_capacity(i + 2);
        toeplitz.push(Rational::one());
        toeplitz.push(-&m[(i, i)]);
        for _ in 0..i {
            let rc: Rational = row.iter().zip(&col).map(|(r, c)| r * c).sum();
            toeplitz.push(-rc);
            col = (0..i).map(|r| (0..i).map(|c| &m[(r, c)] * &col[c]).sum()).collect();
        }
        let next: Vec<Rational> =
            (0..i + 2).map(|r| (0..=r.min(i)).map(|c| &toeplitz[r - c] * &poly[c]).sum()).collect();
        poly = next;
    }
    poly.reverse();
    Ok(poly)
}

/// Sign changes `(V+, V-)` of the coefficients `a_0..a_n` and of those of `p(-X)`.
pub fn descartes_counts(coeffs: &[Rational]) -> Result<(usize, usize)> {
    if coeffs.iter().all(Rational::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let pos = sign_changes(coeffs);
    let reflected: Vec<Rational> =
        coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect();
    Ok((pos, sign_changes(&reflected)))
}

/// Sylvester type read off the characteristic polynomial by Descartes' rule.
pub fn type_via_descartes(s: &SymMatrix) -> FormType {
    let chi = char_poly(s.matrix()).expect("symmetric matrices are square");
    let (p, q) = descartes_counts(&chi).expect("characteristic polynomial is monic");
    let n = s.n();
    let zeros = chi.iter().take_while(|c| c.is_zero()).count();
    debug_assert_eq!(p + q, n - zeros, "real-rooted characteristic polynomial");
    FormType { p, q, n }
}

/// Leading principal minors `D_1..D_n`, each by its own determinant.
pub fn leading_minors(s: &SymMatrix) -> Vec<Rational> {
    (1..=s.n()).map(|k| s.matrix().leading_block(k).determinant()).collect()
}

/// Hurwitz criterion: if every leading minor is nonzero, `q` is the number of
/// sign changes in `1, D_1, ..., D_n`. Returns `None` otherwise.
pub fn hurwitz_type(s: &SymMatrix) -> Option<FormType> {
    let minors = leading_minors(s);
    if minors.iter().any(Rational::is_zero) {
        return None;
    }
    let seq: Vec<Rational> = std::iter::once(Rational::one()).chain(minors).collect();
    let q = sign_changes(&seq);
    Some(FormType { p: s.n() - q, q, n: s.n() })
}

pub fn definiteness_of_type(t: &FormType) -> Definiteness {
    match (t.p, t.q) {
        (0, 0) => Definiteness::Zero,
        (p, 0) if p == t.n => Definiteness::PositiveDefinite,
        (0, q) if q == t.n => Definiteness::NegativeDefinite,
        (_, 0) => Definiteness::PositiveSemi,
        (0, _) => Definiteness::NegativeSemi,
        _ => Definiteness::Indefinite,
    }
}

pub fn definiteness(s: &SymMatrix) -> Definiteness {
    definiteness_of_type(&type_of(s))
}
