//! Linear coordinate change that puts a finite solution set in general
//! position with respect to the last variable.
//!
//! The forward map substitutes `Xn -> Xn - sum_{i<n} t^i Xi` (variables
//! numbered from 1). A solution `a` of the original system becomes the
//! solution `(a1, ..., a_{n-1}, an + sum t^i ai)` of the transformed one.

use crate::arith::Rational;
use crate::error::{Error, Result};

use super::Polynomial;

fn shifted_last(template: &Polynomial, t: &Rational, sign: i32) -> Result<Vec<Polynomial>> {
    let ctx = template.context();
    let n = ctx.len();
    let mut images: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(ctx, i)).collect();
    let mut weight = Rational::one();
    for i in 0..n.saturating_sub(1) {
        weight *= t;
        let term = Polynomial::var(ctx, i).scale(&weight);
        images[n - 1] = if sign < 0 { &images[n - 1] - &term } else { &images[n - 1] + &term };
    }
    Ok(images)
}

fn apply(system: &[Polynomial], t: &Rational, sign: i32) -> Result<Vec<Polynomial>> {
    if t.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let Some(first) = system.first() else {
        return Ok(Vec::new());
    };
    let images = shifted_last(first, t, sign)?;
    system.iter().map(|p| p.compose(&images)).collect()
}

/// Applies `Xn -> Xn - sum t^i Xi` to every polynomial. `t` must be nonzero.
pub fn general_position_transform(system: &[Polynomial], t: &Rational) -> Result<Vec<Polynomial>> {
    apply(system, t, -1)
}

/// Inverse substitution `Xn -> Xn + sum t^i Xi`.
pub fn general_position_inverse(system: &[Polynomial], t: &Rational) -> Result<Vec<Polynomial>> {
    apply(system, t, 1)
}
