//! Seeded generators shared by the integration and acceptance tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tracecount::poly::{Polynomial, UniPoly, VarContext};
use tracecount::quadform::{Matrix, SymMatrix};
use tracecount::Rational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

/// Small rational with numerator in `[-num, num]` and denominator in `1..=den`.
pub fn small_rational(rng: &mut impl Rng, num: i64, den: i64) -> Rational {
    q(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

/// Nonconstant polynomial of degree `1..=max_deg`, integer coefficients in `[-c, c]`.
pub fn random_univariate(rng: &mut impl Rng, max_deg: usize, c: i64) -> UniPoly {
    let deg = rng.gen_range(1..=max_deg);
    let mut coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-c..=c)).collect();
    while coeffs[deg] == 0 {
        coeffs[deg] = rng.gen_range(-c..=c);
    }
    UniPoly::from_ints(&coeffs)
}

/// Polynomial of degree at most `max_deg` with a forced repeated factor.
pub fn random_with_repeated_factor(rng: &mut impl Rng, max_deg: usize, c: i64) -> UniPoly {
    let rep_deg = rng.gen_range(1..=(max_deg / 2).clamp(1, 3));
    let f = random_univariate(rng, rep_deg, c.min(5));
    let mult = rng.gen_range(2..=(max_deg / f.degree().unwrap()).max(2));
    let used = f.degree().unwrap() * mult;
    let g = f.pow(mult as u32);
    if used < max_deg {
        g.mul(&random_univariate(rng, max_deg - used, c.min(5)))
    } else {
        g
    }
}

/// Product of `1..=max_factors` linear factors with rational roots (repeats allowed).
pub fn random_split(rng: &mut impl Rng, max_factors: usize) -> (UniPoly, Vec<Rational>) {
    let k = rng.gen_range(1..=max_factors);
    let mut roots = Vec::with_capacity(k);
    for _ in 0..k {
        let r = if !roots.is_empty() && rng.gen_bool(0.2) {
            roots.choose(rng).cloned().unwrap()
        } else if rng.gen_bool(0.1) {
            Rational::zero()
        } else {
            small_rational(rng, 9, 4)
        };
        roots.push(r);
    }
    let lead = small_rational(rng, 5, 3);
    let lead = if lead.is_zero() { Rational::one() } else { lead };
    (UniPoly::from_roots(&roots).scale(&lead), roots)
}

/// `k` pairwise distinct small rationals.
pub fn distinct_rationals(rng: &mut impl Rng, k: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(k);
    while out.len() < k {
        let r = small_rational(rng, 12, 4);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// Random symmetric matrix of size `n`, mixing dense, sparse and low-rank shapes.
#[allow(clippy::needless_range_loop)]
pub fn random_symmetric(rng: &mut impl Rng, n: usize) -> SymMatrix {
    let kind = rng.gen_range(0..3);
    if kind == 2 {
        // B^t D B with B of rank at most k
        let k = rng.gen_range(0..=n);
        if k == 0 {
            return SymMatrix::new(Matrix::zeros(n, n)).unwrap();
        }
        let rows: Vec<Vec<Rational>> =
            (0..k).map(|_| (0..n).map(|_| Rational::from(rng.gen_range(-3..=3))).collect()).collect();
        let b = Matrix::from_rows(rows).unwrap();
        let d: Vec<Rational> = (0..k).map(|_| Rational::from(rng.gen_range(-3..=3))).collect();
        return SymMatrix::new(b.transpose().mul(&Matrix::diagonal(&d)).mul(&b)).unwrap();
    }
    let mut rows = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let v = if kind == 0 {
                small_rational(rng, 9, 4)
            } else if rng.gen_bool(0.6) {
                Rational::zero()
            } else {
                Rational::from(rng.gen_range(-3..=3))
            };
            rows[i][j] = v.clone();
            rows[j][i] = v;
        }
    }
    SymMatrix::new(Matrix::from_rows(rows).unwrap()).unwrap()
}

/// Random matrix with nonzero determinant.
pub fn random_invertible(rng: &mut impl Rng, n: usize) -> Matrix {
    loop {
        let rows: Vec<Vec<Rational>> = (0..n).map(|_| (0..n).map(|_| small_rational(rng, 4, 2)).collect()).collect();
        let m = Matrix::from_rows(rows).unwrap();
        if !m.determinant().is_zero() {
            return m;
        }
    }
}

/// A zero-dimensional radical system built from a shape basis, then moved by
/// an integer linear coordinate change, together with a weight `H`.
pub struct RandomSystem {
    pub ctx: VarContext,
    pub system: Vec<Polynomial>,
    pub h: Polynomial,
    pub dim: usize,
}

/// Squarefree eliminant of degree `1..=max_deg` from rational roots,
/// irrational real quadratics and irreducible non-real quadratics.
pub fn random_eliminant(rng: &mut impl Rng, max_deg: usize) -> (UniPoly, Vec<Rational>) {
    loop {
        let target = rng.gen_range(1..=max_deg);
        let mut g = UniPoly::constant(Rational::one());
        let mut rational_roots = Vec::new();
        while g.degree().unwrap() < target {
            let room = target - g.degree().unwrap();
            let kind = if room >= 2 { rng.gen_range(0..3) } else { 0 };
            let factor = match kind {
                0 => {
                    let r = small_rational(rng, 6, 3);
                    rational_roots.push(r.clone());
                    UniPoly::linear(&r)
                }
                1 => {
                    let k = [2, 3, 5, 6, 7].choose(rng).copied().unwrap();
                    let shift = Rational::from(rng.gen_range(-2..=2));
                    UniPoly::from_ints(&[-k, 0, 1]).compose(&UniPoly::linear(&shift))
                }
                _ => {
                    let a = small_rational(rng, 3, 2);
                    let b = q(rng.gen_range(1..=3), rng.gen_range(1..=2));
                    let two = Rational::from(2);
                    UniPoly::new(vec![&(&a * &a) + &(&b * &b), -(&two * &a), Rational::one()])
                }
            };
            g = g.mul(&factor);
        }
        if g.is_squarefree() {
            return (g, rational_roots);
        }
    }
}

pub fn random_shape_system(rng: &mut impl Rng, n: usize, max_dim: usize) -> RandomSystem {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let ctx = VarContext::new(names).unwrap();
    let (gn, rational_roots) = random_eliminant(rng, max_dim);
    let d = gn.degree().unwrap();
    let last = n - 1;

    let coords: Vec<UniPoly> = (0..last)
        .map(|_| {
            let deg = rng.gen_range(0..=d.saturating_sub(1).min(2));
            let cs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-3..=3)).collect();
            UniPoly::from_ints(&cs)
        })
        .collect();
    let mut shape: Vec<Polynomial> = coords
        .iter()
        .enumerate()
        .map(|(i, g)| &Polynomial::var(&ctx, i) - &Polynomial::from_univariate(&ctx, last, g))
        .collect();
    shape.push(Polynomial::from_univariate(&ctx, last, &gn));

    let h_old = random_weight(rng, &ctx, &coords, &rational_roots);

    // x_old = A x_new
    let a = loop {
        let rows: Vec<Vec<Rational>> =
            (0..n).map(|_| (0..n).map(|_| Rational::from(rng.gen_range(-2..=2))).collect()).collect();
        let m = Matrix::from_rows(rows).unwrap();
        if !m.determinant().is_zero() {
            break m;
        }
    };
    let images: Vec<Polynomial> = (0..n)
        .map(|i| {
            let mut p = Polynomial::zero(&ctx);
            for j in 0..n {
                p = &p + &Polynomial::var(&ctx, j).scale(&a[(i, j)]);
            }
            p
        })
        .collect();
    let system = shape.iter().map(|p| p.compose(&images).unwrap()).collect();
    let h = h_old.compose(&images).unwrap();
    RandomSystem { ctx, system, h, dim: d }
}

fn random_weight(rng: &mut impl Rng, ctx: &VarContext, coords: &[UniPoly], rational_roots: &[Rational]) -> Polynomial {
    let n = ctx.len();
    let linear = |rng: &mut dyn rand::RngCore| -> Polynomial {
        let mut p = Polynomial::zero(ctx);
        for j in 0..n {
            p = &p + &Polynomial::var(ctx, j).scale(&Rational::from(rng.gen_range(-3..=3)));
        }
        p
    };
    loop {
        let h = match rng.gen_range(0..3) {
            0 if !rational_roots.is_empty() => {
                // vanishes at one rational solution
                let r = rational_roots.choose(rng).unwrap();
                let mut point: Vec<Rational> = coords.iter().map(|g| g.eval(r)).collect();
                point.push(r.clone());
                let l = linear(rng);
                let value = l.eval(&point).unwrap();
                let base = &l - &Polynomial::constant(ctx, value);
                if rng.gen_bool(0.5) {
                    &base * &(&linear(rng) + &Polynomial::constant(ctx, Rational::from(rng.gen_range(-2..=2))))
                } else {
                    base
                }
            }
            1 => &linear(rng) + &Polynomial::constant(ctx, small_rational(rng, 4, 2)),
            _ => {
                let mut p = Polynomial::constant(ctx, Rational::from(rng.gen_range(-3..=3)));
                for i in 0..n {
                    for j in i..n {
                        let c = Rational::from(rng.gen_range(-2..=2));
                        p = &p + &(&Polynomial::var(ctx, i) * &Polynomial::var(ctx, j)).scale(&c);
                    }
                    p = &p + &Polynomial::var(ctx, i).scale(&Rational::from(rng.gen_range(-2..=2)));
                }
                p
            }
        };
        if !h.is_zero() {
            return h;
        }
    }
}
