//! Sturm-sequence ground truth for the signature-based counts.
//!
//! Everything here counts distinct real roots with rational arithmetic only:
//! Sturm chains, bisection isolation, and a shape-basis reduction that turns
//! a system plus a weight `H` into a univariate sign-determination problem.

use serde::Serialize;

use crate::arith::{sign_changes, Rational};
use crate::count::{find_shape, ShapeSchedule, ShapeStatus};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, UniPoly};

/// Refinement steps allowed per root in [`oracle_count_system`].
pub const REFINEMENT_STEP_BUDGET: usize = 10_000;

/// General-position trials used by [`oracle_count_system`].
pub const DEFAULT_MAX_TRIALS: usize = 12;

/// Sturm chain of the squarefree part of `g`.
pub fn sturm_sequence(g: &UniPoly) -> Result<Vec<UniPoly>> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let s0 = g.squarefree_part();
    if s0.is_constant() {
        return Ok(vec![s0]);
    }
    let mut chain = vec![s0.clone(), s0.derivative()];
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1])?;
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
    }
    Ok(chain)
}

fn variations(chain: &[UniPoly], x: &Rational) -> usize {
    let values: Vec<Rational> = chain.iter().map(|s| s.eval(x)).collect();
    sign_changes(values.iter())
}

fn count_with_chain(chain: &[UniPoly], lo: &Rational, hi: &Rational) -> Result<usize> {
    if lo >= hi {
        return Err(Error::EmptyInterval);
    }
    for end in [lo, hi] {
        if chain[0].eval(end).is_zero() {
            return Err(Error::EndpointIsRoot(end.to_string()));
        }
    }
    let (a, b) = (variations(chain, lo), variations(chain, hi));
    a.checked_sub(b).ok_or_else(|| Error::InternalConsistency(format!("Sturm variations increased from {a} to {b}")))
}

/// Distinct real roots of `g` in `(lo, hi]`; endpoints must not be roots.
pub fn sturm_count(g: &UniPoly, lo: &Rational, hi: &Rational) -> Result<usize> {
    count_with_chain(&sturm_sequence(g)?, lo, hi)
}

/// Distinct real roots of `g` on the whole line.
pub fn count_all_real(g: &UniPoly) -> Result<usize> {
    let chain = sturm_sequence(g)?;
    if chain[0].is_constant() {
        return Ok(0);
    }
    let b = chain[0].cauchy_bound();
    count_with_chain(&chain, &-b.clone(), &b)
}

/// Disjoint, sorted, open-closed intervals, one distinct root in each.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Isolation {
    pub intervals: Vec<(Rational, Rational)>,
}

impl Isolation {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

/// Interior split point of `(lo, hi)` that is not a root of `s`.
fn split_point(s: &UniPoly, lo: &Rational, hi: &Rational) -> Rational {
    let mid = Rational::midpoint(lo, hi);
    if !s.eval(&mid).is_zero() {
        return mid;
    }
    let width = hi - lo;
    let mut step = Rational::new(1, 4).unwrap();
    loop {
        let cand = &mid + &(&width * &step);
        if !s.eval(&cand).is_zero() {
            return cand;
        }
        step = &step / &Rational::from(2);
    }
}

/// Bisects the Cauchy interval until each piece holds exactly one root.
pub fn isolate_real_roots(g: &UniPoly) -> Result<Isolation> {
    let chain = sturm_sequence(g)?;
    if chain[0].is_constant() {
        return Ok(Isolation { intervals: Vec::new() });
    }
    let b = chain[0].cauchy_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        match count_with_chain(&chain, &lo, &hi)? {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = split_point(&chain[0], &lo, &hi);
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort();
    Ok(Isolation { intervals: out })
}

/// Sign of `h` at the unique root of `g` in `(lo, hi]`, `g` squarefree.
fn sign_at_isolated_root(g: &UniPoly, h: &UniPoly, lo: &Rational, hi: &Rational) -> Result<i32> {
    if h.is_zero() {
        return Ok(0);
    }
    if h.is_constant() {
        return Ok(h.leading_coeff().sign());
    }
    let common = g.gcd(h);
    if !common.is_constant() && sturm_count(&common, lo, hi)? > 0 {
        return Ok(0);
    }
    let g_chain = sturm_sequence(g)?;
    let h_chain = sturm_sequence(h)?;
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    for _ in 0..REFINEMENT_STEP_BUDGET {
        let (h_lo, h_hi) = (h.eval(&lo), h.eval(&hi));
        if !h_lo.is_zero() && !h_hi.is_zero() && count_with_chain(&h_chain, &lo, &hi)? == 0 {
            return Ok(h_hi.sign());
        }
        let mid = Rational::midpoint(&lo, &hi);
        if g.eval(&mid).is_zero() {
            return Ok(h.eval(&mid).sign());
        }
        if count_with_chain(&g_chain, &lo, &mid)? == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Err(Error::StepBudgetExceeded(REFINEMENT_STEP_BUDGET))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleCount {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
    pub total_real: usize,
    /// General-position parameter used, if any.
    pub t: Option<Rational>,
}

/// Sign conditions of `h` on the real solutions, with the default retry schedule.
pub fn oracle_count_system(system: &[Polynomial], h: &Polynomial) -> Result<OracleCount> {
    oracle_count_with(system, h, &ShapeSchedule::Retry { max_trials: DEFAULT_MAX_TRIALS })
}

/// Sign conditions of `h` on the real solutions, by reduction to the eliminant
/// of a shape basis and Sturm isolation of its real roots.
pub fn oracle_count_with(system: &[Polynomial], h: &Polynomial, schedule: &ShapeSchedule) -> Result<OracleCount> {
    let (status, transformed) = find_shape(system, std::slice::from_ref(h), schedule)?;
    let (t, shape) = match status {
        ShapeStatus::Found { t, shape } => (t, shape),
        ShapeStatus::Empty => return Ok(OracleCount { positive: 0, negative: 0, zero: 0, total_real: 0, t: None }),
        ShapeStatus::NotRadical { .. } => return Err(Error::NotRadical),
        ShapeStatus::Exhausted { trials } => return Err(Error::ShapeUnobtainable { trials }),
    };
    let h_star = shape.reduce_to_eliminant(&transformed[0])?;
    let g = shape.eliminant();
    let isolation = isolate_real_roots(g)?;
    let mut out = OracleCount { positive: 0, negative: 0, zero: 0, total_real: isolation.len(), t };
    for (lo, hi) in &isolation.intervals {
        match sign_at_isolated_root(g, &h_star, lo, hi)? {
            1 => out.positive += 1,
            -1 => out.negative += 1,
            _ => out.zero += 1,
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, VarContext};
    use proptest::prelude::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn chains() {
        let c = sturm_sequence(&up(&[-1, 0, 1])).unwrap();
        assert_eq!(c, vec![up(&[-1, 0, 1]), up(&[0, 2]), up(&[1])]);
        let c = sturm_sequence(&up(&[1, 0, 1])).unwrap();
        assert!(c.last().unwrap().leading_coeff().sign() < 0);
        assert_eq!(variations(&c, &r(-10)), variations(&c, &r(10)));
        let c = sturm_sequence(&up(&[1, -2, 1])).unwrap();
        assert_eq!(c[0], up(&[-1, 1]));
        assert_eq!(sturm_sequence(&up(&[5])).unwrap().len(), 1);
        assert!(sturm_sequence(&UniPoly::zero()).is_err());
    }

    #[test]
    fn interval_counts() {
        assert_eq!(sturm_count(&up(&[-1, 0, 1]), &r(-2), &r(2)).unwrap(), 2);
        assert_eq!(sturm_count(&up(&[1, 0, 1]), &r(-10), &r(10)).unwrap(), 0);
        assert_eq!(sturm_count(&up(&[0, -1, 0, 1]), &Rational::new(1, 2).unwrap(), &r(2)).unwrap(), 1);
        assert!(matches!(sturm_count(&up(&[0, -1, 0, 1]), &r(0), &r(2)), Err(Error::EndpointIsRoot(_))));
        assert!(matches!(sturm_count(&up(&[-1, 0, 1]), &r(2), &r(2)), Err(Error::EmptyInterval)));
    }

    #[test]
    fn whole_line_counts() {
        assert_eq!(count_all_real(&up(&[-1, 0, 1])).unwrap(), 2);
        let g = up(&[-1, 1]).pow(2).mul(&up(&[1, 0, 1]));
        assert_eq!(count_all_real(&g).unwrap(), 1);
        assert_eq!(count_all_real(&up(&[0, -1, 0, 0, 0, 1])).unwrap(), 3);
        assert_eq!(count_all_real(&up(&[7])).unwrap(), 0);
    }

    #[test]
    fn isolation_examples() {
        let iso = isolate_real_roots(&up(&[-2, 0, 1])).unwrap();
        assert_eq!(iso.len(), 2);
        // each interval's root lies in the stated unit window
        let g = up(&[-2, 0, 1]);
        for ((lo, hi), (wlo, whi)) in iso.intervals.iter().zip([(r(-2), r(-1)), (r(1), r(2))]) {
            let (a, b) = (lo.clone().max(wlo), hi.clone().min(whi));
            assert_eq!(sturm_count(&g, &a, &b).unwrap(), 1);
        }
        assert!(isolate_real_roots(&up(&[1, 0, 1])).unwrap().is_empty());
        let iso = isolate_real_roots(&UniPoly::x()).unwrap();
        assert_eq!(iso.len(), 1);
        assert!(iso.intervals[0].0 < r(0) && iso.intervals[0].1 >= r(0));
    }

    #[test]
    fn isolation_survives_root_at_midpoint() {
        // Cauchy interval is symmetric, so 0 is the first split point
        let iso = isolate_real_roots(&up(&[0, -1, 0, 1])).unwrap();
        assert_eq!(iso.len(), 3);
        for (lo, hi) in &iso.intervals {
            assert_eq!(sturm_count(&up(&[0, -1, 0, 1]), lo, hi).unwrap(), 1);
        }
    }

    fn sys(ctx: &VarContext, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| parse_polynomial(s, ctx).unwrap()).collect()
    }

    #[test]
    fn system_examples() {
        let c = VarContext::new(["X", "Y"]).unwrap();
        let s = sys(&c, &["X^2 + Y^2 - 1", "Y - X", "X"]);
        let o = oracle_count_system(&s[..2], &s[2]).unwrap();
        assert_eq!((o.positive, o.negative, o.zero, o.total_real), (1, 1, 0, 2));

        let c = VarContext::new(["X"]).unwrap();
        let s = sys(&c, &["X^2 - 1", "1", "X - 1"]);
        let o = oracle_count_system(&s[..1], &s[1]).unwrap();
        assert_eq!((o.positive, o.negative, o.zero, o.total_real), (2, 0, 0, 2));
        let o = oracle_count_system(&s[..1], &s[2]).unwrap();
        assert_eq!((o.positive, o.negative, o.zero, o.total_real), (0, 1, 1, 2));
    }

    #[test]
    fn system_needing_general_position() {
        let c = VarContext::new(["X", "Y"]).unwrap();
        let s = sys(&c, &["X^2 - 1", "Y^2 - 1", "X + 2*Y"]);
        let o = oracle_count_system(&s[..2], &s[2]).unwrap();
        assert_eq!((o.positive, o.negative, o.zero, o.total_real), (2, 2, 0, 4));
        assert!(o.t.is_some());
        let s = sys(&c, &["X^2 - 1", "Y^2 - 1", "X - Y"]);
        let o = oracle_count_system(&s[..2], &s[2]).unwrap();
        assert_eq!((o.positive, o.negative, o.zero), (1, 1, 2));
    }

    #[test]
    fn oracle_inapplicable() {
        let c = VarContext::new(["x"]).unwrap();
        let s = sys(&c, &["x^2", "1"]);
        assert!(matches!(oracle_count_system(&s[..1], &s[1]), Err(Error::NotRadical)));
        let c = VarContext::new(["x", "y"]).unwrap();
        let s = sys(&c, &["x^2 - 1", "y^2 - 1", "1"]);
        let res = oracle_count_with(&s[..2], &s[2], &ShapeSchedule::Retry { max_trials: 1 });
        assert!(matches!(res, Err(Error::ShapeUnobtainable { trials: 2 })));
    }

    #[test]
    fn sign_determination_needs_refinement() {
        // roots of g: +-sqrt(2); h = X - 7/5 is positive at sqrt(2) but vanishes near it
        let g = up(&[-2, 0, 1]);
        let h = UniPoly::new(vec![Rational::new(-7, 5).unwrap(), Rational::one()]);
        let iso = isolate_real_roots(&g).unwrap();
        let signs: Vec<i32> =
            iso.intervals.iter().map(|(lo, hi)| sign_at_isolated_root(&g, &h, lo, hi).unwrap()).collect();
        assert_eq!(signs, vec![-1, 1]);
    }

    proptest! {
        #[test]
        fn split_polynomial_counts(roots in proptest::collection::vec(-6i64..7, 1..8)) {
            let rs: Vec<Rational> = roots.iter().map(|&k| Rational::from(k)).collect();
            let g = UniPoly::from_roots(&rs);
            let mut distinct = roots.clone();
            distinct.sort();
            distinct.dedup();
            prop_assert_eq!(count_all_real(&g).unwrap(), distinct.len());
            let iso = isolate_real_roots(&g).unwrap();
            prop_assert_eq!(iso.len(), distinct.len());
            for ((lo, hi), root) in iso.intervals.iter().zip(&distinct) {
                let root = Rational::from(*root);
                prop_assert!(lo < &root && &root <= hi);
            }
            for w in iso.intervals.windows(2) {
                prop_assert!(w[0].1 <= w[1].0);
            }
        }
    }
}
