mod common;

use proptest::prelude::*;

use common::*;
use tracecount::count::{
    count_real_points, find_shape, hermite_count, sign_condition_counts, ShapeSchedule, ShapeStatus,
};
use tracecount::groebner::{buchberger, QuotientAlgebra};
use tracecount::oracle::{count_all_real, oracle_count_system, sturm_count};
use tracecount::poly::{general_position_transform, MonomialOrder, Polynomial, UniPoly, VarContext};
use tracecount::quadform::{descartes_counts, type_of, Matrix, SymMatrix};
use tracecount::traceform::{generalized_trace_form, trace_form};
use tracecount::Rational;

fn univariate_algebra(g: &UniPoly) -> (VarContext, QuotientAlgebra) {
    let ctx = VarContext::new(["x"]).unwrap();
    let p = Polynomial::from_univariate(&ctx, 0, g);
    let alg = QuotientAlgebra::from_system(&[p], &MonomialOrder::lex(1)).unwrap();
    (ctx, alg)
}

fn vandermonde(roots: &[Rational]) -> Matrix {
    let m = roots.len();
    let rows = (0..m).map(|k| roots.iter().map(|a| a.pow(k as i32).unwrap()).collect()).collect();
    Matrix::from_rows(rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn hermite_matches_sturm(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = if seed % 2 == 0 { random_univariate(&mut r, 10, 20) } else { random_with_repeated_factor(&mut r, 10, 20) };
        let ctx = VarContext::new(["x"]).unwrap();
        let h = hermite_count(&Polynomial::from_univariate(&ctx, 0, &g)).unwrap();
        prop_assert_eq!(h.real, count_all_real(&g).unwrap());
        // type is always (r + s, s)
        prop_assert_eq!(h.form_type.p, h.real + h.complex_pairs);
        prop_assert_eq!(h.form_type.q, h.complex_pairs);
        prop_assert_eq!(h.rank, g.squarefree_part().degree().unwrap());
    }

    #[test]
    fn descartes_bound_and_parity(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_univariate(&mut r, 9, 9);
        let (vp, vm) = descartes_counts(g.coeffs()).unwrap();
        // positive roots with multiplicity: peel off squarefree parts; 0 is never a root after stripping
        let count_half = |f: &UniPoly| -> usize {
            let mut f = f.clone();
            let mut total = 0;
            while !f.is_constant() {
                let s = f.squarefree_part();
                total += sturm_count(&s, &Rational::zero(), &s.cauchy_bound()).unwrap();
                f = f.exact_div(&s).unwrap().unwrap();
            }
            total
        };
        let strip_zero = |f: &UniPoly| -> UniPoly {
            let k = f.coeffs().iter().take_while(|c| c.is_zero()).count();
            UniPoly::new(f.coeffs()[k..].to_vec())
        };
        let core = strip_zero(&g);
        let np = count_half(&core);
        let nm = count_half(&core.reflect());
        prop_assert!(np <= vp && (vp - np) % 2 == 0);
        prop_assert!(nm <= vm && (vm - nm) % 2 == 0);
    }

    #[test]
    fn rank_law_with_multiplicities(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_with_repeated_factor(&mut r, 9, 6);
        let (_, alg) = univariate_algebra(&g);
        let t = type_of(&trace_form(&alg));
        let sq = g.squarefree_part();
        prop_assert_eq!(t.rank(), sq.degree().unwrap());
        prop_assert_eq!(t.is_degenerate(), !g.is_squarefree());
        // nilpotent class of g / gcd-free part: sq(x) is nilpotent in the algebra, so it lies in the kernel
        let ctx = alg.context().clone();
        let nil = alg.coords(&Polynomial::from_univariate(&ctx, 0, &sq)).unwrap();
        let gram = trace_form(&alg);
        let image = gram.matrix().mul_vec(&nil);
        prop_assert!(image.iter().all(Rational::is_zero));
    }

    #[test]
    fn vandermonde_factorization(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = (seed % 7) as usize + 1;
        let roots = distinct_rationals(&mut r, k);
        let g = UniPoly::from_roots(&roots);
        let (ctx, alg) = univariate_algebra(&g);
        let v = vandermonde(&roots);
        let tf = trace_form(&alg);
        prop_assert_eq!(tf.matrix(), &v.mul(&v.transpose()));
        let h = random_univariate(&mut r, 3, 4);
        let d = Matrix::diagonal(&roots.iter().map(|a| h.eval(a)).collect::<Vec<_>>());
        let phi = generalized_trace_form(&alg, &Polynomial::from_univariate(&ctx, 0, &h)).unwrap();
        prop_assert_eq!(phi.matrix(), &v.mul(&d).mul(&v.transpose()));
    }

    #[test]
    fn sylvester_invariance(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = (seed % 6) as usize + 1;
        let s = random_symmetric(&mut r, n);
        let t = random_invertible(&mut r, n);
        prop_assert_eq!(type_of(&s.congruent(&t)), type_of(&s));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn oracle_equivalence_and_partition(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = 2 + (seed % 2) as usize;
        let sys = random_shape_system(&mut r, n, 8);
        let totals = count_real_points(&sys.system).unwrap();
        let s = sign_condition_counts(&sys.system, &sys.h).unwrap();
        let o = oracle_count_system(&sys.system, &sys.h).unwrap();
        prop_assert_eq!((s.positive, s.negative, s.zero), (o.positive, o.negative, o.zero));
        prop_assert_eq!(s.total_real(), totals.total_real);
        prop_assert_eq!(o.total_real, totals.total_real);
        prop_assert_eq!(totals.total_complex, sys.dim);
        prop_assert_eq!(totals.distinct_complex, sys.dim);
    }

    #[test]
    fn rank_reports_nonvanishing_points(seed in any::<u64>()) {
        // complex points with H = 0 are dim of Q[X]/<system, H> for a radical system
        let mut r = rng(seed);
        let sys = random_shape_system(&mut r, 2, 6);
        let s = sign_condition_counts(&sys.system, &sys.h).unwrap();
        let mut with_h = sys.system.clone();
        with_h.push(sys.h.clone());
        let gb = buchberger(&with_h, &MonomialOrder::degrevlex(2)).unwrap();
        let zeros = if gb.is_unit() { 0 } else {
            let shape = find_shape(&with_h, &[], &ShapeSchedule::Retry { max_trials: 12 }).unwrap().0;
            match shape {
                ShapeStatus::Found { shape, .. } => shape.degree(),
                other => panic!("zero set of H not in shape form: {other:?}"),
            }
        };
        prop_assert_eq!(s.rank_h + zeros, sys.dim);
    }

    #[test]
    fn dimension_is_order_independent(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sys = random_shape_system(&mut r, 2 + (seed % 2) as usize, 6);
        let n = sys.ctx.len();
        let lex = QuotientAlgebra::from_system(&sys.system, &MonomialOrder::lex(n)).unwrap();
        let drl = QuotientAlgebra::from_system(&sys.system, &MonomialOrder::degrevlex(n)).unwrap();
        prop_assert_eq!(lex.dim(), drl.dim());
        prop_assert_eq!(lex.dim(), sys.dim);
    }

    #[test]
    fn shape_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let sys = random_shape_system(&mut r, 2 + (seed % 2) as usize, 6);
        let n = sys.ctx.len();
        let (status, _) = find_shape(&sys.system, &[], &ShapeSchedule::Retry { max_trials: 12 }).unwrap();
        let ShapeStatus::Found { t, shape } = status else { panic!("no shape basis: {status:?}") };
        let target = match &t {
            None => sys.system.clone(),
            Some(t) => general_position_transform(&sys.system, t).unwrap(),
        };
        let order = MonomialOrder::lex(n);
        let a = buchberger(&target, &order).unwrap();
        let b = buchberger(&shape.generators(), &order).unwrap();
        for g in &target {
            prop_assert!(b.contains(g).unwrap());
        }
        for g in shape.generators() {
            prop_assert!(a.contains(&g).unwrap());
        }
    }
}

#[test]
fn nonsquarefree_symmetric_forms_have_kernel() {
    let g = UniPoly::from_ints(&[-1, 1]).pow(3).mul(&UniPoly::from_ints(&[2, 0, 1]));
    let (_, alg) = univariate_algebra(&g);
    let t = type_of(&SymMatrix::new(trace_form(&alg).into_matrix()).unwrap());
    assert_eq!((t.p, t.q, t.rank()), (2, 1, 3));
}
