mod common;

use common::*;
use k3_algebra::{rat, Rational};
use k3_quartic::curves::{quotient_map_f, verify_map, CubicModel, EcPoint};
use k3_quartic::fibration::{classify_fibers, shioda_tate_bound, FiberLocation};
use k3_quartic::numeric::{cm_isogeny_check, period_ratio_rational, CmVerdict, Complex, Ctx};
use k3_quartic::quartic::{build_quartic, singular_points, stability, verify_ordinary_nodes, AlphaValue, Stability};
use k3_quartic::suite::cover_at;
use num_traits::Zero;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn squarefree(f in small_qpoly(3), g in small_qpoly(2), h in small_qpoly(2)) {
        squarefree_round_trip(&f, &g, &h)?;
    }

    #[test]
    fn quotient_reduction(c1 in terms(), c2 in terms()) {
        quotient_reduce(&c1, &c2)?;
    }

    #[test]
    fn twist_invariant_classification(f in twist_minimal(), g in multiplier()) {
        twist_invariance(&f, &g)?;
    }

    #[test]
    fn ec_add_is_associative(p in point(), q in point(), r in point()) {
        ec_add_associative(&p, &q, &r)?;
    }

    #[test]
    fn fourth_power_test_is_projective(p in curve_panel(), m in mobius()) {
        fourth_power_reparametrization(&p, &m)?;
    }

    #[test]
    fn euler_and_infinity(f in twist_minimal()) {
        let cfg = classify_fibers(&f).unwrap();
        prop_assert_eq!(cfg.total_euler, 3 * cfg.sum_k());
        let deg = f.degree().unwrap() as i64;
        let k_inf = (-deg).rem_euclid(4) as u32;
        let at_inf = cfg.fibers.iter().find(|x| x.location == FiberLocation::Infinity);
        match at_inf {
            Some(x) => prop_assert_eq!(x.k, k_inf),
            None => prop_assert_eq!(k_inf, 0),
        }
        for r in 0..3 {
            prop_assert!(shioda_tate_bound(&cfg, r) < shioda_tate_bound(&cfg, r + 1));
        }
    }

    #[test]
    fn quartic_structure(a in small_rat()) {
        let alpha = AlphaValue::Finite(a.clone());
        prop_assert!(build_quartic(a.clone()).factor_check().pass);
        let nodes = singular_points(&alpha);
        let stable = stability(&alpha) == Stability::Stable;
        prop_assert_eq!(stable, nodes.degeneracy.is_none() && nodes.distinct == 5);
        if stable {
            prop_assert!(verify_ordinary_nodes(&a).unwrap().pass);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn cover_map_specializes(a in small_rat()) {
        prop_assume!(stability(&AlphaValue::Finite(a.clone())) == Stability::Stable);
        let rep = cover_at(&a).unwrap();
        prop_assert!(rep.pass, "{:?}", rep.witness);
    }

    #[test]
    fn quotient_map_specializes(b4 in small_rat()) {
        prop_assume!(!b4.is_zero() && b4 != rat(1, 1) && b4 != rat(-1, 1));
        prop_assert!(verify_map(&quotient_map_f(b4)).unwrap().pass);
    }
}

#[test]
fn ec_add_on_the_lemniscatic_curve() {
    let e = CubicModel::new(rat(0, 1), rat(-1, 1), rat(0, 1));
    let pts: Vec<EcPoint<Rational>> = vec![
        EcPoint::Infinity,
        EcPoint::Affine(rat(0, 1), rat(0, 1)),
        EcPoint::Affine(rat(1, 1), rat(0, 1)),
        EcPoint::Affine(rat(-1, 1), rat(0, 1)),
    ];
    for a in &pts {
        for b in &pts {
            assert_eq!(e.add(a, b).unwrap(), e.add(b, a).unwrap());
            for c in &pts {
                let lhs = e.add(&e.add(a, b).unwrap(), c).unwrap();
                let rhs = e.add(a, &e.add(b, c).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
                assert!(e.contains(&lhs));
            }
        }
    }
}

#[test]
fn error_bound_shrinks_with_precision() {
    let roots = [rat(1, 1), rat(0, 1), rat(-1, 1)];
    let r = [&roots[0], &roots[1], &roots[2]];
    let (lo, c1) = period_ratio_rational(r, 128).unwrap();
    let (hi, c2) = period_ratio_rational(r, 256).unwrap();
    let ratio = c1.to_f64(&lo.error_bound) / c2.to_f64(&hi.error_bound);
    assert!(ratio >= 2f64.powi(64), "{ratio}");
}

#[test]
fn no_false_gaussian_cm() {
    let c = Ctx::new(160).unwrap();
    // Reduced forms (a, b, c) with discriminant not of the form -4m².
    for (a, b, cc) in [(1i64, 1i64, 1i64), (1, 1, 2), (1, 0, 2), (1, 1, 3), (1, 1, 4), (1, 0, 5), (2, 1, 3), (2, 2, 3), (1, 0, 3), (1, 1, 5)] {
        let d = b * b - 4 * a * cc;
        let zero = rat(0, 1);
        let re = Complex::from_rationals(&c, &rat(-b, 2 * a), &zero);
        let tau = re.add(&Complex::from_rationals(&c, &rat(d, 4 * a * a), &zero).sqrt(&c), &c);
        let v = cm_isogeny_check(&tau, 20, &c).unwrap();
        assert!(!matches!(v, CmVerdict::IsogenousToE { .. }), "D = {d}: {v:?}");
    }
}
