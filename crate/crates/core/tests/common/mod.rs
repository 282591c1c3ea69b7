//! Strategies and property bodies shared by the property tests and the
//! acceptance runner.
#![allow(dead_code)]

use k3_algebra::{rat, MultiPoly, Poly, PolyRing, QuotientContext, Rational};
use k3_quartic::covers::{fourth_power_test, psi_curve, zeta_curve, FourthPowerReport, Parametrization};
use k3_quartic::curves::{CubicModel, EcPoint};
use k3_quartic::fibration::{classify_fibers, twist_minimize, FiberLocation};
use k3_quartic::quartic::build_quartic;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn small_rat() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn linear(root: i64) -> Poly<Rational> {
    Poly::from_ints(&[-root, 1])
}

/// `f = c · Π (λ - rᵢ)^{eᵢ}` with distinct roots and `eᵢ ∈ {1, 2, 3}`,
/// sometimes times an irreducible quadratic.
pub fn twist_minimal() -> impl Strategy<Value = Poly<Rational>> {
    (
        prop::collection::btree_map(-6i64..=6, 1u32..=3, 1..4),
        prop::option::of(1u32..=3),
        (-5i64..=5).prop_filter("nonzero", |c| *c != 0),
    )
        .prop_map(|(roots, quad, c)| {
            let mut f = Poly::constant(rat(c, 1));
            for (r, e) in roots {
                f = &f * &linear(r).pow(e);
            }
            if let Some(e) = quad {
                f = &f * &Poly::from_ints(&[2, 0, 1]).pow(e);
            }
            f
        })
}

pub fn multiplier() -> impl Strategy<Value = Poly<Rational>> {
    (prop::collection::vec(-6i64..=6, 0..3), (-4i64..=4).prop_filter("nonzero", |c| *c != 0), any::<bool>()).prop_map(
        |(roots, c, quad)| {
            let mut g = Poly::constant(rat(c, 3));
            for r in roots {
                g = &g * &linear(r);
            }
            if quad {
                g = &g * &Poly::from_ints(&[1, 1, 1]);
            }
            g
        },
    )
}

fn locations(f: &Poly<Rational>) -> Vec<(String, u32)> {
    let cfg = classify_fibers(f).unwrap();
    let mut v: Vec<(String, u32)> = cfg
        .fibers
        .iter()
        .map(|fib| {
            let loc = match &fib.location {
                FiberLocation::Finite(p) => p.monic().to_string(),
                FiberLocation::Infinity => "inf".into(),
            };
            (loc, fib.k)
        })
        .collect();
    v.sort();
    v
}

/// The cubic `y² = x³ + a₂x² + a₄x + a₆` through three points with
/// distinct `x`.
fn cubic_through(p: &[(Rational, Rational); 3]) -> Option<CubicModel<Rational>> {
    // Rows (x², x, 1) · (a₂, a₄, a₆) = y² - x³.
    let m: Vec<[Rational; 3]> = p.iter().map(|(x, _)| [x.clone() * x.clone(), x.clone(), Rational::one()]).collect();
    let rhs: Vec<Rational> = p.iter().map(|(x, y)| y.clone() * y.clone() - x.clone() * x.clone() * x.clone()).collect();
    let det3 = |m: &[[Rational; 3]]| {
        m[0][0].clone() * (m[1][1].clone() * m[2][2].clone() - m[1][2].clone() * m[2][1].clone())
            - m[0][1].clone() * (m[1][0].clone() * m[2][2].clone() - m[1][2].clone() * m[2][0].clone())
            + m[0][2].clone() * (m[1][0].clone() * m[2][1].clone() - m[1][1].clone() * m[2][0].clone())
    };
    let d = det3(&m);
    if d.is_zero() {
        return None;
    }
    let solve = |k: usize| {
        let mut mk = m.clone();
        for (row, r) in mk.iter_mut().zip(&rhs) {
            row[k] = r.clone();
        }
        det3(&mk) / d.clone()
    };
    let e = CubicModel::new(solve(0), solve(1), solve(2));
    (!e.discriminant().is_zero()).then_some(e)
}

pub fn point() -> impl Strategy<Value = (Rational, Rational)> {
    (small_rat(), small_rat())
}

pub fn mobius() -> impl Strategy<Value = [i64; 4]> {
    prop::array::uniform4(-4i64..=4).prop_filter("invertible", |m| m[0] * m[3] - m[1] * m[2] != 0)
}

pub fn curve_panel() -> impl Strategy<Value = Parametrization> {
    let p = |cs: &[i64]| Poly::<Rational>::from_ints(cs);
    prop_oneof![
        Just(psi_curve()),
        Just(zeta_curve()),
        Just(Parametrization::new(p(&[1, 2]), p(&[3, -1]), p(&[5, 7])).unwrap()),
        Just(Parametrization::new(p(&[1, 0, 1]), p(&[0, 1]), p(&[2, 1, 3])).unwrap()),
    ]
}

pub fn small_qpoly(max_deg: usize) -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec((-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d)), 1..=max_deg + 1)
        .prop_map(Poly::from_coeffs)
        .prop_filter("nonzero", |p| !p.is_zero())
}

pub type Terms = Vec<(u32, u32, Rational)>;

pub fn terms() -> impl Strategy<Value = Terms> {
    prop::collection::vec((0u32..7, 0u32..7, small_rat()), 1..6)
}

pub fn squarefree_round_trip(f: &Poly<Rational>, g: &Poly<Rational>, h: &Poly<Rational>) -> Result<(), TestCaseError> {
    let p = &(f * &g.pow(2)) * &h.pow(3);
    let d = p.squarefree_decomposition().unwrap();
    prop_assert_eq!(d.expand(), p.clone());
    for (a, _) in &d.factors {
        prop_assert!(a.is_squarefree());
    }
    Ok(())
}

/// Reduction modulo `τ² = ρ(ρ⁴ + 14/9 ρ² + 1)` is idempotent and
/// multiplicative.
pub fn quotient_reduce(c1: &Terms, c2: &Terms) -> Result<(), TestCaseError> {
    let ring = PolyRing::new(&["rho", "tau"]);
    let rho: MultiPoly<Rational> = ring.v("rho");
    let h = &rho * &(&(&rho.pow(4) + &rho.pow(2).scale(&rat(14, 9))) + &ring.int(1));
    let q = QuotientContext::with_relations(ring.clone(), vec![("tau", 2, h)]).unwrap();
    let build = |terms: &Terms| {
        terms
            .iter()
            .fold(ring.zero(), |acc: MultiPoly<Rational>, (a, b, c)| &acc + &ring.monomial(c.clone(), vec![*a, *b]))
    };
    let (e1, e2) = (build(c1), build(c2));
    let r1 = q.reduce(&e1).unwrap();
    prop_assert_eq!(q.reduce(&r1).unwrap(), r1.clone());
    let r2 = q.reduce(&e2).unwrap();
    prop_assert_eq!(q.reduce(&(&e1 * &e2)).unwrap(), q.reduce(&(&r1 * &r2)).unwrap());
    Ok(())
}

pub fn twist_invariance(f: &Poly<Rational>, g: &Poly<Rational>) -> Result<(), TestCaseError> {
    let twisted = f * &g.pow(4);
    let t = twist_minimize(&twisted).unwrap();
    let base = twist_minimize(f).unwrap();
    prop_assert_eq!(&base.reduced, f);
    prop_assert_eq!(&(&t.reduced * &t.multiplier.pow(4)), &twisted);
    let (a, b) = (classify_fibers(f).unwrap(), classify_fibers(&t.reduced).unwrap());
    prop_assert_eq!(a.type_profile(), b.type_profile());
    prop_assert_eq!(a.total_euler, b.total_euler);
    prop_assert_eq!(locations(f), locations(&t.reduced));
    Ok(())
}

pub fn ec_add_associative(p: &(Rational, Rational), q: &(Rational, Rational), r: &(Rational, Rational)) -> Result<(), TestCaseError> {
    prop_assume!(p.0 != q.0 && q.0 != r.0 && p.0 != r.0);
    let pts = [p.clone(), q.clone(), r.clone()];
    let Some(e) = cubic_through(&pts) else { return Ok(()) };
    let [a, b, c] = pts.map(|(x, y)| EcPoint::Affine(x, y));
    for x in [&a, &b, &c] {
        prop_assert!(e.contains(x));
    }
    let ab = e.add(&a, &b).unwrap();
    prop_assert_eq!(&ab, &e.add(&b, &a).unwrap());
    prop_assert!(e.contains(&ab));
    let lhs = e.add(&ab, &c).unwrap();
    let rhs = e.add(&a, &e.add(&b, &c).unwrap()).unwrap();
    prop_assert!(e.contains(&lhs));
    prop_assert_eq!(lhs, rhs);
    let aa = e.add(&a, &a).unwrap();
    prop_assert!(e.contains(&aa));
    prop_assert_eq!(e.add(&aa, &e.neg(&a)).unwrap(), a);
    Ok(())
}

pub fn fourth_power_reparametrization(p: &Parametrization, m: &[i64; 4]) -> Result<(), TestCaseError> {
    let fam = build_quartic(rat(81, 49));
    let before = fourth_power_test(&fam.equation, p).unwrap();
    let q = p.reparametrize(&rat(m[0], 1), &rat(m[1], 1), &rat(m[2], 1), &rat(m[3], 1)).unwrap();
    let after = fourth_power_test(&fam.equation, &q).unwrap();
    prop_assert_eq!(before.verdict, after.verdict);
    let total = |r: &FourthPowerReport| {
        r.factors.iter().map(|f| f.multiplicity as usize * f.factor.degree().unwrap()).sum::<usize>()
            + r.multiplicity_at_infinity as usize
    };
    prop_assert_eq!(total(&before), total(&after));
    Ok(())
}
