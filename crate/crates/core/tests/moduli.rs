use k3_quartic::moduli::*;
use k3_algebra::rat;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn cayley_round_trip_hundred_samples() {
    let rep = cayley_round_trips(100, 2024).unwrap();
    assert!(rep.pass, "{:?}", rep.witness);
}

#[test]
fn literal_conjugation_reading_is_logged() {
    let checks = fricke_checks().unwrap();
    let lit = checks.iter().find(|c| c.name.contains("literal")).unwrap();
    assert!(lit.notes[0].starts_with("fails"), "{:?}", lit.notes);
}

#[test]
fn g0_generators_are_certified() {
    for g in g0_generators().unwrap() {
        assert!(membership(&g, Group::G0).member, "{g}");
    }
}

fn word(gens: Vec<Mat2>) -> impl Strategy<Value = Mat2> {
    let n = gens.len();
    prop::collection::vec((0..n, any::<bool>()), 1..6).prop_map(move |w| {
        w.iter().fold(Mat2::identity(), |acc, &(k, inv)| {
            let g = if inv { gens[k].inv().unwrap() } else { gens[k].clone() };
            acc.mul(&g)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn h0_is_closed(a in word(h0_generators()), b in word(h0_generators())) {
        prop_assert!(membership(&a.mul(&b), Group::H0).member);
        prop_assert!(membership(&a.inv().unwrap(), Group::H0).member);
    }

    #[test]
    fn h2_is_closed(a in word(h2_generators()), b in word(h2_generators())) {
        prop_assert!(membership(&a.mul(&b), Group::H2).member);
    }

    #[test]
    fn cayley_is_multiplicative(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (m1, m2) = (random_su11(&mut rng), random_su11(&mut rng));
        prop_assert!(membership(&m1.mul(&m2), Group::SU11).member);
        let lhs = cayley(&m1.mul(&m2)).unwrap();
        let rhs = cayley(&m1).unwrap().mul(&cayley(&m2).unwrap());
        prop_assert!(lhs.projectively_equal(&rhs));
        prop_assert_eq!(inverse_cayley(&lhs).unwrap(), m1.mul(&m2));
    }

    #[test]
    fn positivity_matches_ball(p in -6i64..=6, q in -6i64..=6, r in -6i64..=6, s in -6i64..=6) {
        let c = Cyclotomic8::new();
        let z2 = c.gaussian(&rat(p, 1), &rat(q, 1));
        prop_assume!(p != 0 || q != 0);
        let z4 = c.gaussian(&rat(r, 1), &rat(s, 1));
        let pt = period_point(&z2, &z4).unwrap();
        prop_assert_eq!(pt.inside, p * p + q * q > r * r + s * s);
        prop_assert!(pt.checks.iter().all(|c| c.pass));
    }
}
