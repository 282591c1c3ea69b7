//! Acceptance runner: evaluates the eleven acceptance criteria at their
//! stated tolerances and prints one PASS/FAIL line per criterion.
//!
//! A criterion listed in `KNOWN_FAILURES` is expected to fail; the runner
//! exits nonzero if any criterion's outcome differs from its expectation,
//! so a fix that turns a known failure into a pass is also reported.

mod common;

use std::process::ExitCode;

use common::*;
use k3_algebra::{rat, Field, Poly, QFunc, Rational};
use k3_quartic::covers::{
    closed_form_section, fourth_power_test, lift_two_section, psi_curve, sum_sections, zeta_curve, Parametrization,
    SplitVerdict,
};
use k3_quartic::curves::{e_beta, CubicModel};
use k3_quartic::fibration::{
    classify_fibers, degeneration_model, eighth_root_automorphism, form_scaling_order, generic_family,
    parity_refine, rational_family, shioda_tate_bound, DegenerationKind, FiberLocation, KodairaType,
};
use k3_quartic::fields::{fourth_root_of, NumberField};
use k3_quartic::lattices::{
    kummer_tn, lattice_invariants, obstruction_evidence, rank4_classification_check, tn_gram, tn_search, GramLattice,
    TnResult,
};
use k3_quartic::moduli::{cayley_round_trips, fricke_checks};
use k3_quartic::numeric::{cm_isogeny_check, distance, e_beta_period, period_ratio_rational, CmVerdict, Complex};
use k3_quartic::quartic::build_quartic;
use k3_quartic::suite::run_suite;
use k3_quartic::{Result, VerificationReport};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::strategy::Strategy;
use proptest::test_runner::{Config, TestRunner};

const KNOWN_FAILURES: &[u32] = &[7];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn from_parts(parts: Vec<(String, bool)>) -> Self {
        let failed: Vec<String> = parts.iter().filter(|p| !p.1).map(|p| p.0.clone()).collect();
        let detail = if failed.is_empty() {
            parts.iter().map(|p| p.0.as_str()).collect::<Vec<_>>().join("; ")
        } else {
            format!("failed: {}", failed.join("; "))
        };
        Outcome { pass: failed.is_empty(), detail }
    }
}

fn part(name: impl Into<String>, ok: bool) -> (String, bool) {
    (name.into(), ok)
}

fn from_reports(reports: &[VerificationReport]) -> Vec<(String, bool)> {
    reports
        .iter()
        .map(|r| match &r.witness {
            Some(w) if !r.pass => (format!("{} ({w})", r.name), false),
            _ => (r.name.clone(), r.pass),
        })
        .collect()
}

fn criterion_1() -> Result<Outcome> {
    let cfg = classify_fibers(&generic_family())?;
    let g = Poly::from_coeffs(vec![QFunc::var(), QFunc::from_int(2), QFunc::from_int(1)]);
    let got: Vec<_> = cfg.fibers.iter().map(|f| (f.kind, f.location.clone(), f.places)).collect();
    let want = [
        (KodairaType::I0Star, FiberLocation::Finite(g), 2),
        (KodairaType::IIIStar, FiberLocation::Finite(Poly::x()), 1),
        (KodairaType::III, FiberLocation::Infinity, 1),
    ];
    Ok(Outcome::from_parts(vec![
        part("exactly three locations", got.len() == 3),
        part("III* at lambda = 0, I0* at lambda^2 + 2 lambda + alpha, III at inf", want.iter().all(|w| got.contains(w))),
        part(format!("Euler total {}", cfg.total_euler), cfg.total_euler == 24),
    ]))
}

fn criterion_2() -> Result<Outcome> {
    let generic = classify_fibers(&generic_family())?;
    let inf = degeneration_model(DegenerationKind::AtInfinity)?;
    let inf_cfg = classify_fibers(&inf.at_beta(&Rational::zero())?)?;
    let zero = degeneration_model(DegenerationKind::AtZero)?;
    let zero_cfg = classify_fibers(&zero.at_beta(&Rational::zero())?)?;
    let mut zero_profile = zero_cfg.type_profile();
    zero_profile.sort_by_key(|(t, _)| t.euler());
    let (auto, fib) = eighth_root_automorphism();
    let order = form_scaling_order(&auto, &fib)?.order;
    Ok(Outcome::from_parts(vec![
        part("rescalings verified", inf.fibration.provenance_ok() && zero.fibration.provenance_ok()),
        part(
            "alpha = inf model at beta = 0 has the generic table",
            inf_cfg.type_profile() == generic.type_profile() && inf_cfg.total_euler == 24,
        ),
        part(
            "alpha = 0 model at beta = 0 is III*, I0*, III*",
            zero_profile == vec![(KodairaType::I0Star, 1), (KodairaType::IIIStar, 2)] && zero_cfg.total_euler == 24,
        ),
        part("its Shioda-Tate bound is 20", shioda_tate_bound(&zero_cfg, 0) == 20),
        part(format!("form scaling order {order:?}"), order == Some(8)),
    ]))
}

fn criterion_3() -> Result<Outcome> {
    let generic = shioda_tate_bound(&classify_fibers(&generic_family())?, 0);
    let special = classify_fibers(&rational_family(&rat(81, 49)))?;
    // The section of criterion 5 provides Mordell-Weil rank at least 1.
    let sec = section_matches()?;
    let with_section = shioda_tate_bound(&special, 1);
    let refined = parity_refine(with_section)?;
    Ok(Outcome::from_parts(vec![
        part(format!("generic bound {generic}"), generic == 18),
        part("section at alpha = 81/49 exists", sec.pass),
        part(format!("bound with the section {with_section}"), with_section == 19),
        part(format!("parity refined {refined}"), refined == 20),
    ]))
}

fn split_parts(label: &str, p: &Parametrization, factors: &[&[i64]]) -> Result<Vec<(String, bool)>> {
    let fam = build_quartic(rat(81, 49));
    let rep = fourth_power_test(&fam.equation, p)?;
    let mut out = vec![part(format!("{label}: Splits"), rep.verdict == SplitVerdict::Splits)];
    let mults: Vec<u32> = rep.factors.iter().map(|f| f.multiplicity).collect();
    out.push(part(format!("{label}: profile {mults:?}"), mults == vec![4, 4, 4]));
    for cs in factors {
        let f = Poly::<Rational>::from_ints(cs);
        out.push(part(format!("{label}: factor {f}"), rep.multiplicity_of(&f) == Some(4)));
    }
    Ok(out)
}

fn criterion_4() -> Result<Outcome> {
    let mut parts = split_parts("psi", &psi_curve(), &[&[-1, 1], &[0, 1], &[3, -2, 3]])?;
    parts.extend(split_parts("zeta", &zeta_curve(), &[&[0, 1], &[-9, 1], &[3, 1]])?);
    Ok(Outcome::from_parts(parts))
}

fn section_matches() -> Result<VerificationReport> {
    let ctx = fourth_root_of(7, "t")?;
    let t = NumberField::generator(&ctx);
    let root = NumberField::from_rational(&rat(-18, 49)) * t.pow(3);
    let lift = lift_two_section(&rat(81, 49), &psi_curve(), &root)?;
    let sec = sum_sections(&lift)?;
    let (u, v) = closed_form_section(&t)?;
    let mut parts = lift.checks.clone();
    parts.extend(sec.checks.clone());
    parts.push(VerificationReport::check("u", sec.u == u, || "u differs".into()));
    parts.push(VerificationReport::check("v", sec.v == v, || "v differs".into()));
    Ok(VerificationReport::all("section", parts))
}

fn criterion_5() -> Result<Outcome> {
    let rep = section_matches()?;
    let mut name = "lifted pair sums to the closed-form (u, v) over Q(7^(1/4))(lambda) with zero residual".to_string();
    if let Some(w) = &rep.witness {
        name = format!("{name} ({w})");
    }
    Ok(Outcome::from_parts(vec![part(name, rep.pass)]))
}

fn criterion_6() -> Result<Outcome> {
    let mut parts = Vec::new();
    for s in ["cover", "chain", "curves"] {
        parts.extend(from_reports(&run_suite(s).expect("known suite")));
    }
    Ok(Outcome::from_parts(parts))
}

fn criterion_7() -> Result<Outcome> {
    let n = lattice_invariants(&GramLattice::picard_generic())?;
    let t = lattice_invariants(&GramLattice::transcendental_generic())?;
    let rank4 = rank4_classification_check(4)?;
    let mut parts = vec![
        part(
            format!("N: rank {}, signature {:?}, ell {}, delta {:?}", n.rank, n.signature, n.ell, n.delta),
            n.rank == 18 && n.signature == (1, 17) && n.ell == 4 && n.delta == Some(1),
        ),
        part(format!("|det N| = {}", n.determinant.magnitude()), n.determinant.magnitude() == BigInt::from(16).magnitude()),
        part(
            format!("T: signature {:?}, ell {}, 2-elementary {}", t.signature, t.ell, t.two_elementary),
            t.signature == (2, 2) && t.ell == 4 && t.two_elementary,
        ),
    ];
    let extra = rank4.solutions.iter().filter(|s| !rank4.expected.contains(&s.params)).count();
    parts.push(part(
        format!(
            "rank four search within bound 4 returns exactly b = c = 0, nm = -1 ({} solutions, {extra} others)",
            rank4.solutions.len()
        ),
        rank4.report.pass,
    ));
    Ok(Outcome::from_parts(parts))
}

fn criterion_8() -> Result<Outcome> {
    let mut bad = Vec::new();
    for n in (1..=100i64).filter(|n| n % 4 != 2) {
        match tn_search(n)? {
            TnResult::Realized { vector, .. } => {
                if vector.minor_gcd() != 1 || tn_gram(&vector).gram != vec![vec![2 * n, 0], vec![0, 2 * n]] {
                    bad.push(n);
                }
            }
            TnResult::Obstructed { .. } => bad.push(n),
        }
    }
    let ev = obstruction_evidence(14, 12);
    let obstructed = [2i64, 6, 10, 14].iter().all(|&n| {
        let transcript = matches!(tn_search(n), Ok(TnResult::Obstructed { ref transcript }) if transcript.len() > 2);
        let search = ev.iter().any(|&(m, total, prim)| m == n && total > 0 && prim == 0);
        transcript && search
    });
    let instances = [1i64, 3, 4, 7].iter().all(|&n| matches!(tn_search(n), Ok(TnResult::Realized { .. })));
    let km = kummer_tn(1)?;
    let kummer = km.gram == vec![vec![4, 0], vec![0, 4]] && matches!(tn_search(2)?, TnResult::Obstructed { .. });
    Ok(Outcome::from_parts(vec![
        part(format!("realized for all n <= 100, n != 2 mod 4 (failures {bad:?})"), bad.is_empty()),
        part("n = 2, 6, 10, 14 obstructed: transcript and no primitive vector with |a_i| <= 12", obstructed),
        part("n = 1, 3, 4, 7 realized", instances),
        part("diag(4, 4) of Km(E x E) is not a T_n", kummer),
    ]))
}

fn criterion_9() -> Result<Outcome> {
    let mut parts = from_reports(&fricke_checks()?);
    parts.extend(from_reports(&[cayley_round_trips(100, 2024)?]));
    Ok(Outcome::from_parts(parts))
}

fn criterion_10() -> Result<Outcome> {
    let (pr, c) = period_ratio_rational([&rat(1, 1), &rat(0, 1), &rat(-1, 1)], 128)?;
    let i = Complex::new(c.int(0), c.int(1));
    let d = distance(&pr.tau, &i, &c);
    let j = CubicModel::from_curve(&e_beta(rat(7, 9)))?.j_invariant()?;
    let (pe, ce) = e_beta_period(&rat(7, 9), 128)?;
    let verdict = cm_isogeny_check(&pe.tau, 10, &ce)?;
    Ok(Outcome::from_parts(vec![
        part(format!("|tau - i| = {d:.1e} at 128 bits"), d < 1e-12),
        part(format!("j(E_beta) = {j} exactly"), j == rat(1728, 1)),
        part(format!("{verdict:?}"), matches!(verdict, CmVerdict::IsogenousToE { conductor: 1, .. })),
    ]))
}

fn run_property<S: Strategy>(
    name: &str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> std::result::Result<(), proptest::test_runner::TestCaseError>,
) -> (String, bool) {
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    match runner.run(&strategy, test) {
        Ok(()) => part(format!("{name}: {cases} cases"), true),
        Err(e) => part(format!("{name}: {e}"), false),
    }
}

fn criterion_11() -> Result<Outcome> {
    let cases = 64;
    Ok(Outcome::from_parts(vec![
        run_property("squarefree round trip", cases, (small_qpoly(3), small_qpoly(2), small_qpoly(2)), |(f, g, h)| {
            squarefree_round_trip(&f, &g, &h)
        }),
        run_property("quotient reduction", cases, (terms(), terms()), |(a, b)| quotient_reduce(&a, &b)),
        run_property("twist invariance", cases, (twist_minimal(), multiplier()), |(f, g)| twist_invariance(&f, &g)),
        run_property("ec_add associativity", cases, (point(), point(), point()), |(p, q, r)| {
            ec_add_associative(&p, &q, &r)
        }),
        run_property("fourth power test under r -> (ar+b)/(cr+d)", cases, (curve_panel(), mobius()), |(p, m)| {
            fourth_power_reparametrization(&p, &m)
        }),
    ]))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Result<Outcome>); 11] = [
        (1, "fiber table", criterion_1),
        (2, "degenerations", criterion_2),
        (3, "Picard bounds", criterion_3),
        (4, "splitting tests", criterion_4),
        (5, "section construction", criterion_5),
        (6, "symbolic identities", criterion_6),
        (7, "lattice invariants", criterion_7),
        (8, "T_n realization", criterion_8),
        (9, "modular groups", criterion_9),
        (10, "numeric channel", criterion_10),
        (11, "property suites", criterion_11),
    ];
    let mut unexpected = Vec::new();
    for (id, name, run) in criteria {
        let outcome = run().unwrap_or_else(|e| Outcome { pass: false, detail: format!("error: {e}") });
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        let known = KNOWN_FAILURES.contains(&id);
        let tag = if known && !outcome.pass { " [known failure]" } else { "" };
        println!("{status} criterion {id:>2} ({name}){tag}: {}", outcome.detail);
        if outcome.pass == known {
            unexpected.push(id);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: outcomes match expectations (known failures: {KNOWN_FAILURES:?})");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
