//! Named bundles of verification checks, run in a fixed order. Each entry
//! is a [`VerificationReport`]; an internal error becomes a failing entry
//! whose witness is the error message.

use k3_algebra::{rat, Field, Poly, QFunc, Rational, RationalFunction};
use num_traits::{One, Zero};

use crate::covers::{
    closed_form_section, component_images, cover_map_data, fourth_power_test, lift_two_section, psi_curve,
    sum_sections, verify_cover_map, zeta_curve, Parametrization, SplitVerdict,
};
use crate::curves::{
    e_beta, e_order_four, e_prime_order_four, e_prime_to_e, hyperelliptic_involution, iota, iota_prime,
    pullback_differential, quotient_map_f, verify_involution, verify_map, verify_order, CubicModel,
};
use crate::error::Result;
use crate::fibration::{
    classify_fibers, cover_beta, degeneration_model, eighth_root_automorphism, form_scaling_order,
    generic_family, parity_refine, rational_family, shioda_tate_bound, weierstrass_reduce, DegenerationKind,
    FiberLocation, KodairaType,
};
use crate::fields::{cyclotomic8, fourth_root_of, gaussian, NumberField};
use crate::lattices::{
    block_determinant_identity, kummer_tn, lattice_invariants, obstruction_evidence, rank4_classification_check,
    tn_gram, tn_search, GramLattice, TnResult,
};
use crate::moduli::{cayley_round_trips, fricke_checks, gaussian_form_check, period_point, Cyclotomic8};
use crate::numeric::{cm_isogeny_check, distance, e_beta_period, period_ratio_rational, CmVerdict, Complex};
use crate::quartic::{build_quartic, pencil_substitution_check, stability, verify_ordinary_nodes, AlphaValue, Stability, UnstableReason};
use crate::report::VerificationReport;

/// Suite names in ledger order.
pub const SUITES: &[&str] = &[
    "cover",
    "chain",
    "curves",
    "fibers",
    "degenerations",
    "splitting",
    "section",
    "lattices",
    "tn",
    "fricke",
    "cayley",
    "period",
    "numeric",
];

/// The value `α = 81/49` carrying the explicit section.
pub fn special_alpha() -> Rational {
    rat(81, 49)
}

fn guard(name: &str, f: impl FnOnce() -> Result<VerificationReport>) -> VerificationReport {
    f().unwrap_or_else(|e| VerificationReport::fail(name, format!("error: {e}")))
}

fn guard_many(name: &str, f: impl FnOnce() -> Result<Vec<VerificationReport>>) -> Vec<VerificationReport> {
    f().unwrap_or_else(|e| vec![VerificationReport::fail(name, format!("error: {e}"))])
}

/// Runs one named suite. Returns `None` for an unknown name.
pub fn run_suite(name: &str) -> Option<Vec<VerificationReport>> {
    let out = match name {
        "cover" => cover_suite(),
        "chain" => vec![guard("Weierstrass chain", chain_check)],
        "curves" => guard_many("curve maps", curve_checks),
        "fibers" => fiber_suite(),
        "degenerations" => guard_many("degenerations", degeneration_checks),
        "splitting" => vec![
            guard("splitting of psi", || splitting_check("psi", &psi_curve(), &[&[-1, 1], &[0, 1], &[3, -2, 3]])),
            guard("splitting of zeta", || splitting_check("zeta", &zeta_curve(), &[&[0, 1], &[-9, 1], &[3, 1]])),
        ],
        "section" => vec![guard("section over Q(7^(1/4))(lambda)", section_check)],
        "lattices" => guard_many("lattice invariants", lattice_checks),
        "tn" => tn_checks(),
        "fricke" => guard_many("Fricke checks", fricke_checks),
        "cayley" => vec![guard("Cayley round trip", || cayley_round_trips(100, 2024))],
        "period" => vec![guard("period points", period_checks), gaussian_form_check(2)],
        "numeric" => vec![guard("lemniscatic period ratio", lemniscatic_check), guard("E_beta at beta^4 = 7/9", e_beta_cm_check)],
        _ => return None,
    };
    Some(out)
}

/// Every suite in [`SUITES`] order. Suites run on separate threads; the
/// output order does not depend on scheduling.
pub fn run_all() -> Vec<VerificationReport> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = SUITES
            .iter()
            .map(|&name| {
                std::thread::Builder::new()
                    .stack_size(64 << 20)
                    .spawn_scoped(scope, move || run_suite(name).expect("known suite"))
                    .map_err(|_| name)
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| match h {
                Ok(h) => h
                    .join()
                    .unwrap_or_else(|_| vec![VerificationReport::fail("suite", "worker thread panicked")]),
                // Could not spawn: run inline.
                Err(name) => run_suite(name).expect("known suite"),
            })
            .collect()
    })
}

fn cover_suite() -> Vec<VerificationReport> {
    type F = RationalFunction<NumberField>;
    let cover = guard("cover map identity", || {
        let i = F::constant(NumberField::generator(&gaussian()));
        let s = F::one() + i.clone();
        verify_cover_map(F::var(), &i, &s)
    });
    let pencil = pencil_substitution_check(QFunc::var(), &rat(1, 2));
    vec![cover, pencil]
}

fn chain_check() -> Result<VerificationReport> {
    let red = weierstrass_reduce(&cover_beta(QFunc::var()))?;
    let mut parts = red.fibration.provenance.clone();
    let f = red.fibration.f.clone();
    parts.push(VerificationReport::check("chain ends at lambda^3 (lambda^2 + 2 lambda + alpha)^2", f == generic_family(), || {
        format!("f = {}", f.render("lambda", &["alpha"]))
    }));
    Ok(VerificationReport::all("Weierstrass chain from the cover to v^2 = u^3 - f(lambda) u", parts))
}

fn curve_checks() -> Result<Vec<VerificationReport>> {
    type F = RationalFunction<NumberField>;
    let ctx = cyclotomic8();
    let z = NumberField::generator(&ctx);
    let i_nf = z.pow(2);
    let s2 = z.clone() - z.pow(3);
    let i = F::constant(i_nf.clone());
    let b4 = F::var().pow(4);

    let f = quotient_map_f(b4.clone());
    let mut map_f = verify_map(&f)?;
    map_f.name = "quotient map f: B_beta -> E_beta".into();

    let io = iota(b4.clone());
    let mut inv = verify_involution(&io)?;
    let fi = io.then(&f)?;
    let twisted = f.then(&hyperelliptic_involution(&f.target))?;
    let fi_ok = fi.equals(&twisted)?;
    inv = VerificationReport::all(
        "involution iota with f o iota = (u, -v)",
        vec![inv, VerificationReport::check("f o iota = (u, -v)", fi_ok, || "mismatch".into())],
    );

    let ip = iota_prime(b4, &i);
    let sq = ip.then(&ip)?;
    let sq_ok = sq.equals(&hyperelliptic_involution(&ip.source))?;
    let order = VerificationReport::all(
        "iota' has order 4 and squares to the hyperelliptic involution",
        vec![verify_order(&ip, 4)?, VerificationReport::check("iota'^2", sq_ok, || "not the hyperelliptic involution".into())],
    );

    let c1 = pullback_differential(&f)?;
    let c2 = pullback_differential(&ip.then(&f)?)?;
    let det = c1[0].clone() * c2[1].clone() - c1[1].clone() * c2[0].clone();
    let diff = VerificationReport::check("differentials of f and f o iota' are independent", !det.is_zero(), || {
        "determinant is zero".into()
    })
    .with_note(format!("determinant {}", det.render(&["beta"])));

    let iso = e_prime_to_e(&s2);
    let mut iso_rep = verify_map(&iso)?;
    iso_rep.name = "isomorphism E' -> E".into();
    let a = e_order_four(&i_nf);
    let ap = e_prime_order_four(&i_nf);
    let compat = ap.then(&iso)?.equals(&iso.then(&a)?)?;
    let auto = VerificationReport::all(
        "order 4 automorphisms of E and E' intertwined by the isomorphism",
        vec![
            verify_order(&a, 4)?,
            verify_order(&ap, 4)?,
            VerificationReport::check("intertwining", compat, || "the maps do not commute".into()),
        ],
    );
    Ok(vec![map_f, inv, order, diff, iso_rep, auto])
}

fn fiber_suite() -> Vec<VerificationReport> {
    vec![
        guard("stability", stability_check),
        guard("ordinary nodes", || verify_ordinary_nodes(&special_alpha())),
        guard("generic fiber table", generic_table_check),
        guard("Picard bounds", picard_bound_check),
    ]
}

fn stability_check() -> Result<VerificationReport> {
    let table = [
        (AlphaValue::Finite(special_alpha()), Stability::Stable),
        (AlphaValue::Finite(rat(5, 1)), Stability::Stable),
        (AlphaValue::Finite(rat(1, 1)), Stability::Unstable(UnstableReason::Tacnode)),
        (AlphaValue::Finite(rat(0, 1)), Stability::Unstable(UnstableReason::TriplePoint)),
        (AlphaValue::Infinity, Stability::Unstable(UnstableReason::TangentAtP1)),
    ];
    let bad: Vec<String> = table
        .iter()
        .filter(|(a, s)| stability(a) != *s)
        .map(|(a, s)| format!("{a:?}: expected {s:?}, got {:?}", stability(a)))
        .collect();
    Ok(VerificationReport::check("stability of alpha = 81/49, 5, 1, 0, inf", bad.is_empty(), || bad.join("; ")))
}

fn generic_table_check() -> Result<VerificationReport> {
    let cfg = classify_fibers(&generic_family())?;
    let g = Poly::from_coeffs(vec![QFunc::var(), QFunc::from_int(2), QFunc::one()]);
    let expected = [
        (KodairaType::I0Star, FiberLocation::Finite(g), 2),
        (KodairaType::IIIStar, FiberLocation::Finite(Poly::x()), 1),
        (KodairaType::III, FiberLocation::Infinity, 1),
    ];
    let got: Vec<_> = cfg.fibers.iter().map(|f| (f.kind, f.location.clone(), f.places)).collect();
    let ok = got.len() == expected.len() && expected.iter().all(|e| got.contains(e)) && cfg.total_euler == 24;
    Ok(VerificationReport::check("fibers III* at 0, I0* at lambda^2 + 2 lambda + alpha, III at inf", ok, || {
        format!("{got:?}, euler {}", cfg.total_euler)
    }))
}

fn picard_bound_check() -> Result<VerificationReport> {
    let generic = shioda_tate_bound(&classify_fibers(&generic_family())?, 0);
    let special = classify_fibers(&rational_family(&special_alpha()))?;
    let with_section = shioda_tate_bound(&special, 1);
    let refined = parity_refine(with_section)?;
    let ok = (generic, with_section, refined) == (18, 19, 20) && special.type_profile().contains(&(KodairaType::I0Star, 2));
    Ok(VerificationReport::check("Picard bounds 18 (generic), 19 (alpha = 81/49, one section), 20 after parity", ok, || {
        format!("got {generic}, {with_section}, {refined}")
    }))
}

fn degeneration_checks() -> Result<Vec<VerificationReport>> {
    let inf = degeneration_model(DegenerationKind::AtInfinity)?;
    let inf_cfg = classify_fibers(&inf.at_beta(&Rational::zero())?)?;
    let generic = classify_fibers(&generic_family())?;
    let inf_rep = VerificationReport::all(
        "degeneration at alpha = inf, beta = 0",
        vec![
            VerificationReport::all("rescaling", inf.fibration.provenance.clone()),
            VerificationReport::check(
                "fiber types match the generic table",
                inf_cfg.type_profile() == generic.type_profile() && inf_cfg.total_euler == 24,
                || format!("{:?}", inf_cfg.type_profile()),
            ),
        ],
    );
    let zero = degeneration_model(DegenerationKind::AtZero)?;
    let zero_cfg = classify_fibers(&zero.at_beta(&Rational::zero())?)?;
    let profile = zero_cfg.type_profile();
    let want = vec![(KodairaType::I0Star, 1), (KodairaType::IIIStar, 2)];
    let mut sorted = profile.clone();
    sorted.sort_by_key(|(t, _)| format!("{t:?}"));
    let zero_rep = VerificationReport::all(
        "degeneration at alpha = 0, beta = 0",
        vec![
            VerificationReport::all("rescaling", zero.fibration.provenance.clone()),
            VerificationReport::check(
                "fibers III*, I0*, III* with Euler 24 and bound 20",
                sorted == want && zero_cfg.total_euler == 24 && shioda_tate_bound(&zero_cfg, 0) == 20,
                || format!("{profile:?}, euler {}", zero_cfg.total_euler),
            ),
        ],
    );
    let (auto, fib) = eighth_root_automorphism();
    let s = form_scaling_order(&auto, &fib)?;
    let phi = VerificationReport::check("automorphism of the beta = 0 model scales the 2-form by an 8th root of unity", s.order == Some(8), || {
        format!("order {:?}", s.order)
    });
    Ok(vec![inf_rep, zero_rep, phi])
}

fn splitting_check(label: &str, p: &Parametrization, factors: &[&[i64]]) -> Result<VerificationReport> {
    let fam = build_quartic(special_alpha());
    let rep = fourth_power_test(&fam.equation, p)?;
    let mut parts = vec![VerificationReport::check("verdict", rep.verdict == SplitVerdict::Splits, || format!("{:?}", rep.verdict))];
    for cs in factors {
        let f = Poly::from_ints(cs);
        let m = rep.multiplicity_of(&f);
        parts.push(VerificationReport::check(format!("factor {f}"), m == Some(4), || format!("multiplicity {m:?}")));
    }
    parts.push(VerificationReport::check("no other factors", rep.factors.len() == factors.len(), || {
        format!("{} factors", rep.factors.len())
    }));
    let [c, l, m] = component_images(&fam, p)?;
    let note = format!("components: {c}; {l}; {m}");
    Ok(VerificationReport::all(format!("F o {label} is a fourth power times a constant"), parts).with_note(note))
}

fn section_check() -> Result<VerificationReport> {
    let ctx = fourth_root_of(7, "t")?;
    let t = NumberField::generator(&ctx);
    let root = NumberField::from_rational(&rat(-18, 49)) * t.pow(3);
    let lift = lift_two_section(&special_alpha(), &psi_curve(), &root)?;
    let sec = sum_sections(&lift)?;
    let (u, v) = closed_form_section(&t)?;
    let mut parts = lift.checks.clone();
    parts.extend(sec.checks.clone());
    parts.push(VerificationReport::check("u matches the closed form", sec.u == u, || sec.u.render(&["lambda"])));
    parts.push(VerificationReport::check("v matches the closed form", sec.v == v, || sec.v.render(&["lambda"])));
    Ok(VerificationReport::all("section of v^2 = u^3 - f(lambda) u at alpha = 81/49", parts))
}

fn lattice_checks() -> Result<Vec<VerificationReport>> {
    let n = lattice_invariants(&GramLattice::picard_generic())?;
    let n_ok = n.rank == 18
        && n.signature == (1, 17)
        && n.ell == 4
        && n.delta == Some(1)
        && n.determinant.magnitude() == &16u32.into();
    let n_rep = VerificationReport::check("N = U + E7 + E7 + A1(-1) + A1(-1)", n_ok, || n.to_json().to_string());
    let t = lattice_invariants(&GramLattice::transcendental_generic())?;
    let t_ok = t.signature == (2, 2) && t.ell == 4 && t.two_elementary;
    let t_rep = VerificationReport::check("T = diag(2, 2, -2, -2)", t_ok, || t.to_json().to_string());

    let rank4 = rank4_classification_check(4)?;
    let all_two_el = rank4.solutions.iter().all(|s| s.two_elementary);
    let contains = rank4.expected.iter().all(|e| rank4.solutions.iter().any(|s| s.params == *e));
    let weaker = VerificationReport::check(
        "rank four J-invariant forms with |det| = 16 are 2-elementary of length 4",
        all_two_el && contains && block_determinant_identity(4),
        || "a solution is not 2-elementary, or the diagonal family is missing".into(),
    )
    .with_note(format!("{} solutions within bound {}", rank4.solutions.len(), rank4.bound));
    Ok(vec![n_rep, t_rep, rank4.report, weaker])
}

fn tn_checks() -> Vec<VerificationReport> {
    let realized = guard("T_n realizations", || {
        let mut bad = Vec::new();
        for n in 1..=100i64 {
            match tn_search(n)? {
                TnResult::Realized { vector, .. } => {
                    let g = tn_gram(&vector).gram;
                    if n % 4 == 2 || vector.minor_gcd() != 1 || g != vec![vec![2 * n, 0], vec![0, 2 * n]] {
                        bad.push(n);
                    }
                }
                TnResult::Obstructed { .. } if n % 4 != 2 => bad.push(n),
                TnResult::Obstructed { .. } => {}
            }
        }
        Ok(VerificationReport::check("T_n = diag(2n, 2n) realized for n <= 100, n != 2 mod 4", bad.is_empty(), || {
            format!("failures at {bad:?}")
        }))
    });
    let obstructed = guard("T_n obstructions", || {
        let ev = obstruction_evidence(14, 12);
        let ok = ev.len() == 4 && ev.iter().all(|&(_, total, prim)| total > 0 && prim == 0);
        let transcripts = [2, 6, 10, 14]
            .iter()
            .all(|&n| matches!(tn_search(n), Ok(TnResult::Obstructed { ref transcript }) if transcript.len() > 2));
        Ok(VerificationReport::check("T_n not realized for n = 2, 6, 10, 14", ok && transcripts, || format!("{ev:?}"))
            .with_note("no primitive vector with |a_i| <= 12 for any of them"))
    });
    let kummer = guard("Kummer lattice", || {
        let km = kummer_tn(1)?;
        let not_realized = matches!(tn_search(2)?, TnResult::Obstructed { .. });
        Ok(VerificationReport::check(
            "T of Km(E x E) = diag(4, 4) is not of the form T_n",
            km.gram == vec![vec![4, 0], vec![0, 4]] && not_realized,
            || "diag(4, 4) is realized".into(),
        ))
    });
    vec![realized, obstructed, kummer]
}

fn period_checks() -> Result<VerificationReport> {
    let f = Cyclotomic8::new();
    let one = NumberField::one();
    let samples = [
        (one.clone(), NumberField::zero(), true),
        (one.clone(), one.clone(), false),
        (NumberField::from_int(2), f.i(), true),
        (one, f.sqrt2(), false),
    ];
    let mut parts = Vec::new();
    for (z2, z4, inside) in samples {
        let p = period_point(&z2, &z4)?;
        parts.extend(p.checks);
        parts.push(VerificationReport::check("position relative to the ball", p.inside == inside, || {
            format!("w = {}", p.w)
        }));
    }
    Ok(VerificationReport::all("period points (i z2, z2, i z4, z4)", parts))
}

fn lemniscatic_check() -> Result<VerificationReport> {
    let (pr, c) = period_ratio_rational([&rat(1, 1), &rat(0, 1), &rat(-1, 1)], 128)?;
    let i = Complex::new(c.int(0), c.int(1));
    let d = distance(&pr.tau, &i, &c);
    Ok(VerificationReport::check("tau of y^2 = x^3 - x is i to 1e-12 at 128 bits", d < 1e-12, || format!("|tau - i| = {d:e}")))
}

fn e_beta_cm_check() -> Result<VerificationReport> {
    let b4 = rat(7, 9);
    let j = CubicModel::from_curve(&e_beta(b4.clone()))?.j_invariant()?;
    let (pr, c) = e_beta_period(&b4, 128)?;
    let verdict = cm_isogeny_check(&pr.tau, 10, &c)?;
    let ok = j == rat(1728, 1) && matches!(verdict, CmVerdict::IsogenousToE { conductor: 1, .. });
    Ok(VerificationReport::check("j(E_beta) = 1728 and tau is in the class of i", ok, || format!("j = {j}, {verdict:?}")))
}

/// The cover data and the pencil identity specialized at `α`; used when
/// checking stability under specialization.
pub fn cover_at(alpha: &Rational) -> Result<VerificationReport> {
    let gi = gaussian();
    let i = NumberField::generator(&gi);
    let s = NumberField::one() + i.clone();
    cover_map_data(NumberField::from_rational(alpha), &i, &s)?;
    verify_cover_map(NumberField::from_rational(alpha), &i, &s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope").is_none());
    }

    #[test]
    fn small_suites_pass() {
        for s in ["cover", "chain", "fibers", "degenerations", "splitting", "section", "period", "numeric"] {
            for r in run_suite(s).unwrap() {
                assert!(r.pass, "{s}: {r:?}");
            }
        }
    }

    #[test]
    fn cover_specializes() {
        for a in [rat(81, 49), rat(5, 1), rat(-3, 1)] {
            assert!(cover_at(&a).unwrap().pass);
        }
    }
}
