//! One function per subcommand; each returns a [`Report`].

use std::path::Path;

use k3_algebra::{json::rational_to_json, parse_rational, rat, Rational};
use k3_quartic::covers::{component_images, fourth_power_test, Parametrization};
use k3_quartic::curves::{e_beta, CubicModel};
use k3_quartic::fibration::{
    classify_fibers, generic_family, parity_refine, rational_family, shioda_tate_bound, twist_minimize,
};
use k3_quartic::lattices::{lattice_invariants as invariants, obstruction_evidence, tn_gram, tn_search, GramLattice, TnResult};
use k3_quartic::moduli::{fricke, l_matrix, l_prime, period_point, t_matrix, upsilon_l, Cyclotomic8};
use k3_quartic::numeric::{cm_isogeny_check, e_beta_period, j_numeric};
use k3_quartic::quartic::{
    build_quartic, build_quartic_value, pencil_substitution_check, singular_points, stability, verify_ordinary_nodes,
    AlphaValue, Stability,
};
use k3_quartic::suite::{run_all, run_suite, special_alpha, SUITES};
use k3_quartic::VerificationReport;
use serde_json::{json, Value};

use crate::report::{CliError, Report};

fn parse_alpha(s: &str) -> Result<AlphaValue, CliError> {
    AlphaValue::parse(s).map_err(|e| CliError::Usage(format!("cannot parse alpha {s:?}: {e}")))
}

fn parse_q(what: &str, s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Usage(format!("cannot parse {what} {s:?}: {e}")))
}

fn bound_json(bound: u32, mw_rank: u32) -> Value {
    json!({
        "mw_rank": mw_rank,
        "shioda_tate_bound": bound,
        "parity_refined": parity_refine(bound).ok(),
    })
}

pub fn analyze(alpha: &str, mw_rank: u32) -> Result<Report, CliError> {
    let a = parse_alpha(alpha)?;
    let st = stability(&a);
    let nodes = singular_points(&a);
    let fam = build_quartic_value(&a);
    let mut ledger = vec![fam.factor_check()];
    let mut results = json!({
        "alpha": a.to_string(),
        "stability": st.to_json(),
        "nodes": nodes.to_json(),
    });
    let fibration = match (&a, &st) {
        (AlphaValue::Finite(q), Stability::Stable) => {
            ledger.push(verify_ordinary_nodes(q)?);
            ledger.push(pencil_substitution_check(q.clone(), &rat(1, 2)));
            let cfg = classify_fibers(&rational_family(q))?;
            ledger.push(VerificationReport::check("Euler numbers sum to 24", cfg.total_euler == 24, || {
                format!("total {}", cfg.total_euler)
            }));
            let mut fib = cfg.to_json("lambda", &[]);
            fib["picard_bound"] = bound_json(shioda_tate_bound(&cfg, mw_rank), mw_rank);
            if *q == special_alpha() {
                // The explicit section gives Mordell-Weil rank at least 1.
                fib["with_known_section"] = bound_json(shioda_tate_bound(&cfg, mw_rank.max(1)), mw_rank.max(1));
            }
            fib
        }
        _ => json!({"status": "skipped", "reason": "the quartic is not stable"}),
    };
    results["fibration"] = fibration;
    Ok(Report::new(json!({"alpha": alpha, "mw_rank": mw_rank}), results, ledger))
}

pub fn fibers(alpha: Option<&str>, mw_rank: u32) -> Result<Report, CliError> {
    let Some(alpha) = alpha else {
        let cfg = classify_fibers(&generic_family())?;
        let mut table = cfg.to_json("lambda", &["alpha"]);
        table["picard_bound"] = bound_json(shioda_tate_bound(&cfg, mw_rank), mw_rank);
        let ledger = vec![VerificationReport::check("Euler numbers sum to 24", cfg.total_euler == 24, || {
            format!("total {}", cfg.total_euler)
        })];
        return Ok(Report::new(json!({"alpha": "generic", "mw_rank": mw_rank}), table, ledger));
    };
    let a = parse_alpha(alpha)?;
    let AlphaValue::Finite(q) = &a else {
        return Err(CliError::Usage("the fibration needs a finite alpha".into()));
    };
    let f = rational_family(q);
    let twist = twist_minimize(&f)?;
    let cfg = classify_fibers(&twist.reduced)?;
    let mut table = cfg.to_json("lambda", &[]);
    table["picard_bound"] = bound_json(shioda_tate_bound(&cfg, mw_rank), mw_rank);
    table["twist_multiplier"] = json!(twist.multiplier.render("lambda", &[]));
    let mut ledger = Vec::new();
    if stability(&a) == Stability::Stable {
        ledger.push(VerificationReport::check("Euler numbers sum to 24", cfg.total_euler == 24, || {
            format!("total {}", cfg.total_euler)
        }));
    }
    Ok(Report::new(json!({"alpha": alpha, "mw_rank": mw_rank}), table, ledger))
}

pub fn lattice_invariants(preset: &str) -> Result<Report, CliError> {
    let l = GramLattice::parse(preset).map_err(|e| CliError::Usage(e.to_string()))?;
    let inv = invariants(&l)?;
    let results = json!({"lattice": l.to_string(), "invariants": inv.to_json()});
    Ok(Report::new(json!({"preset": preset}), results, Vec::new()))
}

pub fn lattice_tn(n: i64) -> Result<Report, CliError> {
    if n < 1 {
        return Err(CliError::Usage("n must be positive".into()));
    }
    let res = tn_search(n)?;
    let mut ledger = Vec::new();
    let mut results = res.to_json(n);
    match &res {
        TnResult::Realized { vector, .. } => {
            let gram = tn_gram(vector).gram;
            ledger.push(VerificationReport::check("form value equals n", vector.n() == n, || format!("{}", vector.n())));
            ledger.push(VerificationReport::check("minors of (a, Ja) have gcd 1", vector.minor_gcd() == 1, || {
                format!("gcd {}", vector.minor_gcd())
            }));
            ledger.push(VerificationReport::check("span minors have gcd 1", vector.span_minor_gcd() == 1, || {
                format!("gcd {}", vector.span_minor_gcd())
            }));
            ledger.push(VerificationReport::check("Gram is diag(2n, 2n)", gram == vec![vec![2 * n, 0], vec![0, 2 * n]], || {
                format!("{gram:?}")
            }));
        }
        TnResult::Obstructed { .. } => {
            let bound = 12;
            let (total, primitive) = obstruction_evidence(n, bound)
                .into_iter()
                .find(|e| e.0 == n)
                .map(|e| (e.1, e.2))
                .unwrap_or((0, 0));
            results["search"] = json!({"bound": bound, "vectors": total, "primitive": primitive});
            ledger.push(VerificationReport::check(
                format!("no primitive vector with |a_i| <= {bound}"),
                primitive == 0,
                || format!("{primitive} primitive vectors"),
            ));
        }
    }
    Ok(Report::new(json!({"n": n}), results, ledger))
}

pub fn split(alpha: &str, param: &Path) -> Result<Report, CliError> {
    let a = parse_alpha(alpha)?;
    let text = std::fs::read_to_string(param).map_err(|e| CliError::Io(format!("cannot read {}: {e}", param.display())))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("invalid JSON in {}: {e}", param.display())))?;
    let p = Parametrization::from_json(&value).map_err(|e| CliError::Usage(e.to_string()))?;
    let fam = build_quartic_value(&a);
    let rep = fourth_power_test(&fam.equation, &p)?;
    let mut results = rep.to_json();
    if let AlphaValue::Finite(q) = &a {
        let [c, l, m] = component_images(&build_quartic(q.clone()), &p)?;
        results["components"] = json!({"C": c.render("r", &[]), "L": l.render("r", &[]), "M": m.render("r", &[])});
    }
    Ok(Report::new(json!({"alpha": alpha, "param": p.to_json()}), results, Vec::new()))
}

pub fn cm(beta4: &str, precision: usize) -> Result<Report, CliError> {
    let b4 = parse_q("beta^4", beta4)?;
    if !(64..=4096).contains(&precision) {
        return Err(CliError::Usage("precision must lie in 64..=4096 bits".into()));
    }
    let j_exact = CubicModel::from_curve(&e_beta(b4.clone()))?.j_invariant()?;
    let (pr, c) = e_beta_period(&b4, precision)?;
    let j = j_numeric(&pr.reduced, &c)?;
    let verdict = cm_isogeny_check(&pr.tau, 10, &c)?;
    let (jr, ji) = j.to_f64_pair(&c);
    let exact = k3_quartic::numeric::rational_to_f64(&j_exact);
    let scale = exact.abs().max(1.0);
    let err = ((jr - exact).powi(2) + ji.powi(2)).sqrt() / scale;
    let tol = 1e-9;
    let results = json!({
        "period": pr.to_json(&c),
        "j_exact": rational_to_json(&j_exact),
        "j_numeric": {"re": j.re.to_string(), "im": j.im.to_string(), "approx": [jr, ji]},
        "j_relative_error": err,
        "cm": verdict.to_json(),
        "max_conductor": 10,
    });
    let ledger = vec![VerificationReport::check("numeric j agrees with the exact j", err < tol, || {
        format!("relative error {err:e}")
    })
    .with_note("CM detection is numeric evidence, not a proof")];
    Ok(Report::new(json!({"beta4": beta4, "precision": precision}), results, ledger))
}

pub fn moduli(check: &str) -> Result<Report, CliError> {
    let names: &[&str] = match check {
        "all" => &["fricke", "cayley", "period"],
        "fricke" => &["fricke"],
        "cayley" => &["cayley"],
        "period" => &["period"],
        other => return Err(CliError::Usage(format!("unknown check {other:?}"))),
    };
    let f = Cyclotomic8::new();
    let mut results = json!({});
    let mut ledger = Vec::new();
    for &name in names {
        ledger.extend(run_suite(name).expect("known suite"));
        match name {
            "fricke" => {
                results["matrices"] = json!({
                    "T": t_matrix().to_json(),
                    "F": fricke(&f).to_json(),
                    "L": l_matrix(&f).to_json(),
                    "L'": l_prime(&f).to_json(),
                    "Upsilon(L)": upsilon_l(&f).to_json(),
                });
            }
            "cayley" => results["cayley"] = json!({"samples": 100, "seed": 2024}),
            _ => {
                let p = period_point(&f.q(2, 1), &f.i())?;
                results["period_sample"] = json!({"z2": "2", "z4": "i", "point": p.to_json()});
            }
        }
    }
    Ok(Report::new(json!({"check": check}), results, ledger))
}

pub fn verify(suite: &str) -> Result<Report, CliError> {
    let ledger = if suite == "all" {
        run_all()
    } else {
        run_suite(suite).ok_or_else(|| {
            CliError::Usage(format!("unknown suite {suite:?}; expected all or one of {}", SUITES.join(", ")))
        })?
    };
    let passed = ledger.iter().filter(|r| r.pass).count();
    let results = json!({
        "suites": if suite == "all" { SUITES.to_vec() } else { vec![suite] },
        "entries": ledger.len(),
        "passed": passed,
        "failed": ledger.len() - passed,
    });
    Ok(Report::new(json!({"suite": suite}), results, ledger))
}
