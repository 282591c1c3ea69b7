//! Isotrivial `j = 1728` fibrations `v² = u³ - f(λ)u`: the Weierstrass
//! reduction of the cyclic-cover model, quartic twists, Kodaira fiber
//! tables, Shioda–Tate bounds and the two degenerations of the family.

use std::fmt;

use k3_algebra::{
    rat, substitute_fracs, Field, MultiFrac, MultiPoly, Poly, PolyRing, QuotientContext, Rational,
    RationalFunction,
};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{CoreError, Result};
use crate::fields::{cyclotomic8, NumberField};
use crate::report::VerificationReport;

/// `v² = u³ - f(λ)u`, with the checks that produced it.
#[derive(Clone, Debug)]
pub struct WeierstrassFibration<K> {
    pub f: Poly<K>,
    pub var: String,
    pub provenance: Vec<VerificationReport>,
}

impl<K: Field> WeierstrassFibration<K> {
    pub fn new(f: Poly<K>, var: impl Into<String>) -> Result<Self> {
        if f.is_zero() {
            return Err(CoreError::InvalidInput("f must be nonzero".into()));
        }
        Ok(WeierstrassFibration { f, var: var.into(), provenance: Vec::new() })
    }

    /// The equation `v² - u³ + f(t)u` in the ring `(u, v, t)`.
    pub fn equation(&self) -> MultiPoly<K> {
        weierstrass_equation(&PolyRing::new(&["u", "v", self.var.as_str()]), &self.f)
    }

    pub fn provenance_ok(&self) -> bool {
        self.provenance.iter().all(|r| r.pass)
    }
}

/// `v² - u³ + f(t)u` in a ring whose first three variables are `u, v, t`.
pub fn weierstrass_equation<K: Field>(ring: &PolyRing, f: &Poly<K>) -> MultiPoly<K> {
    let (u, v) = (ring.var::<K>(0), ring.var::<K>(1));
    let ft = ring.from_univariate(f, 2);
    &(&v.pow(2) - &u.pow(3)) + &(&ft * &u)
}

/// `f = reduced · multiplier⁴`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistRecord<K> {
    pub reduced: Poly<K>,
    pub multiplier: Poly<K>,
}

/// Removes fourth powers of factors: every root multiplicity of the
/// result lies in `{0, 1, 2, 3}`.
pub fn twist_minimize<K: Field>(f: &Poly<K>) -> Result<TwistRecord<K>> {
    if f.is_zero() {
        return Err(CoreError::InvalidInput("f must be nonzero".into()));
    }
    let d = f.squarefree_decomposition()?;
    let mut reduced = Poly::constant(d.constant.clone());
    let mut multiplier = Poly::one();
    for (p, e) in &d.factors {
        reduced = &reduced * &p.pow(e % 4);
        multiplier = &multiplier * &p.pow(e / 4);
    }
    Ok(TwistRecord { reduced, multiplier })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KodairaType {
    III,
    I0Star,
    IIIStar,
}

impl KodairaType {
    pub fn from_k(k: u32) -> Option<Self> {
        match k {
            1 => Some(KodairaType::III),
            2 => Some(KodairaType::I0Star),
            3 => Some(KodairaType::IIIStar),
            _ => None,
        }
    }

    pub fn euler(self) -> u32 {
        match self {
            KodairaType::III => 3,
            KodairaType::I0Star => 6,
            KodairaType::IIIStar => 9,
        }
    }

    pub fn components(self) -> u32 {
        match self {
            KodairaType::III => 2,
            KodairaType::I0Star => 5,
            KodairaType::IIIStar => 8,
        }
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KodairaType::III => "III",
            KodairaType::I0Star => "I0*",
            KodairaType::IIIStar => "III*",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FiberLocation<K> {
    /// The zeros of a squarefree factor; it accounts for `degree` fibers.
    Finite(Poly<K>),
    Infinity,
}

/// A fiber type at a location. A finite location of degree `d` stands for
/// `d` geometric fibers, recorded in `places`.
#[derive(Clone, Debug, PartialEq)]
pub struct KodairaFiber<K> {
    pub location: FiberLocation<K>,
    pub places: u32,
    pub k: u32,
    pub kind: KodairaType,
}

impl<K: Field> KodairaFiber<K> {
    fn new(location: FiberLocation<K>, places: u32, k: u32) -> Self {
        let kind = KodairaType::from_k(k).expect("k in 1..=3");
        KodairaFiber { location, places, k, kind }
    }

    pub fn euler(&self) -> u32 {
        self.kind.euler()
    }

    pub fn components(&self) -> u32 {
        self.kind.components()
    }

    pub fn location_string(&self, var: &str, inner: &[&str]) -> String {
        match &self.location {
            FiberLocation::Finite(p) => p.render(var, inner),
            FiberLocation::Infinity => "inf".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FiberConfiguration<K> {
    pub fibers: Vec<KodairaFiber<K>>,
    pub total_euler: u32,
    pub base: Poly<K>,
}

impl<K: Field> FiberConfiguration<K> {
    /// Sorted `(type, places)` pairs, ignoring locations.
    pub fn type_profile(&self) -> Vec<(KodairaType, u32)> {
        let mut out: Vec<(KodairaType, u32)> = Vec::new();
        for f in &self.fibers {
            match out.iter_mut().find(|(t, _)| *t == f.kind) {
                Some(e) => e.1 += f.places,
                None => out.push((f.kind, f.places)),
            }
        }
        out.sort_by_key(|(t, _)| t.euler());
        out
    }

    pub fn sum_k(&self) -> u32 {
        self.fibers.iter().map(|f| f.k * f.places).sum()
    }

    pub fn to_json(&self, var: &str, inner: &[&str]) -> Value {
        let rows: Vec<Value> = self
            .fibers
            .iter()
            .map(|f| {
                json!({
                    "location": f.location_string(var, inner),
                    "places": f.places,
                    "k": f.k,
                    "type": f.kind.to_string(),
                    "euler": f.euler(),
                    "components": f.components(),
                })
            })
            .collect();
        json!({
            "f": self.base.render(var, inner),
            "fibers": rows,
            "total_euler": self.total_euler,
        })
    }
}

/// Kodaira table of `v² = u³ - f u`. Finite locations are split into
/// rational linear factors when the field finds roots; the rest stays as
/// a squarefree factor counted by degree. The fiber at infinity has
/// `k = (-deg f) mod 4`.
pub fn classify_fibers<K: Field>(f: &Poly<K>) -> Result<FiberConfiguration<K>> {
    if f.is_zero() {
        return Err(CoreError::InvalidInput("f must be nonzero".into()));
    }
    let d = f.squarefree_decomposition()?;
    let mut fibers = Vec::new();
    for (p, e) in &d.factors {
        if *e >= 4 {
            return Err(CoreError::NotTwistMinimal { factor: p.render("t", &[]), multiplicity: *e });
        }
        for loc in split_places(p) {
            let places = loc.degree().unwrap_or(0) as u32;
            fibers.push(KodairaFiber::new(FiberLocation::Finite(loc), places, *e));
        }
    }
    let deg = f.degree().unwrap_or(0) as u32;
    let k_inf = (4 - deg % 4) % 4;
    if k_inf != 0 {
        fibers.push(KodairaFiber::new(FiberLocation::Infinity, 1, k_inf));
    }
    let total_euler = fibers.iter().map(|f| f.euler() * f.places).sum();
    Ok(FiberConfiguration { fibers, total_euler, base: f.clone() })
}

fn split_places<K: Field>(p: &Poly<K>) -> Vec<Poly<K>> {
    if p.degree() == Some(1) {
        return vec![p.monic()];
    }
    let (roots, rest) = p.split_linear();
    let mut out: Vec<Poly<K>> = roots.iter().map(Poly::linear_root).collect();
    if !rest.is_constant() {
        out.push(rest.monic());
    }
    out
}

/// `2 + Σ (m_v - 1) + rank`, each location weighted by its number of places.
pub fn shioda_tate_bound<K: Field>(cfg: &FiberConfiguration<K>, mw_rank: u32) -> u32 {
    2 + cfg.fibers.iter().map(|f| f.places * (f.components() - 1)).sum::<u32>() + mw_rank
}

/// Smallest even integer `≥ bound`, capped at 20.
pub fn parity_refine(bound: u32) -> Result<u32> {
    if bound > 20 {
        return Err(CoreError::InvalidInput(format!("Picard number bound {bound} exceeds 20")));
    }
    Ok((bound + bound % 2).min(20))
}

/// Checks that substituting `images` into `source` and multiplying by
/// `factor` gives `target` exactly: `factor · num = target · den`.
pub fn verify_substitution<K: Field>(
    name: &str,
    source: &MultiPoly<K>,
    images: &[MultiFrac<K>],
    factor: &MultiPoly<K>,
    target: &MultiPoly<K>,
) -> VerificationReport {
    match substitute_fracs(source, images) {
        Err(e) => VerificationReport::fail(name, e.to_string()),
        Ok(fr) => {
            let residual = &(factor * &fr.num) - &(target * &fr.den);
            VerificationReport::check(name, residual.is_zero(), || format!("residual {}", residual.render(&["a", "b"])))
        }
    }
}

fn frac<K: Field>(num: MultiPoly<K>, den: MultiPoly<K>) -> MultiFrac<K> {
    MultiFrac::new(num, den).expect("nonzero denominator")
}

/// Result of reducing `z₁² = βw⁴ + 1` to Weierstrass form.
#[derive(Clone, Debug)]
pub struct WeierstrassReduction<K: Field> {
    pub beta: RationalFunction<K>,
    /// `4β`, the coefficient of `v² = u³ - 4βu`.
    pub coefficient: RationalFunction<K>,
    /// `c` with `f = 4β c⁴`; the twist is `(u, v) ↦ (c²u, c³v)`.
    pub twist: RationalFunction<K>,
    pub fibration: WeierstrassFibration<K>,
}

/// Runs the chain `w = 1/s, z₁ = t/s²`, `x = t + s²`, `y = sx`,
/// `x = u/2, y = v/4`, checks the composite coordinates
/// `u = 2(z₁+1)/w², v = 4(z₁+1)/w³` modulo the curve, and twists the
/// result to a polynomial `f` with all root multiplicities below 4.
/// `β` is a rational function of `λ`.
pub fn weierstrass_reduce<K: Field>(beta: &RationalFunction<K>) -> Result<WeierstrassReduction<K>> {
    if beta.is_zero() {
        return Err(CoreError::InvalidInput("beta must be nonzero".into()));
    }
    let b = beta.clone();
    let c = |n: i64| RationalFunction::<K>::from_int(n);
    let mut steps = Vec::new();

    // z₁² - βw⁴ - 1 over (z1, w).
    let r0 = PolyRing::new(&["z1", "w"]);
    let (z1, w): (MultiPoly<RationalFunction<K>>, MultiPoly<RationalFunction<K>>) = (r0.v("z1"), r0.v("w"));
    let curve = &(&z1.pow(2) - &w.pow(4).scale(&b)) - &r0.int(1);

    let r1 = PolyRing::new(&["s", "t"]);
    let (s, t): (MultiPoly<RationalFunction<K>>, MultiPoly<RationalFunction<K>>) = (r1.v("s"), r1.v("t"));
    let quartic_st = &(&t.pow(2) - &s.pow(4)) - &r1.constant(b.clone());
    steps.push(verify_substitution(
        "w = 1/s, z1 = t/s^2",
        &curve,
        &[frac(t.clone(), s.pow(2)), frac(r1.int(1), s.clone())],
        &s.pow(4),
        &quartic_st,
    ));

    let r2 = PolyRing::new(&["x", "y"]);
    let (x, y): (MultiPoly<RationalFunction<K>>, MultiPoly<RationalFunction<K>>) = (r2.v("x"), r2.v("y"));
    let cubic_xy = &(&x.pow(3) - &x.scale(&b)) - &y.pow(2).scale(&c(2));
    // s = y/x and t = x - s² = (x³ - y²)/x².
    steps.push(verify_substitution(
        "x = t + s^2, y = s*x",
        &quartic_st,
        &[frac(y.clone(), x.clone()), frac(&x.pow(3) - &y.pow(2), x.pow(2))],
        &x,
        &cubic_xy,
    ));

    let r3 = PolyRing::new(&["u", "v"]);
    let (u, v): (MultiPoly<RationalFunction<K>>, MultiPoly<RationalFunction<K>>) = (r3.v("u"), r3.v("v"));
    let coefficient = c(4) * b.clone();
    let weier = &(&u.pow(3) - &u.scale(&coefficient)) - &v.pow(2);
    steps.push(verify_substitution(
        "x = u/2, y = v/4",
        &cubic_xy,
        &[frac(u.clone(), r3.int(2)), frac(v.clone(), r3.int(4))],
        &r3.int(8),
        &weier,
    ));

    // Composite coordinates on the original curve.
    let qctx = QuotientContext::with_relations(
        r0.clone(),
        vec![("z1", 2, &w.pow(4).scale(&b) + &r0.int(1))],
    )?;
    let zp1 = &z1 + &r0.int(1);
    let uu = frac(zp1.scale(&c(2)), w.pow(2));
    let vv = frac(zp1.scale(&c(4)), w.pow(3));
    let pulled = substitute_fracs(&weier, &[uu, vv])?;
    let ok = qctx.frac_is_zero(&pulled)?;
    steps.push(VerificationReport::check("u = 2(z1+1)/w^2, v = 4(z1+1)/w^3", ok, || {
        format!("numerator {}", qctx.reduce(&pulled.num).map(|p| p.render(&["a"])).unwrap_or_default())
    }));

    // Quartic twist to a polynomial.
    let (f, twist) = polynomial_twist(&coefficient)?;
    steps.push(verify_twist(&coefficient, &f, &twist));

    let mut fibration = WeierstrassFibration::new(f, "lambda")?;
    fibration.provenance = steps;
    Ok(WeierstrassReduction { beta: b, coefficient, twist, fibration })
}

/// Finds `c ∈ K(λ)` making `a·c⁴` a polynomial with root multiplicities
/// below 4 and no rational fourth power in its leading constant.
pub fn polynomial_twist<K: Field>(a: &RationalFunction<K>) -> Result<(Poly<K>, RationalFunction<K>)> {
    let den = a.den().squarefree_decomposition()?;
    let mut cden = Poly::one();
    for (p, e) in &den.factors {
        cden = &cden * &p.pow(e.div_ceil(4));
    }
    let poly = a.num() * &cden.pow(4).exact_div(a.den())?;
    let rec = twist_minimize(&poly)?;
    let lead = rec.reduced.leading();
    let mut reduced = rec.reduced.clone();
    let mut scale = K::one();
    if let Some(r) = lead.fourth_root() {
        if !r.is_zero() {
            let r4inv = r.pow(4).try_inv()?;
            reduced = reduced.scale(&r4inv);
            scale = r.try_inv()?;
        }
    }
    let c = RationalFunction::new(cden.scale(&scale), rec.multiplier)?;
    Ok((reduced, c))
}

/// Checks `E_f(c²u, c³v) = c⁶ · E_a(u, v)` for `f = a c⁴`, over `K(λ)`.
fn verify_twist<K: Field>(a: &RationalFunction<K>, f: &Poly<K>, c: &RationalFunction<K>) -> VerificationReport {
    let ring = PolyRing::new(&["u", "v"]);
    let (u, v): (MultiPoly<RationalFunction<K>>, MultiPoly<RationalFunction<K>>) = (ring.v("u"), ring.v("v"));
    let fl = RationalFunction::from_poly(f.clone());
    let eq = |coef: &RationalFunction<K>, u: &MultiPoly<RationalFunction<K>>, v: &MultiPoly<RationalFunction<K>>| {
        &(&v.pow(2) - &u.pow(3)) + &u.scale(coef)
    };
    let lhs = eq(&fl, &u.scale(&c.pow(2)), &v.scale(&c.pow(3)));
    let rhs = eq(a, &u, &v).scale(&c.pow(6));
    let residual = &lhs - &rhs;
    VerificationReport::check("quartic twist (u, v) -> (c^2 u, c^3 v)", residual.is_zero(), || {
        format!("residual {}", residual.render(&["lambda", "a"]))
    })
    .with_note(format!("c = {}", c.render(&["lambda", "alpha"])))
}

/// `β = 4/(λ(λ² + 2λ + α)²)`, for which `z₁² = βw⁴ + 1` is the fiber
/// equation `w⁴ = ¼λ(λ² + 2λ + α)²(z₁² - 1)`.
pub fn cover_beta<K: Field>(alpha: K) -> RationalFunction<K> {
    let g = Poly::from_coeffs(vec![alpha, K::from_int(2), K::one()]);
    let den = &Poly::x() * &g.pow(2);
    RationalFunction::new(Poly::constant(K::from_int(4)), den).expect("nonzero")
}

/// `λ³(λ² + 2λ + α)²`.
pub fn family_f<K: Field>(alpha: K) -> Poly<K> {
    let g = Poly::from_coeffs(vec![alpha, K::from_int(2), K::one()]);
    &Poly::monomial(K::one(), 3) * &g.pow(2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegenerationKind {
    AtInfinity,
    AtZero,
}

/// A family in the parameter `β`, with coefficients polynomial in `β` so
/// that `β = 0` is admissible.
#[derive(Clone, Debug)]
pub struct DegenerationModel {
    pub kind: DegenerationKind,
    pub fibration: WeierstrassFibration<RationalFunction<Rational>>,
}

impl DegenerationModel {
    /// Specializes `β`; fails when a coefficient has a pole there.
    pub fn at_beta(&self, b: &Rational) -> Result<Poly<Rational>> {
        let coeffs: Result<Vec<Rational>> = self
            .fibration
            .f
            .coeffs()
            .iter()
            .map(|c| Ok(c.eval(b)?))
            .collect();
        Ok(Poly::from_coeffs(coeffs?))
    }
}

/// Builds the degenerations `α = β⁻⁸` (rescaling `u, v, λ` by `β⁻¹⁴, β⁻²¹,
/// β⁻⁴`) and `α = β⁴` (after `μ = 1/λ`), verifying each rescaling.
pub fn degeneration_model(kind: DegenerationKind) -> Result<DegenerationModel> {
    type Q = RationalFunction<Rational>;
    let beta = Q::var();
    let q = |n: i64| Q::from_int(n);
    let bpow = |e: i32| -> Q {
        if e >= 0 {
            beta.pow(e as u32)
        } else {
            beta.pow((-e) as u32).try_inv().expect("nonzero")
        }
    };
    let mut steps = Vec::new();
    let f = match kind {
        DegenerationKind::AtInfinity => {
            let ring = PolyRing::new(&["u", "v", "lambda"]);
            let source = weierstrass_equation(&ring, &family_f(bpow(-8)));
            let f_new = Poly::from_coeffs(vec![q(1), q(2) * bpow(4), q(1)]);
            let f_new = &Poly::monomial(q(1), 3) * &f_new.pow(2);
            let target = weierstrass_equation(&ring, &f_new);
            let images = [
                MultiFrac::from_poly(ring.v::<Q>("u").scale(&bpow(-14))),
                MultiFrac::from_poly(ring.v::<Q>("v").scale(&bpow(-21))),
                MultiFrac::from_poly(ring.v::<Q>("lambda").scale(&bpow(-4))),
            ];
            steps.push(verify_substitution(
                "alpha = beta^-8; u, v, lambda scaled by beta^-14, beta^-21, beta^-4",
                &source,
                &images,
                &ring.constant(bpow(42)),
                &target,
            ));
            f_new
        }
        DegenerationKind::AtZero => {
            // First over Q(α): μ = 1/λ, u ↦ u/μ⁴, v ↦ v/μ⁶.
            let alpha = Q::var();
            let ring = PolyRing::new(&["u", "v", "mu"]);
            let source = weierstrass_equation(&ring, &family_f(alpha.clone()));
            let (u, v, mu): (MultiPoly<Q>, MultiPoly<Q>, MultiPoly<Q>) = (ring.v("u"), ring.v("v"), ring.v("mu"));
            let inner = Poly::from_coeffs(vec![q(1), q(2), alpha.clone()]);
            let mid_f = &Poly::x() * &inner.pow(2);
            let mid = weierstrass_equation(&ring, &mid_f);
            steps.push(verify_substitution(
                "mu = 1/lambda, u -> u/mu^4, v -> v/mu^6",
                &source,
                &[frac(u.clone(), mu.pow(4)), frac(v.clone(), mu.pow(6)), frac(ring.int(1), mu.clone())],
                &mu.pow(12),
                &mid,
            ));
            // Then α = β⁴ with μ ↦ μ/β⁴, u ↦ u/β⁶, v ↦ v/β⁹.
            let mid_beta = weierstrass_equation(&ring, &(&Poly::x() * &Poly::from_coeffs(vec![q(1), q(2), bpow(4)]).pow(2)));
            let f_new = &Poly::x() * &Poly::from_coeffs(vec![bpow(4), q(2), q(1)]).pow(2);
            let target = weierstrass_equation(&ring, &f_new);
            steps.push(verify_substitution(
                "alpha = beta^4; mu, u, v scaled by beta^-4, beta^-6, beta^-9",
                &mid_beta,
                &[
                    MultiFrac::from_poly(u.scale(&bpow(-6))),
                    MultiFrac::from_poly(v.scale(&bpow(-9))),
                    MultiFrac::from_poly(mu.scale(&bpow(-4))),
                ],
                &ring.constant(bpow(18)),
                &target,
            ));
            f_new
        }
    };
    let var = match kind {
        DegenerationKind::AtInfinity => "lambda",
        DegenerationKind::AtZero => "mu",
    };
    let mut fibration = WeierstrassFibration::new(f, var)?;
    fibration.provenance = steps;
    Ok(DegenerationModel { kind, fibration })
}

/// `(u, v, λ) ↦ (c_u u, c_v v, c_λ λ)`.
#[derive(Clone, Debug)]
pub struct MonomialAutomorphism<K> {
    pub cu: K,
    pub cv: K,
    pub clambda: K,
}

#[derive(Clone, Debug)]
pub struct FormScaling<K> {
    /// `s` with `φ*(dλ ∧ du / v) = s · (dλ ∧ du / v)`.
    pub scalar: K,
    pub order: Option<u32>,
}

/// Multiplicative order of `s`, searched up to `bound`.
pub fn multiplicative_order<K: Field>(s: &K, bound: u32) -> Option<u32> {
    let mut acc = s.clone();
    for n in 1..=bound {
        if acc.is_one() {
            return Some(n);
        }
        acc = acc * s.clone();
    }
    None
}

/// Checks that the automorphism preserves `v² = u³ - f u` and returns its
/// scalar action on the 2-form `dλ ∧ du / v` with its order.
pub fn form_scaling_order<K: Field>(auto: &MonomialAutomorphism<K>, fib: &WeierstrassFibration<K>) -> Result<FormScaling<K>> {
    let ring = PolyRing::new(&["u", "v", "lambda"]);
    let eq = weierstrass_equation(&ring, &fib.f);
    let images = [
        ring.v::<K>("u").scale(&auto.cu),
        ring.v::<K>("v").scale(&auto.cv),
        ring.v::<K>("lambda").scale(&auto.clambda),
    ];
    let pulled = eq.eval_with(&images)?;
    let expected = eq.scale(&(auto.cv.clone() * auto.cv.clone()));
    if pulled != expected {
        return Err(CoreError::InvalidMap(format!(
            "automorphism does not preserve the equation; residual {}",
            (&pulled - &expected).render(&[])
        )));
    }
    let scalar = auto.clambda.clone() * auto.cu.clone() * auto.cv.try_inv()?;
    let order = multiplicative_order(&scalar, 240);
    Ok(FormScaling { scalar, order })
}

/// The order-8 automorphism `(u, v, λ) ↦ (ζ²u, ζ³v, -λ)` of the `β = 0`
/// model at infinity, `ζ⁴ = -1`.
pub fn eighth_root_automorphism() -> (MonomialAutomorphism<NumberField>, WeierstrassFibration<NumberField>) {
    let ctx = cyclotomic8();
    let z = NumberField::generator(&ctx);
    let auto = MonomialAutomorphism { cu: z.pow(2), cv: z.pow(3), clambda: -NumberField::one() };
    let model = degeneration_model(DegenerationKind::AtInfinity).expect("verified model");
    let f = model.at_beta(&Rational::zero()).expect("polynomial in beta");
    let f = f.map_coeffs(NumberField::from_rational);
    (auto, WeierstrassFibration::new(f, "lambda").expect("nonzero"))
}

/// Shorthand for the generic family over `Q(α)`.
pub fn generic_family() -> Poly<RationalFunction<Rational>> {
    family_f(RationalFunction::var())
}

pub fn rational_family(alpha: &Rational) -> Poly<Rational> {
    family_f(alpha.clone())
}

/// The literal `β = (¼λ(λ² + 2λ + α))⁻²`, kept for comparison.
pub fn literal_beta<K: Field>(alpha: K) -> RationalFunction<K> {
    let g = Poly::from_coeffs(vec![alpha, K::from_int(2), K::one()]);
    let inner = (&Poly::x() * &g).scale(&K::from_rational(&rat(1, 4)));
    RationalFunction::new(Poly::one(), inner.pow(2)).expect("nonzero")
}
