//! Two by two matrices over `Q(ζ₈)` acting by Möbius transformations: the
//! ball model (`SU(1,1)`, `G₀`), the half-plane model (`SL(2, Z)`, `H₀`,
//! `H[2]`), the Cayley transfer between them through `K = [[1, i], [i, 1]]`
//! and the identities relating the level two groups to the Fricke
//! involution.
//!
//! `Q(ζ₈)` contains `i = ζ²`, `√2 = ζ - ζ³` and `e^{±iπ/4} = ζ^{±1}`, so every
//! matrix used here has exact entries. Complex conjugation is `ζ ↦ ζ⁻¹ = -ζ³`.

use std::fmt;
use std::sync::Arc;

use k3_algebra::{ExtContext, Field, Rational};
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::error::{CoreError, Result};
use crate::fields::{cyclotomic8, NumberField};
use crate::report::VerificationReport;

/// Arithmetic in `Q(ζ₈)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic8 {
    pub ctx: Arc<ExtContext<Rational>>,
}

impl Default for Cyclotomic8 {
    fn default() -> Self {
        Self::new()
    }
}

impl Cyclotomic8 {
    pub fn new() -> Self {
        Cyclotomic8 { ctx: cyclotomic8() }
    }

    pub fn zeta(&self) -> NumberField {
        NumberField::generator(&self.ctx)
    }

    pub fn i(&self) -> NumberField {
        self.zeta().pow(2)
    }

    pub fn sqrt2(&self) -> NumberField {
        self.zeta() - self.zeta().pow(3)
    }

    pub fn q(&self, n: i64, d: i64) -> NumberField {
        NumberField::from_rational(&k3_algebra::rat(n, d))
    }

    /// `p + qi`.
    pub fn gaussian(&self, p: &Rational, q: &Rational) -> NumberField {
        NumberField::from_rational(p) + NumberField::from_rational(q) * self.i()
    }

    pub fn conj(&self, x: &NumberField) -> NumberField {
        x.substitute_generator(&-self.zeta().pow(3))
    }

    pub fn re(&self, x: &NumberField) -> NumberField {
        (x.clone() + self.conj(x)) * self.q(1, 2)
    }

    pub fn im(&self, x: &NumberField) -> NumberField {
        let d = (x.clone() - self.conj(x)) * self.q(1, 2);
        d * -self.i()
    }

    /// `|x|²`, always in `Q(√2)`.
    pub fn norm2(&self, x: &NumberField) -> NumberField {
        x.clone() * self.conj(x)
    }

    fn coord(x: &NumberField, k: usize) -> Rational {
        x.coord(k)
    }

    /// Decides whether `x` lies in the listed subring; entries of `Q(ζ₈)`
    /// are always decidable.
    pub fn is_integer(x: &NumberField) -> bool {
        (1..4).all(|k| Self::coord(x, k).is_zero()) && Self::coord(x, 0).is_integer()
    }

    pub fn is_gaussian_integer(x: &NumberField) -> bool {
        Self::coord(x, 1).is_zero()
            && Self::coord(x, 3).is_zero()
            && Self::coord(x, 0).is_integer()
            && Self::coord(x, 2).is_integer()
    }
}

/// `[[a, b], [c, d]]`.
#[derive(Clone, PartialEq)]
pub struct Mat2 {
    pub a: NumberField,
    pub b: NumberField,
    pub c: NumberField,
    pub d: NumberField,
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Mat2 {
    pub fn new(a: NumberField, b: NumberField, c: NumberField, d: NumberField) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        let k = NumberField::from_int;
        Mat2::new(k(a), k(b), k(c), k(d))
    }

    pub fn identity() -> Self {
        Self::ints(1, 0, 0, 1)
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: self.a.clone() * o.a.clone() + self.b.clone() * o.c.clone(),
            b: self.a.clone() * o.b.clone() + self.b.clone() * o.d.clone(),
            c: self.c.clone() * o.a.clone() + self.d.clone() * o.c.clone(),
            d: self.c.clone() * o.b.clone() + self.d.clone() * o.d.clone(),
        }
    }

    pub fn scale(&self, s: &NumberField) -> Mat2 {
        Mat2::new(self.a.clone() * s.clone(), self.b.clone() * s.clone(), self.c.clone() * s.clone(), self.d.clone() * s.clone())
    }

    pub fn det(&self) -> NumberField {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn adj(&self) -> Mat2 {
        Mat2::new(self.d.clone(), -self.b.clone(), -self.c.clone(), self.a.clone())
    }

    pub fn inv(&self) -> Result<Mat2> {
        let d = self.det();
        if d.is_zero() {
            return Err(CoreError::Singular("matrix is not invertible".into()));
        }
        Ok(self.adj().scale(&d.try_inv()?))
    }

    pub fn entries(&self) -> [&NumberField; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_scalar(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// Equality of Möbius maps: `M·adj(N)` is a nonzero scalar.
    pub fn projectively_equal(&self, o: &Mat2) -> bool {
        let p = self.mul(&o.adj());
        p.is_scalar() && !p.a.is_zero()
    }

    pub fn conj_transpose(&self, f: &Cyclotomic8) -> Mat2 {
        Mat2::new(f.conj(&self.a), f.conj(&self.c), f.conj(&self.b), f.conj(&self.d))
    }

    pub fn to_json(&self) -> Value {
        json!([[self.a.render(&[]), self.b.render(&[])], [self.c.render(&[]), self.d.render(&[])]])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    SL2Z,
    H0,
    H2,
    SU11,
    G0,
    /// `U(1,1) ∩ M₂(Z[i])`, the isometries commuting with `J`.
    Gamma,
}

impl Group {
    pub fn name(self) -> &'static str {
        match self {
            Group::SL2Z => "SL(2,Z)",
            Group::H0 => "H0",
            Group::H2 => "H[2]",
            Group::SU11 => "SU(1,1)",
            Group::G0 => "G0",
            Group::Gamma => "Gamma",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMembershipReport {
    pub group: Group,
    pub member: bool,
    /// The first violated condition.
    pub witness: Option<String>,
}

impl GroupMembershipReport {
    fn verdict(group: Group, fails: Vec<String>) -> Self {
        GroupMembershipReport { group, member: fails.is_empty(), witness: fails.into_iter().next() }
    }

    pub fn to_report(&self, what: &str) -> VerificationReport {
        VerificationReport::check(format!("{what} in {}", self.group.name()), self.member, || {
            self.witness.clone().unwrap_or_default()
        })
    }
}

fn int_of(x: &NumberField) -> Option<Rational> {
    Cyclotomic8::is_integer(x).then(|| x.coord(0))
}

fn is_even(x: &NumberField) -> bool {
    int_of(x).is_some_and(|q| (q / Rational::from_integer(2.into())).is_integer())
}

fn hermitian_check(m: &Mat2, f: &Cyclotomic8) -> bool {
    let h = Mat2::ints(1, 0, 0, -1);
    m.conj_transpose(f).mul(&h).mul(m) == h
}

/// Exact membership test.
pub fn membership(m: &Mat2, group: Group) -> GroupMembershipReport {
    let f = Cyclotomic8::new();
    let mut fails = Vec::new();
    let det_one = m.det().is_one();
    match group {
        Group::SL2Z | Group::H0 | Group::H2 => {
            if !m.entries().iter().all(|x| Cyclotomic8::is_integer(x)) {
                fails.push(format!("entries of {m} are not all rational integers"));
            }
            if !det_one {
                fails.push(format!("det = {} is not 1", m.det()));
            }
            if fails.is_empty() && group == Group::H0 {
                if !is_even(&(m.a.clone() + m.d.clone())) {
                    fails.push(format!("a + d = {} is odd", m.a.clone() + m.d.clone()));
                }
                if !is_even(&(m.b.clone() + m.c.clone())) {
                    fails.push(format!("b + c = {} is odd", m.b.clone() + m.c.clone()));
                }
            }
            if fails.is_empty() && group == Group::H2 && !is_even(&m.c) {
                fails.push(format!("c = {} is odd", m.c));
            }
        }
        Group::SU11 | Group::G0 | Group::Gamma => {
            if !hermitian_check(m, &f) {
                fails.push("M* diag(1,-1) M != diag(1,-1)".into());
            }
            if group != Group::Gamma && !det_one {
                fails.push(format!("det = {} is not 1", m.det()));
            }
            if group != Group::SU11 && !m.entries().iter().all(|x| Cyclotomic8::is_gaussian_integer(x)) {
                fails.push(format!("entries of {m} are not Gaussian integers"));
            }
        }
    }
    GroupMembershipReport::verdict(group, fails)
}

/// Membership of the Möbius map: some nonzero multiple of `m` lies in the
/// group. Only groups of integer matrices are supported; the multiple is
/// found by scaling the first nonzero entry to a rational and fixing the
/// determinant.
pub fn membership_projective(m: &Mat2, group: Group) -> Result<GroupMembershipReport> {
    if !matches!(group, Group::SL2Z | Group::H0 | Group::H2) {
        return Err(CoreError::Undecidable(format!("projective membership in {} is not supported", group.name())));
    }
    let pivot = m
        .entries()
        .into_iter()
        .find(|x| !x.is_zero())
        .ok_or_else(|| CoreError::Singular("zero matrix".into()))?
        .clone();
    let n = m.scale(&pivot.try_inv()?);
    let d = match n.det().as_rational() {
        Some(d) if d.is_positive() => d,
        _ => return Ok(GroupMembershipReport::verdict(group, vec![format!("{m} has no rational multiple of determinant 1")])),
    };
    let s = match NumberField::from_rational(&d).as_base().and_then(|q| sqrt_rational(&q)) {
        Some(s) => s,
        None => return Ok(GroupMembershipReport::verdict(group, vec![format!("det of the normalized matrix, {d}, is not a square")])),
    };
    let unit = n.scale(&NumberField::from_rational(&s.recip()));
    Ok(membership(&unit, group))
}

fn sqrt_rational(q: &Rational) -> Option<Rational> {
    let r = |n: &num_bigint::BigInt| {
        let s = n.sqrt();
        (&s * &s == *n).then_some(s)
    };
    Some(Rational::new(r(q.numer())?, r(q.denom())?))
}

/// `K = [[1, i], [i, 1]]`.
pub fn cayley_k(f: &Cyclotomic8) -> Mat2 {
    Mat2::new(NumberField::one(), f.i(), f.i(), NumberField::one())
}

/// `M ↦ KMK⁻¹` for `M = [[a, b], [b̄, ā]]` in `SU(1,1)`, computed from the
/// closed form `[[Re a + Im b, Re b + Im a], [Re b - Im a, Re a - Im b]]`,
/// which is checked against the matrix product.
pub fn cayley(m: &Mat2) -> Result<Mat2> {
    let f = Cyclotomic8::new();
    let r = membership(m, Group::SU11);
    if !r.member {
        return Err(CoreError::Precondition(format!("not in SU(1,1): {}", r.witness.unwrap_or_default())));
    }
    let (ra, ia, rb, ib) = (f.re(&m.a), f.im(&m.a), f.re(&m.b), f.im(&m.b));
    let n = Mat2::new(
        ra.clone() + ib.clone(),
        rb.clone() + ia.clone(),
        rb - ia,
        ra - ib,
    );
    let k = cayley_k(&f);
    let direct = k.mul(m).mul(&k.inv()?);
    if direct != n {
        return Err(CoreError::InvalidMap(format!("closed form {n} differs from KMK^-1 = {direct}")));
    }
    Ok(n)
}

/// `N ↦ M` with `a = ½(α + δ + i(β - γ))`, `b = ½(β + γ + i(α - δ))`.
pub fn inverse_cayley(n: &Mat2) -> Result<Mat2> {
    let f = Cyclotomic8::new();
    if !n.det().is_one() {
        return Err(CoreError::Precondition(format!("det of {n} is not 1")));
    }
    if n.entries().iter().any(|x| *x != &f.conj(x)) {
        return Err(CoreError::Precondition(format!("{n} is not real")));
    }
    let h = f.q(1, 2);
    let a = (n.a.clone() + n.d.clone() + f.i() * (n.b.clone() - n.c.clone())) * h.clone();
    let b = (n.b.clone() + n.c.clone() + f.i() * (n.a.clone() - n.d.clone())) * h;
    Ok(Mat2::new(a.clone(), b.clone(), f.conj(&b), f.conj(&a)))
}

/// A reproducible sample of `SU(1,1)` with Gaussian-rational entries:
/// products of rotations `diag(u, ū)` with `|u| = 1` and boosts
/// `[[a, b], [b, a]]` with `a² - b² = 1`.
pub fn random_su11(rng: &mut StdRng) -> Mat2 {
    let f = Cyclotomic8::new();
    let mut m = Mat2::identity();
    for _ in 0..rng.gen_range(1..=3) {
        let (p, q) = loop {
            let p: i64 = rng.gen_range(-5..=5);
            let q: i64 = rng.gen_range(-5..=5);
            if p != 0 || q != 0 {
                break (p, q);
            }
        };
        let z = f.gaussian(&Rational::from_integer(p.into()), &Rational::from_integer(q.into()));
        let u = z.clone() * f.conj(&z).try_inv().expect("nonzero");
        let rot = Mat2::new(u.clone(), NumberField::zero(), NumberField::zero(), f.conj(&u));
        let t = loop {
            let t = k3_algebra::rat(rng.gen_range(-6..=6), rng.gen_range(1..=7));
            if t.abs() != Rational::one() {
                break t;
            }
        };
        let one_m = Rational::one() - t.clone() * t.clone();
        let a = NumberField::from_rational(&((Rational::one() + t.clone() * t.clone()) / one_m.clone()));
        let b = NumberField::from_rational(&((Rational::from_integer(2.into()) * t) / one_m));
        let boost = Mat2::new(a.clone(), b.clone(), b, a);
        m = m.mul(&rot).mul(&boost);
    }
    m
}

/// Checks `cayley` then `inverse_cayley` returns the input exactly, and that
/// the transfer is multiplicative, on `count` seeded samples.
pub fn cayley_round_trips(count: usize, seed: u64) -> Result<VerificationReport> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut parts = Vec::new();
    let mut prev: Option<Mat2> = None;
    for k in 0..count {
        let m = random_su11(&mut rng);
        let n = cayley(&m)?;
        let back = inverse_cayley(&n)?;
        let det_ok = n.det().is_one();
        parts.push(VerificationReport::check(format!("sample {k}: round trip"), back == m, || {
            format!("{m} -> {n} -> {back}")
        }));
        parts.push(VerificationReport::check(format!("sample {k}: image has det 1"), det_ok, || format!("{n}")));
        if let Some(p) = prev.take() {
            let lhs = cayley(&p.mul(&m))?;
            let rhs = cayley(&p)?.mul(&n);
            parts.push(VerificationReport::check(format!("sample {k}: multiplicative"), lhs.projectively_equal(&rhs), || {
                format!("{lhs} vs {rhs}")
            }));
        }
        prev = Some(m);
    }
    Ok(VerificationReport::all(format!("Cayley transfer on {count} samples"), parts))
}

/// `T = [[1, 0], [1, 1]]`.
pub fn t_matrix() -> Mat2 {
    Mat2::ints(1, 0, 1, 1)
}

/// `F = [[0, -1/√2], [√2, 0]]`.
pub fn fricke(f: &Cyclotomic8) -> Mat2 {
    let s = f.sqrt2();
    Mat2::new(NumberField::zero(), -s.try_inv().expect("nonzero"), s, NumberField::zero())
}

/// `L = diag(e^{-iπ/4}, e^{iπ/4})`.
pub fn l_matrix(f: &Cyclotomic8) -> Mat2 {
    let z = f.zeta();
    Mat2::new(z.try_inv().expect("nonzero"), NumberField::zero(), NumberField::zero(), z)
}

/// `L' = diag(1, i)`.
pub fn l_prime(f: &Cyclotomic8) -> Mat2 {
    Mat2::new(NumberField::one(), NumberField::zero(), NumberField::zero(), f.i())
}

/// `(1/√2)[[1, -1], [1, 1]]`.
pub fn upsilon_l(f: &Cyclotomic8) -> Mat2 {
    Mat2::ints(1, -1, 1, 1).scale(&f.sqrt2().try_inv().expect("nonzero"))
}

/// Generators of `H[2]` modulo `±1`.
pub fn h2_generators() -> Vec<Mat2> {
    vec![Mat2::ints(1, 1, 0, 1), Mat2::ints(1, 0, 2, 1), Mat2::ints(1, -1, 2, -1), Mat2::ints(-1, 0, 0, -1)]
}

/// Generators of `H₀`: `T⁻¹gT` for the generators `g` of `H[2]`.
pub fn h0_generators() -> Vec<Mat2> {
    let t = t_matrix();
    let ti = t.inv().expect("unimodular");
    h2_generators().iter().map(|g| ti.mul(g).mul(&t)).collect()
}

/// Generators of `G₀`: the preimages of the generators of `H₀`.
pub fn g0_generators() -> Result<Vec<Mat2>> {
    h0_generators().iter().map(inverse_cayley).collect()
}

/// The identities relating `H₀`, `H[2]`, `F`, `L` and `G₀`, each checked
/// on generators.
pub fn fricke_checks() -> Result<Vec<VerificationReport>> {
    let f = Cyclotomic8::new();
    let t = t_matrix();
    let ti = t.inv()?;
    let fr = fricke(&f);
    let fri = fr.inv()?;
    let h0 = h0_generators();
    let h2 = h2_generators();
    let mut out = Vec::new();

    let certs: Vec<_> = h0.iter().map(|g| membership(g, Group::H0).to_report(&format!("{g}"))).collect();
    out.push(VerificationReport::all("generators of H0 are certified", certs));

    let i: Vec<_> = h0.iter().map(|g| membership(&t.mul(g).mul(&ti), Group::H2).to_report(&format!("T {g} T^-1"))).collect();
    out.push(VerificationReport::all("(i) T H0 T^-1 lies in H[2]", i));

    let ii: Vec<_> = h2.iter().map(|h| membership(&ti.mul(h).mul(&t), Group::H0).to_report(&format!("T^-1 {h} T"))).collect();
    out.push(VerificationReport::all("(ii) T^-1 H[2] T lies in H0", ii));

    let f2 = fr.mul(&fr);
    out.push(VerificationReport::check("(iii) F^2 is scalar", f2.is_scalar(), || format!("F^2 = {f2}")));

    let mut iv = Vec::new();
    for h in &h2 {
        iv.push(membership_projective(&fr.mul(h).mul(&fri), Group::H2)?.to_report(&format!("F {h} F^-1")));
    }
    out.push(VerificationReport::all("(iv) F normalizes H[2]", iv));

    let x = fri.mul(&t.mul(&upsilon_l(&f)).mul(&ti));
    out.push(membership_projective(&x, Group::H2)?.to_report("(v) F^-1 T Upsilon(L) T^-1"));

    let l = l_matrix(&f);
    let l2 = l.mul(&l);
    out.push(membership(&l2, Group::G0).to_report("(vi) L^2"));

    let li = l.inv()?;
    let g0 = g0_generators()?;
    let mut vii = Vec::new();
    for g in &g0 {
        vii.push(membership(g, Group::G0).to_report(&format!("generator {g}")));
        vii.push(membership(&li.mul(g).mul(&l), Group::G0).to_report(&format!("L^-1 {g} L")));
        vii.push(membership(&l.mul(g).mul(&li), Group::G0).to_report(&format!("L {g} L^-1")));
    }
    out.push(VerificationReport::all("(vii) L normalizes G0", vii));

    let lc = cayley(&l)?;
    out.push(VerificationReport::check("Cayley image of L is Upsilon(L)", lc == upsilon_l(&f), || format!("{lc}")));

    let mut img = Vec::new();
    for g in &g0 {
        img.push(membership(&cayley(g)?, Group::H0).to_report(&format!("K {g} K^-1")));
    }
    out.push(VerificationReport::all("Cayley image of G0 lies in H0", img));

    let lp = l_prime(&f);
    let lp_scaled = lp.scale(&f.zeta().try_inv()?);
    out.push(VerificationReport::all(
        "L' lies in Gamma and normalizes to L",
        vec![
            membership(&lp, Group::Gamma).to_report("L'"),
            VerificationReport::check("L' / sqrt(det L') = L", lp_scaled == l, || format!("{lp_scaled}")),
        ],
    ));

    // The literal conjugation T H0 T^-1 = H0 does not hold; record where it breaks.
    let literal: Vec<_> =
        h0.iter().map(|g| membership(&t.mul(g).mul(&ti), Group::H0).to_report(&format!("T {g} T^-1"))).collect();
    let lit = VerificationReport::all("T H0 T^-1 inside H0 (literal reading)", literal);
    out.push(VerificationReport::pass("literal reading T H0 T^-1 = H0 recorded").with_note(match &lit.witness {
        Some(w) => format!("fails: {w}"),
        None => "holds on generators".into(),
    }));
    Ok(out)
}

/// The ball coordinate of `(iz₂, z₂, iz₄, z₄)`.
#[derive(Clone, Debug)]
pub struct PeriodPoint {
    pub w: NumberField,
    pub form_value: Rational,
    pub inside: bool,
    pub checks: Vec<VerificationReport>,
}

impl PeriodPoint {
    pub fn to_json(&self) -> Value {
        json!({
            "w": self.w.render(&[]),
            "form_value": self.form_value.to_string(),
            "inside_ball": self.inside,
            "checks": self.checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// `w = z₄/z₂` with the exact positivity verdict `|z₂|² > |z₄|²`; checks
/// `Jz = iz` and `ᵗz T z̄ = 4(|z₂|² - |z₄|²)` for `T = diag(2, 2, -2, -2)`.
pub fn period_point(z2: &NumberField, z4: &NumberField) -> Result<PeriodPoint> {
    let f = Cyclotomic8::new();
    if z2.is_zero() {
        return Err(CoreError::InvalidInput("z2 must be nonzero".into()));
    }
    let i = f.i();
    let z = [i.clone() * z2.clone(), z2.clone(), i.clone() * z4.clone(), z4.clone()];
    let jz = [-z[1].clone(), z[0].clone(), -z[3].clone(), z[2].clone()];
    let j_ok = jz.iter().zip(&z).all(|(a, b)| *a == i.clone() * b.clone());
    let diag = [2, 2, -2, -2];
    let form = z
        .iter()
        .zip(diag)
        .fold(NumberField::zero(), |acc, (x, d)| acc + NumberField::from_int(d) * f.norm2(x));
    let (n2, n4) = (f.norm2(z2), f.norm2(z4));
    let expected = NumberField::from_int(4) * (n2.clone() - n4.clone());
    let form_value = form
        .as_rational()
        .ok_or_else(|| CoreError::Undecidable("form value is not rational".into()))?;
    let w = z4.clone() * z2.try_inv()?;
    let w2 = f.norm2(&w).as_rational().ok_or_else(|| CoreError::Undecidable("|w|^2 not rational".into()))?;
    let inside = form_value.is_positive();
    let checks = vec![
        VerificationReport::check("Jz = iz", j_ok, || "J z differs from i z".into()),
        VerificationReport::check("form equals 4(|z2|^2 - |z4|^2)", form == expected, || format!("{form} vs {expected}")),
        VerificationReport::check("positivity agrees with |w| < 1", inside == (w2 < Rational::one()), || {
            format!("|w|^2 = {w2}")
        }),
    ];
    Ok(PeriodPoint { w, form_value, inside, checks })
}

/// Under `Z[i]² → Z⁴`, `(p + qi, r + si) ↦ (p, q, r, s)` with `J` acting as
/// `i`, the Gram `diag(2, 2, -2, -2)` is `2(zz̄ - ww̄)`; checked on all pairs
/// with coordinates in `[-bound, bound]`, together with the Hermitian
/// polarization and `J`-equivariance.
pub fn gaussian_form_check(bound: i64) -> VerificationReport {
    let form = |x: [i64; 4], y: [i64; 4]| 2 * (x[0] * y[0] + x[1] * y[1] - x[2] * y[2] - x[3] * y[3]);
    let herm_re = |x: [i64; 4], y: [i64; 4]| {
        // Re 2(z z̄' - w w̄') with z = x0 + x1 i.
        2 * ((x[0] * y[0] + x[1] * y[1]) - (x[2] * y[2] + x[3] * y[3]))
    };
    let j = |x: [i64; 4]| [-x[1], x[0], -x[3], x[2]];
    let r = || -bound..=bound;
    let vecs: Vec<[i64; 4]> = r()
        .flat_map(|p| r().flat_map(move |q| r().flat_map(move |s| r().map(move |t| [p, q, s, t]))))
        .collect();
    for &x in &vecs {
        let q = 2 * (x[0] * x[0] + x[1] * x[1] - x[2] * x[2] - x[3] * x[3]);
        if form(x, x) != q || form(j(x), j(x)) != q {
            return VerificationReport::fail("T = Z[i]^2 with Q = 2(z zbar - w wbar)", format!("{x:?}"));
        }
    }
    for &x in vecs.iter().step_by(7) {
        for &y in vecs.iter().step_by(11) {
            if form(x, y) != herm_re(x, y) {
                return VerificationReport::fail("T = Z[i]^2 with Q = 2(z zbar - w wbar)", format!("pair {x:?}, {y:?}"));
            }
        }
    }
    VerificationReport::pass("T = Z[i]^2 with Q = 2(z zbar - w wbar)")
        .with_note(format!("{} vectors with coordinates in [-{bound}, {bound}]", vecs.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn memberships() {
        let f = Cyclotomic8::new();
        for g in [Group::SL2Z, Group::H0, Group::H2, Group::SU11, Group::G0, Group::Gamma] {
            assert!(membership(&Mat2::identity(), g).member);
        }
        let lp = l_prime(&f);
        assert!(membership(&lp, Group::Gamma).member);
        assert!(!membership(&lp, Group::SU11).member);
        let t1 = Mat2::ints(1, 1, 0, 1);
        assert!(membership(&t1, Group::SL2Z).member);
        let h0 = membership(&t1, Group::H0);
        assert!(!h0.member);
        assert!(h0.witness.unwrap().contains("b + c"));
    }

    #[test]
    fn cayley_of_l() {
        let f = Cyclotomic8::new();
        assert_eq!(cayley(&Mat2::identity()).unwrap(), Mat2::identity());
        assert_eq!(cayley(&l_matrix(&f)).unwrap(), upsilon_l(&f));
    }

    #[test]
    fn all_fricke_checks_pass() {
        for r in fricke_checks().unwrap() {
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn fricke_squares_to_minus_one() {
        let f = Cyclotomic8::new();
        let fr = fricke(&f);
        assert_eq!(fr.mul(&fr), Mat2::ints(-1, 0, 0, -1));
    }

    #[test]
    fn period_points() {
        let f = Cyclotomic8::new();
        let one = NumberField::one();
        assert!(period_point(&one, &NumberField::zero()).unwrap().inside);
        assert!(!period_point(&one, &one).unwrap().inside);
        let p = period_point(&NumberField::from_int(2), &f.i()).unwrap();
        assert!(p.inside);
        assert_eq!(p.form_value, Rational::from_integer(12.into()));
        assert_eq!(p.w, f.i() * f.q(1, 2));
        assert!(p.checks.iter().all(|c| c.pass));
    }

    #[test]
    fn gaussian_form() {
        assert!(gaussian_form_check(2).pass);
    }
}
