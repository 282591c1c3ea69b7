//! Arbitrary-precision period computations: the complex AGM, the period
//! ratio `τ` of `y² = (x - e₁)(x - e₂)(x - e₃)`, reduction to the standard
//! fundamental domain, `j(τ)` from Eisenstein series, and recognition of
//! `τ` as a quadratic irrationality in `Q(i)`.

use std::cell::RefCell;
use std::fmt;

use astro_float::{BigFloat, Consts, RoundingMode};
use k3_algebra::Rational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{CoreError, Result};

const RM: RoundingMode = RoundingMode::ToEven;

/// A precision context. Each numeric call owns one; nothing is shared.
pub struct Ctx {
    pub bits: usize,
    /// Working precision, a few words above `bits`.
    p: usize,
    cc: RefCell<Consts>,
}

impl Ctx {
    pub fn new(bits: usize) -> Result<Self> {
        if bits < 64 {
            return Err(CoreError::InvalidInput("precision must be at least 64 bits".into()));
        }
        let cc = Consts::new().map_err(|e| CoreError::InvalidInput(format!("numeric context: {e}")))?;
        Ok(Ctx { bits, p: bits + 64, cc: RefCell::new(cc) })
    }

    pub fn int(&self, n: i64) -> BigFloat {
        BigFloat::from_i64(n, self.p)
    }

    pub fn rational(&self, q: &Rational) -> BigFloat {
        let n = BigFloat::parse(&q.numer().to_string(), astro_float::Radix::Dec, self.p, RM, &mut self.cc.borrow_mut());
        let d = BigFloat::parse(&q.denom().to_string(), astro_float::Radix::Dec, self.p, RM, &mut self.cc.borrow_mut());
        n.div(&d, self.p, RM)
    }

    pub fn pi(&self) -> BigFloat {
        self.cc.borrow_mut().pi(self.p, RM)
    }

    /// `2^e`.
    pub fn pow2(&self, e: i64) -> BigFloat {
        let two = self.int(2);
        if e >= 0 {
            two.powi(e as usize, self.p, RM)
        } else {
            self.int(1).div(&two.powi((-e) as usize, self.p, RM), self.p, RM)
        }
    }

    fn sqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.p, RM)
    }

    fn exp(&self, a: &BigFloat) -> BigFloat {
        a.exp(self.p, RM, &mut self.cc.borrow_mut())
    }

    fn cos(&self, a: &BigFloat) -> BigFloat {
        a.cos(self.p, RM, &mut self.cc.borrow_mut())
    }

    fn sin(&self, a: &BigFloat) -> BigFloat {
        a.sin(self.p, RM, &mut self.cc.borrow_mut())
    }

    pub fn to_f64(&self, a: &BigFloat) -> f64 {
        a.to_string().parse::<f64>().unwrap_or(f64::NAN)
    }

    pub fn cmp_lt(&self, a: &BigFloat, b: &BigFloat) -> bool {
        a.cmp(b).map_or(false, |c| c < 0)
    }

    fn round_to_i64(&self, a: &BigFloat) -> Option<i64> {
        let half = self.int(1).div(&self.int(2), self.p, RM);
        let f = a.add(&half, self.p, RM).floor();
        f.to_string().parse::<f64>().ok().and_then(|v| if v.abs() < 9.0e15 { Some(v as i64) } else { None })
    }
}

#[derive(Clone, Debug)]
pub struct Complex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl Complex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        Complex { re, im }
    }

    pub fn real(ctx: &Ctx, r: BigFloat) -> Self {
        Complex { re: r, im: ctx.int(0) }
    }

    pub fn from_rationals(ctx: &Ctx, re: &Rational, im: &Rational) -> Self {
        Complex { re: ctx.rational(re), im: ctx.rational(im) }
    }

    pub fn add(&self, o: &Self, c: &Ctx) -> Self {
        Complex { re: self.re.add(&o.re, c.p, RM), im: self.im.add(&o.im, c.p, RM) }
    }

    pub fn sub(&self, o: &Self, c: &Ctx) -> Self {
        Complex { re: self.re.sub(&o.re, c.p, RM), im: self.im.sub(&o.im, c.p, RM) }
    }

    pub fn neg(&self) -> Self {
        Complex { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn mul(&self, o: &Self, c: &Ctx) -> Self {
        let re = self.re.mul(&o.re, c.p, RM).sub(&self.im.mul(&o.im, c.p, RM), c.p, RM);
        let im = self.re.mul(&o.im, c.p, RM).add(&self.im.mul(&o.re, c.p, RM), c.p, RM);
        Complex { re, im }
    }

    pub fn scale(&self, r: &BigFloat, c: &Ctx) -> Self {
        Complex { re: self.re.mul(r, c.p, RM), im: self.im.mul(r, c.p, RM) }
    }

    pub fn norm2(&self, c: &Ctx) -> BigFloat {
        self.re.mul(&self.re, c.p, RM).add(&self.im.mul(&self.im, c.p, RM), c.p, RM)
    }

    pub fn abs(&self, c: &Ctx) -> BigFloat {
        c.sqrt(&self.norm2(c))
    }

    pub fn div(&self, o: &Self, c: &Ctx) -> Result<Self> {
        let n = o.norm2(c);
        if n.is_zero() {
            return Err(CoreError::Singular("complex division by zero".into()));
        }
        let conj = Complex { re: o.re.clone(), im: o.im.neg() };
        let m = self.mul(&conj, c);
        Ok(Complex { re: m.re.div(&n, c.p, RM), im: m.im.div(&n, c.p, RM) })
    }

    /// Principal square root.
    pub fn sqrt(&self, c: &Ctx) -> Self {
        if self.re.is_zero() && self.im.is_zero() {
            return self.clone();
        }
        let r = self.abs(c);
        let half = c.int(1).div(&c.int(2), c.p, RM);
        let a = c.sqrt(&r.add(&self.re, c.p, RM).mul(&half, c.p, RM));
        let b = c.sqrt(&r.sub(&self.re, c.p, RM).mul(&half, c.p, RM));
        let b = if self.im.is_negative() { b.neg() } else { b };
        Complex { re: a, im: b }
    }

    /// `e^{2πi z}`.
    pub fn exp_2pi_i(&self, c: &Ctx) -> Self {
        let two_pi = c.pi().mul(&c.int(2), c.p, RM);
        let mag = c.exp(&self.im.mul(&two_pi, c.p, RM).neg());
        let ang = self.re.mul(&two_pi, c.p, RM);
        Complex { re: mag.mul(&c.cos(&ang), c.p, RM), im: mag.mul(&c.sin(&ang), c.p, RM) }
    }

    pub fn to_f64_pair(&self, c: &Ctx) -> (f64, f64) {
        (c.to_f64(&self.re), c.to_f64(&self.im))
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re, self.im)
    }
}

/// Arithmetic-geometric mean with the optimal square-root choice
/// `|a' - b'| ≤ |a' + b'|`.
pub fn agm(a: &Complex, b: &Complex, c: &Ctx) -> Complex {
    let half = c.int(1).div(&c.int(2), c.p, RM);
    let tol = c.pow2(-(c.p as i64) + 8);
    let (mut a, mut b) = (a.clone(), b.clone());
    for _ in 0..(4 * c.p) {
        let diff = a.sub(&b, c).abs(c);
        if c.cmp_lt(&diff, &tol.mul(&a.abs(c), c.p, RM)) {
            break;
        }
        let an = a.add(&b, c).scale(&half, c);
        let mut bn = a.mul(&b, c).sqrt(c);
        if c.cmp_lt(&an.add(&bn, c).abs(c), &an.sub(&bn, c).abs(c)) {
            bn = bn.neg();
        }
        a = an;
        b = bn;
    }
    a
}

/// `τ` in the upper half plane with an error bound.
#[derive(Clone, Debug)]
pub struct PeriodRatio {
    pub tau: Complex,
    pub error_bound: BigFloat,
    /// `τ` moved into `|Re τ| ≤ ½, |τ| ≥ 1`, with the `SL(2, Z)` matrix used.
    pub reduced: Complex,
    pub reduction: [[i64; 2]; 2],
    pub bits: usize,
}

impl PeriodRatio {
    pub fn to_json(&self, c: &Ctx) -> Value {
        let (tr, ti) = self.tau.to_f64_pair(c);
        let (rr, ri) = self.reduced.to_f64_pair(c);
        json!({
            "tau": {"re": self.tau.re.to_string(), "im": self.tau.im.to_string(), "approx": [tr, ti]},
            "reduced": {"re": self.reduced.re.to_string(), "im": self.reduced.im.to_string(), "approx": [rr, ri]},
            "reduction_matrix": self.reduction,
            "error_bound": self.error_bound.to_string(),
            "precision_bits": self.bits,
        })
    }
}

/// `τ = i·M(√(e₁-e₃), √(e₁-e₂)) / M(√(e₁-e₃), √(e₂-e₃))`, normalized to
/// `Im τ > 0`. Roots must be distinct.
pub fn period_ratio_numeric(e: [&Complex; 3], c: &Ctx) -> Result<PeriodRatio> {
    let tiny = c.pow2(-(c.bits as i64) / 2);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if c.cmp_lt(&e[i].sub(e[j], c).abs(c), &tiny) {
            return Err(CoreError::Singular("coincident roots".into()));
        }
    }
    let d13 = e[0].sub(e[2], c).sqrt(c);
    let d12 = e[0].sub(e[1], c).sqrt(c);
    let d23 = e[1].sub(e[2], c).sqrt(c);
    let m1 = agm(&d13, &d12, c);
    let m2 = agm(&d13, &d23, c);
    let i = Complex::new(c.int(0), c.int(1));
    let mut tau = i.mul(&m1.div(&m2, c)?, c);
    if tau.im.is_negative() {
        tau = tau.neg();
    }
    let (reduced, reduction) = reduce_to_fundamental_domain(&tau, c)?;
    let one_plus = c.int(1).add(&tau.abs(c), c.p, RM);
    let error_bound = c.pow2(8 - c.bits as i64).mul(&one_plus, c.p, RM);
    Ok(PeriodRatio { tau, error_bound, reduced, reduction, bits: c.bits })
}

/// Real roots given exactly, embedded numerically.
pub fn period_ratio_rational(e: [&Rational; 3], bits: usize) -> Result<(PeriodRatio, Ctx)> {
    let c = Ctx::new(bits)?;
    let zero = Rational::zero();
    let mut roots: Vec<&Rational> = e.to_vec();
    roots.sort_by(|a, b| b.cmp(a));
    let z: Vec<Complex> = roots.iter().map(|r| Complex::from_rationals(&c, r, &zero)).collect();
    let pr = period_ratio_numeric([&z[0], &z[1], &z[2]], &c)?;
    Ok((pr, c))
}

/// `τ` of `E_β: v² = u(u² + 4u + 2(1 + β⁴))`, whose roots are `0` and
/// `-2 ± √(2 - 2β⁴)`.
pub fn e_beta_period(beta4: &Rational, bits: usize) -> Result<(PeriodRatio, Ctx)> {
    let two = Rational::from_integer(2.into());
    let disc = &two - &(&two * beta4);
    let c = Ctx::new(bits)?;
    let s = c.sqrt(&c.rational(&disc.abs()));
    let m2 = Complex::real(&c, c.int(-2));
    let zero = Complex::real(&c, c.int(0));
    let e = if disc >= Rational::zero() {
        let s = Complex::real(&c, s);
        // Real roots in descending order.
        if c.cmp_lt(&s.re, &c.int(2)) {
            [zero, m2.add(&s, &c), m2.sub(&s, &c)]
        } else {
            [m2.add(&s, &c), zero, m2.sub(&s, &c)]
        }
    } else {
        let is = Complex::new(c.int(0), s);
        [zero, m2.add(&is, &c), m2.sub(&is, &c)]
    };
    let pr = period_ratio_numeric([&e[0], &e[1], &e[2]], &c)?;
    Ok((pr, c))
}

/// Applies `τ ↦ τ + n` and `τ ↦ -1/τ` until `τ` is in the standard domain.
pub fn reduce_to_fundamental_domain(tau: &Complex, c: &Ctx) -> Result<(Complex, [[i64; 2]; 2])> {
    let mut t = tau.clone();
    let mut m = [[1i64, 0], [0, 1]];
    let one = c.int(1);
    let slack = one.sub(&c.pow2(-(c.bits as i64) / 2), c.p, RM);
    for _ in 0..1000 {
        let n = c.round_to_i64(&t.re).ok_or_else(|| CoreError::InvalidInput("tau out of range".into()))?;
        if n != 0 {
            t.re = t.re.sub(&c.int(n), c.p, RM);
            m = [[m[0][0] - n * m[1][0], m[0][1] - n * m[1][1]], m[1]];
        }
        if c.cmp_lt(&t.norm2(c), &slack) {
            t = Complex::new(c.int(-1), c.int(0)).div(&t, c)?;
            m = [[-m[1][0], -m[1][1]], [m[0][0], m[0][1]]];
        } else {
            return Ok((t, m));
        }
    }
    Err(CoreError::Undecidable("reduction did not terminate".into()))
}

/// `j(τ) = 1728 E₄³/(E₄³ - E₆²)` with `q = e^{2πiτ}`; `τ` should be reduced.
pub fn j_numeric(tau: &Complex, c: &Ctx) -> Result<Complex> {
    let q = tau.exp_2pi_i(c);
    let tol = c.pow2(-(c.p as i64));
    let mut e4 = Complex::real(c, c.int(1));
    let mut e6 = Complex::real(c, c.int(1));
    let mut qn = q.clone();
    for n in 1u64..10_000 {
        let (s3, s5) = divisor_sums(n);
        let t4 = qn.scale(&c.int(240 * s3 as i64), c);
        let t6 = qn.scale(&c.int(504 * s5 as i64), c);
        e4 = e4.add(&t4, c);
        e6 = e6.sub(&t6, c);
        if c.cmp_lt(&t6.abs(c), &tol) {
            break;
        }
        qn = qn.mul(&q, c);
    }
    let e43 = e4.mul(&e4, c).mul(&e4, c);
    let den = e43.sub(&e6.mul(&e6, c), c);
    Ok(e43.scale(&c.int(1728), c).div(&den, c)?)
}

fn divisor_sums(n: u64) -> (u64, u64) {
    let (mut s3, mut s5) = (0u64, 0u64);
    for d in 1..=n {
        if n % d == 0 {
            s3 += d.pow(3);
            s5 += d.pow(5);
        }
    }
    (s3, s5)
}

/// `(e₁, e₂, e₃)` for the lattice `Z + τZ` from theta constants, up to the
/// common factor `π²`: `e₁ = (θ₃⁴ + θ₄⁴)/3`, `e₂ = -(θ₂⁴ + θ₃⁴)/3`,
/// `e₃ = (θ₂⁴ - θ₄⁴)/3`.
pub fn lattice_roots(tau: &Complex, c: &Ctx) -> [Complex; 3] {
    // q = e^{πiτ}, q^{1/4} = e^{πiτ/4}.
    let half = c.int(1).div(&c.int(2), c.p, RM);
    let eighth = c.int(1).div(&c.int(8), c.p, RM);
    let q = tau.scale(&half, c).exp_2pi_i(c);
    let q14 = tau.scale(&eighth, c).exp_2pi_i(c);
    let tol = c.pow2(-(c.p as i64));
    let one = Complex::real(c, c.int(1));
    let (mut t2, mut t3, mut t4) = (one.clone(), one.clone(), one.clone());
    // θ₂ = 2q^{1/4} Σ q^{n(n+1)}, θ₃ = 1 + 2Σ q^{n²}, θ₄ = 1 + 2Σ (-1)ⁿ q^{n²}.
    for n in 1u32..400 {
        let qa = pow_c(&q, n * (n + 1), c);
        let qb = pow_c(&q, n * n, c);
        t2 = t2.add(&qa, c);
        let two_qb = qb.scale(&c.int(2), c);
        t3 = t3.add(&two_qb, c);
        t4 = if n % 2 == 1 { t4.sub(&two_qb, c) } else { t4.add(&two_qb, c) };
        if c.cmp_lt(&qb.abs(c), &tol) {
            break;
        }
    }
    let t2 = t2.mul(&q14, c).scale(&c.int(2), c);
    let p4 = |t: &Complex| {
        let s = t.mul(t, c);
        s.mul(&s, c)
    };
    let (a2, a3, a4) = (p4(&t2), p4(&t3), p4(&t4));
    let third = c.int(1).div(&c.int(3), c.p, RM);
    [
        a3.add(&a4, c).scale(&third, c),
        a2.add(&a3, c).scale(&third, c).neg(),
        a2.sub(&a4, c).scale(&third, c),
    ]
}

fn pow_c(z: &Complex, e: u32, c: &Ctx) -> Complex {
    let mut acc = Complex::real(c, c.int(1));
    let mut base = z.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base, c);
        }
        base = base.mul(&base, c);
        e >>= 1;
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CmVerdict {
    /// `τ` satisfies `aτ² + bτ + c = 0` with discriminant `-4m²`.
    IsogenousToE { conductor: u64, form: (i64, i64, i64) },
    /// No relation of discriminant `-4m²`, `m ≤ maxConductor`, was found.
    /// A relation of another discriminant is reported when present.
    NotDetected { other_form: Option<(i64, i64, i64)> },
    /// A candidate relation sits between the acceptance and rejection
    /// thresholds.
    Inconclusive { form: (i64, i64, i64) },
}

impl CmVerdict {
    pub fn to_json(&self) -> Value {
        match self {
            CmVerdict::IsogenousToE { conductor, form } => {
                json!({"verdict": "IsogenousToE", "conductor": conductor, "form": [form.0, form.1, form.2]})
            }
            CmVerdict::NotDetected { other_form } => {
                json!({"verdict": "NotDetected", "other_form": other_form.map(|f| vec![f.0, f.1, f.2])})
            }
            CmVerdict::Inconclusive { form } => json!({"verdict": "Inconclusive", "form": [form.0, form.1, form.2]}),
        }
    }
}

/// Looks for a reduced primitive form `(a, b, c)` with root `τ`. A relation
/// is accepted when both residuals are below `2^{-bits/2}`; one between
/// that and `2^{-bits/4}` gives `Inconclusive`.
pub fn cm_isogeny_check(tau: &Complex, max_conductor: u64, c: &Ctx) -> Result<CmVerdict> {
    if !tau.im.is_positive() {
        return Err(CoreError::InvalidInput("Im tau must be positive".into()));
    }
    let (t, _) = reduce_to_fundamental_domain(tau, c)?;
    let accept = c.pow2(-(c.bits as i64) / 2);
    let reject = c.pow2(-(c.bits as i64) / 4);
    let norm = t.norm2(c);
    // Reduced forms of discriminant -4m² have a ≤ 2m/√3.
    let a_max = ((2.0 * max_conductor as f64) / 3f64.sqrt()).ceil() as i64 + 1;
    let mut other = None;
    for a in 1..=a_max {
        let ab = c.int(a);
        let bx = t.re.mul(&ab, c.p, RM).mul(&c.int(-2), c.p, RM);
        let cx = norm.mul(&ab, c.p, RM);
        let (Some(b), Some(cc)) = (c.round_to_i64(&bx), c.round_to_i64(&cx)) else { continue };
        let rb = bx.sub(&c.int(b), c.p, RM).abs();
        let rc = cx.sub(&c.int(cc), c.p, RM).abs();
        let worst = if c.cmp_lt(&rb, &rc) { rc } else { rb };
        if num_integer::gcd(num_integer::gcd(a, b), cc) != 1 {
            continue;
        }
        if c.cmp_lt(&worst, &accept) {
            let d = b * b - 4 * a * cc;
            if d < 0 {
                if let Some(m) = conductor_of(d) {
                    if m <= max_conductor {
                        return Ok(CmVerdict::IsogenousToE { conductor: m, form: (a, b, cc) });
                    }
                }
            }
            other.get_or_insert((a, b, cc));
        } else if c.cmp_lt(&worst, &reject) {
            return Ok(CmVerdict::Inconclusive { form: (a, b, cc) });
        }
    }
    Ok(CmVerdict::NotDetected { other_form: other })
}

/// `m` with `d = -4m²`, if any.
fn conductor_of(d: i64) -> Option<u64> {
    if d >= 0 || d % 4 != 0 {
        return None;
    }
    let k = (-d / 4) as u64;
    let m = (k as f64).sqrt().round() as u64;
    (m * m == k).then_some(m)
}

/// `|τ - target|` as an `f64`, for reporting.
pub fn distance(a: &Complex, b: &Complex, c: &Ctx) -> f64 {
    c.to_f64(&a.sub(b, c).abs(c))
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use k3_algebra::rat;

    #[test]
    fn lemniscatic_tau() {
        let (pr, c) = period_ratio_rational([&rat(1, 1), &rat(0, 1), &rat(-1, 1)], 128).unwrap();
        let i = Complex::new(c.int(0), c.int(1));
        assert!(distance(&pr.tau, &i, &c) < 1e-12);
        assert!(c.to_f64(&pr.error_bound) < 1e-30);
        let j = j_numeric(&pr.reduced, &c).unwrap();
        assert!((c.to_f64(&j.re) - 1728.0).abs() < 1e-20);
    }

    #[test]
    fn synthetic_lattice() {
        let c = Ctx::new(128).unwrap();
        let two_i = Complex::new(c.int(0), c.int(2));
        let e = lattice_roots(&two_i, &c);
        let pr = period_ratio_numeric([&e[0], &e[2], &e[1]], &c).unwrap();
        assert!(distance(&pr.reduced, &two_i, &c) < 1e-25, "{}", pr.reduced);
    }

    #[test]
    fn cm_examples() {
        let c = Ctx::new(128).unwrap();
        let i = Complex::new(c.int(0), c.int(1));
        assert_eq!(cm_isogeny_check(&i, 10, &c).unwrap(), CmVerdict::IsogenousToE { conductor: 1, form: (1, 0, 1) });
        let two_i = Complex::new(c.int(0), c.int(2));
        assert!(matches!(cm_isogeny_check(&two_i, 10, &c).unwrap(), CmVerdict::IsogenousToE { conductor: 2, .. }));
        let half = c.int(1).div(&c.int(2), c.p, RM);
        let rho = Complex::new(half.clone(), c.sqrt(&c.int(3)).mul(&half, c.p, RM));
        match cm_isogeny_check(&rho, 10, &c).unwrap() {
            CmVerdict::NotDetected { other_form: Some((a, b, cc)) } => assert_eq!(b * b - 4 * a * cc, -3),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn e_beta_periods_match_exact_j() {
        use crate::curves::{e_beta, CubicModel};
        for b4 in [rat(7, 9), rat(2, 1), rat(-3, 1), rat(1, 3)] {
            let (pr, c) = e_beta_period(&b4, 128).unwrap();
            let j = j_numeric(&pr.reduced, &c).unwrap();
            let exact = CubicModel::from_curve(&e_beta(b4.clone())).unwrap().j_invariant().unwrap();
            let (re, im) = j.to_f64_pair(&c);
            let want = rational_to_f64(&exact);
            assert!((re - want).abs() < 1e-9 * want.abs().max(1.0), "{b4}: {re} vs {want}");
            assert!(im.abs() < 1e-9 * want.abs().max(1.0), "{b4}: im {im}");
        }
        let (pr, c) = e_beta_period(&rat(7, 9), 128).unwrap();
        assert!(matches!(cm_isogeny_check(&pr.tau, 10, &c).unwrap(), CmVerdict::IsogenousToE { conductor: 1, .. }));
    }

    #[test]
    fn e_beta_special_is_lemniscatic() {
        let (pr, c) = period_ratio_rational([&rat(0, 1), &rat(-4, 3), &rat(-8, 3)], 128).unwrap();
        assert!(matches!(cm_isogeny_check(&pr.tau, 10, &c).unwrap(), CmVerdict::IsogenousToE { conductor: 1, .. }));
    }
}
