//! The degree four cover `B_α × E → Y_α`, the fourth power test deciding
//! whether a rational plane curve splits in the cyclic cover `w⁴ = F`, and
//! the construction of a section from a split 2-section.
//!
//! Points over the function field `K(r)` are [`EcPoint`]s with coordinates
//! in [`RationalFunction<K>`].

use k3_algebra::json::{poly_from_json, poly_to_json, rational_to_json};
use k3_algebra::{Field, MultiPoly, Poly, PolyRing, QuotientContext, Rational, RationalFunction};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::curves::{CubicModel, EcPoint};
use crate::error::{CoreError, Result};
use crate::fibration::family_f;
use crate::quartic::{build_quartic, QuarticFamily};
use crate::report::VerificationReport;

pub type FunctionFieldPoint<K> = EcPoint<RationalFunction<K>>;

/// The formulas of the cover in the ring `(τ, w₁, ρ, z₁)` modulo
/// `τ² = ρ(ρ⁴ + 2ρ² + α)` and `w₁⁴ = z₁² - 1`.
#[derive(Clone, Debug)]
pub struct CoverMapData<K: Field> {
    pub ctx: QuotientContext<K>,
    /// Images of `(x, y, z, w)`.
    pub formulas: [MultiPoly<K>; 4],
    pub quartic: QuarticFamily<K>,
}

/// `x = 1`, `y = ρ²`, `z = ½(ρ⁴+2ρ²+α)z₁ + ½(ρ⁴-2ρ²-α)`, `w = τw₁/s` where
/// `s` is the supplied square root of `2i`.
pub fn cover_map_data<K: Field>(alpha: K, i: &K, sqrt_2i: &K) -> Result<CoverMapData<K>> {
    if !(i.clone() * i.clone() + K::one()).is_zero() {
        return Err(CoreError::InvalidInput("supplied i does not square to -1".into()));
    }
    if sqrt_2i.clone() * sqrt_2i.clone() != K::from_int(2) * i.clone() {
        return Err(CoreError::InvalidInput("supplied square root of 2i is wrong".into()));
    }
    cover_map_with_w(alpha, sqrt_2i.try_inv()?)
}

/// The same formulas with `w = c·τw₁` for an arbitrary constant `c`.
pub fn cover_map_with_w<K: Field>(alpha: K, c: K) -> Result<CoverMapData<K>> {
    let ring = PolyRing::new(&["tau", "w1", "rho", "z1"]);
    let v = |n: &str| -> MultiPoly<K> { ring.v(n) };
    let (tau, w1, rho, z1) = (v("tau"), v("w1"), v("rho"), v("z1"));
    let k = |n: i64| ring.constant(K::from_int(n));
    let rho2 = rho.pow(2);
    let rho4 = rho.pow(4);
    let a = ring.constant(alpha.clone());
    let g = &(&rho4 + &(&k(2) * &rho2)) + &a;
    let h = &rho * &g;
    let z1rel = &z1.pow(2) - &k(1);
    let ctx = QuotientContext::with_relations(ring.clone(), vec![("tau", 2, h), ("w1", 4, z1rel)])?;
    let half = K::from_rational(&k3_algebra::rat(1, 2));
    let shift = &(&rho4 - &(&k(2) * &rho2)) - &a;
    let z = (&(&g * &z1) + &shift).scale(&half);
    let w = (&tau * &w1).scale(&c);
    let quartic = build_quartic(alpha);
    Ok(CoverMapData { ctx, formulas: [k(1), rho2, z, w], quartic })
}

impl<K: Field> CoverMapData<K> {
    /// `F(x, y, z)` composed with the formulas, as an element of the ring.
    pub fn quartic_pullback(&self) -> Result<MultiPoly<K>> {
        let imgs = &self.formulas[..3];
        Ok(self.quartic.equation.eval_with(imgs)?)
    }

    /// Decides `w⁴ = σF` for `σ = ±1` and returns the sign that holds.
    pub fn sign(&self) -> Result<Option<i64>> {
        let w4 = self.formulas[3].pow(4);
        let f = self.quartic_pullback()?;
        for s in [1i64, -1] {
            let diff = &w4 - &f.scale(&K::from_int(s));
            if self.ctx.is_zero(&diff)? {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }

    /// Images of `(x, y, z, w)` after `(ρ, τ, z₁, w₁) ↦ (-ρ, iτ, z₁, -iw₁)`.
    pub fn compose_with_phi(&self, i: &K) -> Result<[MultiPoly<K>; 4]> {
        let ring = self.ctx.ring();
        let images = [
            ring.v::<K>("tau").scale(i),
            ring.v::<K>("w1").scale(&-i.clone()),
            -ring.v::<K>("rho"),
            ring.v::<K>("z1"),
        ];
        let mut out = self.formulas.clone();
        for (o, f) in out.iter_mut().zip(&self.formulas) {
            *o = f.eval_with(&images)?;
        }
        Ok(out)
    }
}

/// Checks the cover identity `w⁴ = ±F(x, y, z)` modulo the relations, and
/// that the map is invariant under `φ`. The sign that holds is recorded.
pub fn verify_cover_map<K: Field>(alpha: K, i: &K, sqrt_2i: &K) -> Result<VerificationReport> {
    let data = cover_map_data(alpha, i, sqrt_2i)?;
    let sign = data.sign()?;
    let identity = match sign {
        Some(s) => VerificationReport::pass("w^4 = F(x, y, z) modulo the curve relations")
            .with_note(format!("sign convention: w^4 = {}F", if s == 1 { "+" } else { "-" })),
        None => {
            let w4 = data.formulas[3].pow(4);
            let f = data.quartic_pullback()?;
            let r = data.ctx.reduce(&(&w4 - &f))?;
            VerificationReport::fail(
                "w^4 = F(x, y, z) modulo the curve relations",
                format!("neither sign holds; w^4 - F reduces to {r}"),
            )
        }
    };
    let phi = data.compose_with_phi(i)?;
    let mut same = true;
    for (a, b) in phi.iter().zip(&data.formulas) {
        same &= data.ctx.is_zero(&(a - b))?;
    }
    let inv = VerificationReport::check("cover is invariant under phi", same, || "phi changes the map".into());
    Ok(VerificationReport::all("cover map", vec![identity, inv]))
}

/// Coordinates `x(r), y(r), z(r)` of a rational plane curve.
#[derive(Clone, Debug, PartialEq)]
pub struct Parametrization {
    pub x: Poly<Rational>,
    pub y: Poly<Rational>,
    pub z: Poly<Rational>,
}

impl Parametrization {
    /// Validates `gcd(x, y, z) = 1` and that the coordinates are not all constant.
    pub fn new(x: Poly<Rational>, y: Poly<Rational>, z: Poly<Rational>) -> Result<Self> {
        if x.is_zero() && y.is_zero() && z.is_zero() {
            return Err(CoreError::InvalidInput("all coordinates vanish".into()));
        }
        if x.is_constant() && y.is_constant() && z.is_constant() {
            return Err(CoreError::InvalidInput("parametrization is constant".into()));
        }
        let g = x.gcd(&y).gcd(&z);
        if !g.is_constant() {
            return Err(CoreError::InvalidInput(format!("coordinates share the factor {g}")));
        }
        Ok(Parametrization { x, y, z })
    }

    /// Reads `{"x": [[e, c], ...], "y": ..., "z": ...}`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let get = |k: &str| -> Result<Poly<Rational>> {
            let field = v
                .get(k)
                .ok_or_else(|| CoreError::InvalidInput(format!("parametrization lacks \"{k}\"")))?;
            Ok(poly_from_json(field)?)
        };
        Self::new(get("x")?, get("y")?, get("z")?)
    }

    pub fn to_json(&self) -> Value {
        json!({ "x": poly_to_json(&self.x), "y": poly_to_json(&self.y), "z": poly_to_json(&self.z) })
    }

    pub fn coords(&self) -> [&Poly<Rational>; 3] {
        [&self.x, &self.y, &self.z]
    }

    /// The degree of the map to `P²`.
    pub fn degree(&self) -> usize {
        self.coords().iter().filter_map(|p| p.degree()).max().unwrap_or(0)
    }

    /// Composes with `r ↦ (ar + b)/(cr + d)` and clears denominators.
    pub fn reparametrize(&self, a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Result<Self> {
        if (a.clone() * d.clone() - b.clone() * c.clone()).is_zero() {
            return Err(CoreError::InvalidInput("degenerate fractional linear map".into()));
        }
        let n = self.degree() as u32;
        let top = Poly::from_coeffs(vec![b.clone(), a.clone()]);
        let bot = Poly::from_coeffs(vec![d.clone(), c.clone()]);
        let hom = |p: &Poly<Rational>| {
            p.terms().fold(Poly::zero(), |acc, (e, co)| {
                let t = &top.pow(e as u32) * &bot.pow(n - e as u32);
                &acc + &t.scale(co)
            })
        };
        let (x, y, z) = (hom(&self.x), hom(&self.y), hom(&self.z));
        let g = x.gcd(&y).gcd(&z);
        let div = |p: &Poly<Rational>| p.exact_div(&g);
        Self::new(div(&x)?, div(&y)?, div(&z)?)
    }
}

/// `F(x(r), y(r), z(r))` for a polynomial in `(x, y, z)`.
pub fn compose_plane(f: &MultiPoly<Rational>, p: &Parametrization) -> Result<Poly<Rational>> {
    if f.ring().nvars() != 3 {
        return Err(CoreError::InvalidInput("expected a polynomial in x, y, z".into()));
    }
    let coords = p.coords();
    Ok(f.terms().fold(Poly::zero(), |acc, (e, c)| {
        let m = e
            .iter()
            .zip(coords)
            .fold(Poly::constant(c.clone()), |m, (&k, q)| &m * &q.pow(k));
        &acc + &m
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitVerdict {
    Splits,
    DoesNotSplit,
    /// The curve lies in the branch locus.
    ContainedInBranch,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FactorMultiplicity {
    /// Monic factor over `Q`.
    pub factor: Poly<Rational>,
    pub multiplicity: u32,
    /// True when the factor is known to be irreducible over `Q` (linear, or
    /// of degree 2 or 3 without rational roots).
    pub irreducible: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FourthPowerReport {
    pub composite: Poly<Rational>,
    pub factors: Vec<FactorMultiplicity>,
    pub constant: Rational,
    pub constant_is_rational_fourth_power: bool,
    /// `4·deg P - deg(F∘P)`, the order of vanishing at `r = ∞`.
    pub multiplicity_at_infinity: u32,
    pub degree_divisible_by_four: bool,
    pub verdict: SplitVerdict,
}

impl FourthPowerReport {
    pub fn to_json(&self) -> Value {
        json!({
            "verdict": format!("{:?}", self.verdict),
            "composite": self.composite.to_string(),
            "factors": self.factors.iter().map(|f| json!({
                "factor": f.factor.render("r", &[]),
                "coefficients": poly_to_json(&f.factor),
                "multiplicity": f.multiplicity,
                "irreducible": f.irreducible,
            })).collect::<Vec<_>>(),
            "constant": rational_to_json(&self.constant),
            "constant_is_rational_fourth_power": self.constant_is_rational_fourth_power,
            "multiplicity_at_infinity": self.multiplicity_at_infinity,
            "degree_divisible_by_four": self.degree_divisible_by_four,
        })
    }

    pub fn multiplicity_of(&self, factor: &Poly<Rational>) -> Option<u32> {
        let m = factor.monic();
        self.factors.iter().find(|f| f.factor == m).map(|f| f.multiplicity)
    }
}

/// Decides whether `F∘P` is a fourth power in `C[r]` from the multiplicities
/// of its factors, including the point `r = ∞`.
pub fn fourth_power_test(f: &MultiPoly<Rational>, p: &Parametrization) -> Result<FourthPowerReport> {
    if !f.is_homogeneous() || f.total_degree() != 4 {
        return Err(CoreError::InvalidInput("F must be a homogeneous quartic".into()));
    }
    let composite = compose_plane(f, p)?;
    if composite.is_zero() {
        return Ok(FourthPowerReport {
            composite,
            factors: Vec::new(),
            constant: Rational::zero(),
            constant_is_rational_fourth_power: true,
            multiplicity_at_infinity: 0,
            degree_divisible_by_four: true,
            verdict: SplitVerdict::ContainedInBranch,
        });
    }
    let deg = composite.degree().unwrap_or(0);
    let inf = (4 * p.degree() - deg) as u32;
    let mut factors = Vec::new();
    for (a, e) in composite.squarefree_decomposition()?.factors {
        let (roots, rest) = a.split_linear();
        for r in roots {
            factors.push(FactorMultiplicity { factor: Poly::linear_root(&r), multiplicity: e, irreducible: true });
        }
        if !rest.is_constant() {
            let small = rest.degree().is_some_and(|d| d <= 3);
            factors.push(FactorMultiplicity { factor: rest.monic(), multiplicity: e, irreducible: small });
        }
    }
    factors.sort_by(|a, b| {
        (a.factor.degree(), a.factor.coeffs().to_vec()).partial_cmp(&(b.factor.degree(), b.factor.coeffs().to_vec())).unwrap()
    });
    let constant = composite.leading();
    let constant_is_rational_fourth_power = constant.fourth_root().is_some();
    let splits = inf % 4 == 0 && factors.iter().all(|f| f.multiplicity % 4 == 0);
    Ok(FourthPowerReport {
        composite,
        factors,
        constant,
        constant_is_rational_fourth_power,
        multiplicity_at_infinity: inf,
        degree_divisible_by_four: deg % 4 == 0,
        verdict: if splits { SplitVerdict::Splits } else { SplitVerdict::DoesNotSplit },
    })
}

/// The three component polynomials `Q∘P`, `L∘P`, `M∘P` of a quartic family.
pub fn component_images(fam: &QuarticFamily<Rational>, p: &Parametrization) -> Result<[Poly<Rational>; 3]> {
    Ok([compose_plane(&fam.conic, p)?, compose_plane(&fam.line_l, p)?, compose_plane(&fam.line_m, p)?])
}

/// The two sections over `K(r)` obtained from a split 2-section.
#[derive(Clone, Debug)]
pub struct TwoSectionLift<K: Field> {
    pub alpha: Rational,
    /// `κ` with `λ = κr²`.
    pub lambda_scale: Rational,
    /// `W = ¼λg²(z₁² - 1) = c₀q(r)⁴` with `q` monic in numerator and denominator.
    pub c0: Rational,
    pub q: RationalFunction<Rational>,
    pub root: K,
    /// `v² = u³ - f(λ(r))u`.
    pub curve: CubicModel<RationalFunction<K>>,
    pub first: FunctionFieldPoint<K>,
    pub second: FunctionFieldPoint<K>,
    pub checks: Vec<VerificationReport>,
}

fn qf(p: &Poly<Rational>) -> RationalFunction<Rational> {
    RationalFunction::from_poly(p.clone())
}

fn lift_qf<K: Field>(f: &RationalFunction<Rational>) -> Result<RationalFunction<K>> {
    Ok(f.map_coeffs(K::from_rational)?)
}

fn reflect_point<K: Field>(p: &FunctionFieldPoint<K>) -> FunctionFieldPoint<K> {
    match p {
        EcPoint::Infinity => EcPoint::Infinity,
        EcPoint::Affine(u, v) => EcPoint::Affine(u.reflect(), v.reflect()),
    }
}

/// Writes `W = c·q⁴` with `q` a ratio of monic polynomials.
fn fourth_root_part(w: &RationalFunction<Rational>) -> Result<(Rational, RationalFunction<Rational>)> {
    let part = |p: &Poly<Rational>| -> Result<Poly<Rational>> {
        let mut acc = Poly::one();
        for (a, e) in p.squarefree_decomposition()?.factors {
            if e % 4 != 0 {
                return Err(CoreError::Precondition(format!("factor {a} of W has multiplicity {e}")));
            }
            acc = &acc * &a.pow(e / 4);
        }
        Ok(acc)
    };
    let q = RationalFunction::new(part(w.num())?, part(w.den())?)?;
    let c = w.num().leading() / w.den().leading();
    Ok((c, q))
}

/// Lifts a 2-section `P` of the fibration with parameter `λ = y/x` to two
/// sections over `K(r)` through the chain `z₁ = (2z/x - (λ² - 2λ - α))/g`,
/// `W = ¼λg²(z₁² - 1) = c₀q⁴`, `w = root·q`,
/// `u = (λg)²(z₁+1)/(2w²)`, `v = (λg)³(z₁+1)/(2w³)`.
/// `root` must satisfy `root⁴ = c₀`; the second section is the first with
/// `r ↦ -r`.
pub fn lift_two_section<K: Field>(alpha: &Rational, p: &Parametrization, root: &K) -> Result<TwoSectionLift<K>> {
    let fam = build_quartic(alpha.clone());
    let split = fourth_power_test(&fam.equation, p)?;
    if split.verdict != SplitVerdict::Splits {
        return Err(CoreError::Precondition(format!("the curve does not split: {:?}", split.verdict)));
    }
    let lambda = RationalFunction::new(p.y.clone(), p.x.clone())?;
    let kappa = match lambda.as_poly() {
        Some(l) if l.degree() == Some(2) && l.coeff(0).is_zero() && l.coeff(1).is_zero() => l.coeff(2),
        _ => {
            return Err(CoreError::Precondition(format!(
                "lambda = y/x = {} is not a multiple of r^2",
                lambda.render(&["r"])
            )))
        }
    };
    let q = |n: i64| RationalFunction::<Rational>::from_int(n);
    let a = RationalFunction::constant(alpha.clone());
    let g = lambda.clone() * lambda.clone() + q(2) * lambda.clone() + a.clone();
    let shift = lambda.clone() * lambda.clone() - q(2) * lambda.clone() - a;
    let zx = RationalFunction::new(p.z.clone(), p.x.clone())?;
    let z1 = (q(2) * zx - shift).try_div(&g)?;
    let w4 = RationalFunction::constant(k3_algebra::rat(1, 4))
        * lambda.clone()
        * g.clone()
        * g.clone()
        * (z1.clone() * z1.clone() - q(1));
    // W is -F(x, y, z)/x⁴.
    let fx4 = (compose_plane(&fam.equation, p)?, p.x.pow(4));
    let w_check = (qf(&fx4.0).try_div(&qf(&fx4.1))? + w4.clone()).is_zero();
    let (c0, qr) = fourth_root_part(&w4)?;
    if root.pow(4) != K::from_rational(&c0) {
        return Err(CoreError::InvalidInput(format!("root^4 must equal {c0}")));
    }
    let lam_k: RationalFunction<K> = lift_qf(&lambda)?;
    let lg: RationalFunction<K> = lift_qf(&(lambda.clone() * g))?;
    let zp1: RationalFunction<K> = lift_qf(&(z1 + q(1)))?;
    let w = RationalFunction::constant(root.clone()) * lift_qf(&qr)?;
    let two = RationalFunction::<K>::from_int(2);
    let u = (lg.pow(2) * zp1.clone()).try_div(&(two.clone() * w.pow(2)))?;
    let v = (lg.pow(3) * zp1).try_div(&(two * w.pow(3)))?;
    let f_lam = family_f(K::from_rational(alpha)).eval_in(&lam_k, |c| RationalFunction::constant(c.clone()));
    let curve = CubicModel::new(RationalFunction::zero(), -f_lam, RationalFunction::zero());
    let first = EcPoint::Affine(u, v);
    let second = reflect_point(&first);
    let checks = vec![
        VerificationReport::check("W = -F(x, y, z)/x^4", w_check, || "mismatch".into()),
        VerificationReport::check("first section lies on the curve", curve.contains(&first), || "residual nonzero".into()),
        VerificationReport::check("second section lies on the curve", curve.contains(&second), || {
            "residual nonzero".into()
        }),
        VerificationReport::check("sections are distinct", first != second, || "r -> -r fixes the section".into()),
    ];
    Ok(TwoSectionLift {
        alpha: alpha.clone(),
        lambda_scale: kappa,
        c0,
        q: qr,
        root: root.clone(),
        curve,
        first,
        second,
        checks,
    })
}

/// A section of `v² = u³ - f(λ)u` over `K(λ)`.
#[derive(Clone, Debug)]
pub struct LambdaSection<K: Field> {
    pub u: RationalFunction<K>,
    pub v: RationalFunction<K>,
    pub curve: CubicModel<RationalFunction<K>>,
    pub checks: Vec<VerificationReport>,
}

/// Adds the two lifted sections, checks that the sum is fixed by `r ↦ -r`
/// and rewrites it in `λ = κr²`.
pub fn sum_sections<K: Field>(lift: &TwoSectionLift<K>) -> Result<LambdaSection<K>> {
    if reflect_point(&lift.first) != lift.second {
        return Err(CoreError::Precondition("the pair is not exchanged by r -> -r".into()));
    }
    let sum = lift.curve.add(&lift.first, &lift.second)?;
    let (u, v) = match &sum {
        EcPoint::Affine(u, v) => (u.clone(), v.clone()),
        EcPoint::Infinity => return Err(CoreError::Precondition("the sections are opposite".into())),
    };
    let fixed = u.is_even() && v.is_even();
    if !fixed {
        return Err(CoreError::Precondition("the sum is not fixed by r -> -r".into()));
    }
    let kinv = K::from_rational(&lift.lambda_scale).try_inv()?;
    let s = RationalFunction::from_poly(Poly::monomial(kinv, 1));
    let in_lambda = |f: &RationalFunction<K>| -> Result<RationalFunction<K>> {
        let h = f.even_part_in_square().ok_or_else(|| CoreError::Precondition("odd coordinate".into()))?;
        Ok(h.compose(&s)?)
    };
    let (ul, vl) = (in_lambda(&u)?, in_lambda(&v)?);
    let f = family_f(K::from_rational(&lift.alpha));
    let curve = CubicModel::new(RationalFunction::zero(), -RationalFunction::from_poly(f), RationalFunction::zero());
    let pt = EcPoint::Affine(ul.clone(), vl.clone());
    let checks = vec![
        VerificationReport::check("sum is fixed by r -> -r", fixed, || "not even".into()),
        VerificationReport::check("sum lies on v^2 = u^3 - f(lambda)u", curve.contains(&pt), || {
            "residual nonzero".into()
        }),
    ];
    Ok(LambdaSection { u: ul, v: vl, curve, checks })
}

/// The closed form of the section for `α = 81/49` over `Q(θ)`, `θ⁴ = 7`:
/// `u = (27+7λ)²(81+98λ+49λ²)/(2⁴·7^{7/2})`,
/// `v = (81-7λ)(27+7λ)(81+98λ+49λ²)²/(2⁶·7^{21/4})`.
pub fn closed_form_section<K: Field>(theta: &K) -> Result<(RationalFunction<K>, RationalFunction<K>)> {
    let p = |cs: &[i64]| Poly::<K>::from_coeffs(cs.iter().map(|&c| K::from_int(c)).collect());
    let a = p(&[27, 7]);
    let b = p(&[81, 98, 49]);
    let c = p(&[81, -7]);
    let du = K::from_int(16 * 343) * theta.pow(2);
    let dv = K::from_int(64 * 16807) * theta.clone();
    let u = RationalFunction::from_poly(&a.pow(2) * &b).try_div(&RationalFunction::constant(du))?;
    let v = RationalFunction::from_poly(&(&c * &a) * &b.pow(2)).try_div(&RationalFunction::constant(dv))?;
    Ok((u, v))
}

/// The 2-section `x = 49(r-1)²`, `y = 63r²(r-1)²`, `z = 3r²(48 - 32r + 75r² - 54r³ + 27r⁴)`.
pub fn psi_curve() -> Parametrization {
    let p = |cs: &[i64]| Poly::<Rational>::from_ints(cs);
    let rm1sq = p(&[1, -2, 1]);
    Parametrization::new(
        rm1sq.scale(&Rational::from_integer(49.into())),
        &p(&[0, 0, 63]) * &rm1sq,
        &p(&[0, 0, 3]) * &p(&[48, -32, 75, -54, 27]),
    )
    .expect("valid")
}

/// `x = 49(r-9)²`, `y = 63r(r-9)²`, `z = 9r²(729 + 94r + 9r²)`.
pub fn zeta_curve() -> Parametrization {
    let p = |cs: &[i64]| Poly::<Rational>::from_ints(cs);
    let sq = p(&[81, -18, 1]);
    Parametrization::new(
        sq.scale(&Rational::from_integer(49.into())),
        &p(&[0, 63]) * &sq,
        &p(&[0, 0, 9]) * &p(&[729, 94, 9]),
    )
    .expect("valid")
}
