//! The plane quartics `C_α = Q·L·M_α` with `Q: y² - xz`, `L: y`,
//! `M_α: αx + 2y + z`, their nodes, stability and the pencil substitution.

use std::fmt;

use k3_algebra::{rat, AlgExt, ExtContext, Field, MultiPoly, Poly, PolyRing, QuotientContext, Rational};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{CoreError, Result};
use crate::report::VerificationReport;

/// A value of the family parameter, including the point at infinity.
#[derive(Clone, Debug, PartialEq)]
pub enum AlphaValue {
    Finite(Rational),
    Infinity,
}

impl AlphaValue {
    /// Accepts `p/q`, an integer, or `inf`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" || t.eq_ignore_ascii_case("infinity") {
            return Ok(AlphaValue::Infinity);
        }
        Ok(AlphaValue::Finite(k3_algebra::parse_rational(t)?))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            AlphaValue::Finite(a) => Some(a),
            AlphaValue::Infinity => None,
        }
    }
}

impl fmt::Display for AlphaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaValue::Finite(a) => write!(f, "{a}"),
            AlphaValue::Infinity => f.write_str("inf"),
        }
    }
}

/// The three components and their product, as polynomials in `(x, y, z)`.
#[derive(Clone, Debug)]
pub struct QuarticFamily<K> {
    pub alpha: K,
    pub ring: PolyRing,
    pub conic: MultiPoly<K>,
    pub line_l: MultiPoly<K>,
    pub line_m: MultiPoly<K>,
    pub equation: MultiPoly<K>,
}

pub fn plane_ring() -> PolyRing {
    PolyRing::new(&["x", "y", "z"])
}

/// Builds `(y² - xz)·y·(αx + 2y + z)` over any field containing `alpha`.
pub fn build_quartic<K: Field>(alpha: K) -> QuarticFamily<K> {
    let ring = plane_ring();
    let (x, y, z): (MultiPoly<K>, MultiPoly<K>, MultiPoly<K>) = (ring.v("x"), ring.v("y"), ring.v("z"));
    let conic = &(&y * &y) - &(&x * &z);
    let line_m = &(&x.scale(&alpha) + &y.scale(&K::from_int(2))) + &z;
    from_components(alpha, ring, conic, y, line_m)
}

/// The member at `α = ∞`, where `M_∞` is the line `x = 0`.
pub fn build_quartic_at_infinity() -> QuarticFamily<Rational> {
    let ring = plane_ring();
    let (x, y, z): (MultiPoly<Rational>, MultiPoly<Rational>, MultiPoly<Rational>) =
        (ring.v("x"), ring.v("y"), ring.v("z"));
    let conic = &(&y * &y) - &(&x * &z);
    from_components(Rational::zero(), ring, conic, y, x)
}

pub fn build_quartic_value(alpha: &AlphaValue) -> QuarticFamily<Rational> {
    match alpha {
        AlphaValue::Finite(a) => build_quartic(a.clone()),
        AlphaValue::Infinity => build_quartic_at_infinity(),
    }
}

fn from_components<K: Field>(
    alpha: K,
    ring: PolyRing,
    conic: MultiPoly<K>,
    line_l: MultiPoly<K>,
    line_m: MultiPoly<K>,
) -> QuarticFamily<K> {
    let equation = &(&conic * &line_l) * &line_m;
    QuarticFamily { alpha, ring, conic, line_l, line_m, equation }
}

/// Evaluates a polynomial at a point with coordinates in its coefficient field.
pub fn eval_point<K: Field>(p: &MultiPoly<K>, pt: &[K]) -> K {
    p.terms().fold(K::zero(), |acc, (e, c)| {
        let m = e
            .iter()
            .zip(pt)
            .fold(c.clone(), |m, (&k, v)| m * v.pow(k));
        acc + m
    })
}

impl<K: Field> QuarticFamily<K> {
    /// Checks homogeneity, divisibility by `y` and by `y² - xz`, and that
    /// the expanded equation equals the product of the components.
    pub fn factor_check(&self) -> VerificationReport {
        let y_idx = 1;
        let by_y = self.equation.terms().all(|(e, _)| e[y_idx] > 0);
        let conic_ctx = QuotientContext::with_relations(
            self.ring.clone(),
            vec![("y", 2, &self.ring.v::<K>("x") * &self.ring.v("z"))],
        )
        .expect("single relation");
        let by_conic = conic_ctx.is_zero(&self.equation).unwrap_or(false);
        let product = &(&self.conic * &self.line_l) * &self.line_m;
        let parts = vec![
            VerificationReport::check("homogeneous of degree 4", self.equation.is_homogeneous() && self.equation.total_degree() == 4, || {
                format!("degree {}", self.equation.total_degree())
            }),
            VerificationReport::check("divisible by y", by_y, || "a term misses y".into()),
            VerificationReport::check("divisible by y^2 - x*z", by_conic, || {
                "nonzero remainder modulo y^2 - x*z".into()
            }),
            VerificationReport::check("equals conic*line*line", product == self.equation, || {
                (&product - &self.equation).render(&["a"])
            }),
        ];
        VerificationReport::all("quartic factorization", parts)
    }

    /// Order of vanishing of the equation at a projective point.
    pub fn multiplicity_at(&self, pt: &[K; 3]) -> u32 {
        let j = pt.iter().position(|c| !c.is_zero()).expect("projective point");
        let inv = pt[j].try_inv().expect("nonzero");
        let p: Vec<K> = pt.iter().map(|c| c.clone() * inv.clone()).collect();
        // Affine chart coordinate_j = 1, shifted so the point sits at the origin.
        let images: Vec<MultiPoly<K>> = (0..3)
            .map(|i| {
                if i == j {
                    self.ring.constant(K::one())
                } else {
                    &self.ring.var::<K>(i) + &self.ring.constant(p[i].clone())
                }
            })
            .collect();
        let local = self.equation.eval_with(&images).expect("three images");
        local
            .terms()
            .map(|(e, _)| e.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, k)| k).sum::<u32>())
            .min()
            .unwrap_or(u32::MAX)
    }

    fn gradient(&self, comp: &MultiPoly<K>, pt: &[K]) -> [K; 3] {
        [0, 1, 2].map(|i| eval_point(&comp.derivative(i), pt))
    }

    /// A node at `pt` where exactly the components `a` and `b` meet,
    /// transversally.
    fn transversal_at(&self, pt: &[K; 3], a: &MultiPoly<K>, b: &MultiPoly<K>) -> std::result::Result<(), String> {
        let comps = [&self.conic, &self.line_l, &self.line_m];
        let through = comps.iter().filter(|c| eval_point(c, pt).is_zero()).count();
        if through != 2 {
            return Err(format!("{through} components pass through the point"));
        }
        let (ga, gb) = (self.gradient(a, pt), self.gradient(b, pt));
        let cross = [
            ga[1].clone() * gb[2].clone() - ga[2].clone() * gb[1].clone(),
            ga[2].clone() * gb[0].clone() - ga[0].clone() * gb[2].clone(),
            ga[0].clone() * gb[1].clone() - ga[1].clone() * gb[0].clone(),
        ];
        if cross.iter().all(|c| c.is_zero()) {
            return Err("tangent directions coincide".into());
        }
        Ok(())
    }
}

/// Why a member of the family fails to be stable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnstableReason {
    /// `M_1` is tangent to `Q` at `(1:-1:1)`.
    Tacnode,
    /// `M_0` passes through `(1:0:0) ∈ Q ∩ L`.
    TriplePoint,
    /// `M_∞` is tangent to `Q` at `p₁ = (0:0:1)`.
    TangentAtP1,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stability {
    Stable,
    Unstable(UnstableReason),
}

impl Stability {
    pub fn to_json(&self) -> Value {
        match self {
            Stability::Stable => json!({"verdict": "Stable"}),
            Stability::Unstable(r) => {
                let reason = match r {
                    UnstableReason::Tacnode => "tacnode",
                    UnstableReason::TriplePoint => "triple point",
                    UnstableReason::TangentAtP1 => "tangent at p1",
                };
                json!({"verdict": "Unstable", "reason": reason})
            }
        }
    }
}

/// Singular loci of `C_α`. The two points of `Q ∩ M_α` are the roots of
/// `t² + 2t + α` under `t ↦ (1:t:t²)`; explicit coordinates are listed only
/// when the roots are rational.
#[derive(Clone, Debug)]
pub struct NodeList {
    pub alpha: AlphaValue,
    pub q_cap_l: Vec<[Rational; 3]>,
    pub l_cap_m: [Rational; 3],
    pub q_cap_m_poly: Option<Poly<Rational>>,
    pub q_cap_m_discriminant: Option<Rational>,
    pub q_cap_m_points: Vec<[Rational; 3]>,
    /// Number of distinct singular points.
    pub distinct: usize,
    pub degeneracy: Option<String>,
}

fn pt(a: i64, b: i64, c: i64) -> [Rational; 3] {
    [rat(a, 1), rat(b, 1), rat(c, 1)]
}

fn same_point(p: &[Rational; 3], q: &[Rational; 3]) -> bool {
    (0..3).all(|i| (0..3).all(|j| p[i].clone() * q[j].clone() == p[j].clone() * q[i].clone()))
}

pub fn singular_points(alpha: &AlphaValue) -> NodeList {
    let q_cap_l = vec![pt(0, 0, 1), pt(1, 0, 0)];
    match alpha {
        AlphaValue::Infinity => NodeList {
            alpha: alpha.clone(),
            q_cap_l,
            l_cap_m: pt(0, 0, 1),
            q_cap_m_poly: None,
            q_cap_m_discriminant: None,
            q_cap_m_points: vec![pt(0, 0, 1)],
            distinct: 2,
            degeneracy: Some("M meets Q only at p1 = (0:0:1), with multiplicity 2".into()),
        },
        AlphaValue::Finite(a) => {
            let quad = Poly::from_coeffs(vec![a.clone(), rat(2, 1), rat(1, 1)]);
            let disc = rat(4, 1) * (Rational::one() - a.clone());
            let roots = quad.split_linear().0;
            let q_cap_m_points: Vec<[Rational; 3]> = roots
                .iter()
                .map(|t| [Rational::one(), t.clone(), t.clone() * t.clone()])
                .collect();
            let l_cap_m = [Rational::one(), Rational::zero(), -a.clone()];
            let mut all: Vec<[Rational; 3]> = q_cap_l.clone();
            all.push(l_cap_m.clone());
            all.extend(q_cap_m_points.iter().cloned());
            let mut distinct: Vec<[Rational; 3]> = Vec::new();
            for p in &all {
                if !distinct.iter().any(|q| same_point(p, q)) {
                    distinct.push(p.clone());
                }
            }
            // Irrational roots contribute two further distinct points.
            let irrational_pair = if q_cap_m_points.is_empty() { 2 } else { 0 };
            let mut degeneracy = None;
            if disc.is_zero() {
                degeneracy = Some("t^2 + 2t + alpha has a double root: M is tangent to Q".into());
            } else if q_cap_l.iter().any(|p| same_point(p, &l_cap_m)) {
                degeneracy = Some("L ∩ M lies on Q ∩ L".into());
            }
            NodeList {
                alpha: alpha.clone(),
                q_cap_l,
                l_cap_m,
                q_cap_m_poly: Some(quad),
                q_cap_m_discriminant: Some(disc),
                q_cap_m_points,
                distinct: distinct.len() + irrational_pair,
                degeneracy,
            }
        }
    }
}

impl NodeList {
    pub fn to_json(&self) -> Value {
        let p = |v: &[Rational; 3]| json!(v.iter().map(|c| c.to_string()).collect::<Vec<_>>());
        json!({
            "alpha": self.alpha.to_string(),
            "Q_cap_L": self.q_cap_l.iter().map(p).collect::<Vec<_>>(),
            "L_cap_M": p(&self.l_cap_m),
            "Q_cap_M": {
                "polynomial": self.q_cap_m_poly.as_ref().map(|q| q.render("t", &[])),
                "discriminant": self.q_cap_m_discriminant.as_ref().map(|d| d.to_string()),
                "rational_points": self.q_cap_m_points.iter().map(p).collect::<Vec<_>>(),
            },
            "distinct": self.distinct,
            "degeneracy": self.degeneracy,
        })
    }
}

/// Stable exactly away from `α ∈ {0, 1, ∞}`; derived from the incidence
/// data of [`singular_points`] rather than from a hardcoded list.
pub fn stability(alpha: &AlphaValue) -> Stability {
    let nodes = singular_points(alpha);
    match alpha {
        AlphaValue::Infinity => Stability::Unstable(UnstableReason::TangentAtP1),
        AlphaValue::Finite(_) => {
            if nodes.q_cap_m_discriminant.as_ref().map_or(false, |d| d.is_zero()) {
                Stability::Unstable(UnstableReason::Tacnode)
            } else if nodes.q_cap_l.iter().any(|p| same_point(p, &nodes.l_cap_m)) {
                Stability::Unstable(UnstableReason::TriplePoint)
            } else {
                Stability::Stable
            }
        }
    }
}

/// Confirms that a stable member has five ordinary double points: each
/// is on exactly two components that cross with distinct tangents. The
/// points of `Q ∩ M` are checked over `Q[t]/(t² + 2t + α)` when irrational.
pub fn verify_ordinary_nodes(alpha: &Rational) -> Result<VerificationReport> {
    let a = AlphaValue::Finite(alpha.clone());
    if stability(&a) != Stability::Stable {
        return Err(CoreError::Precondition(format!("alpha = {alpha} is not stable")));
    }
    let nodes = singular_points(&a);
    let fam = build_quartic(alpha.clone());
    let mut parts = Vec::new();
    let mut check = |label: String, r: std::result::Result<(), String>| {
        parts.push(match r {
            Ok(()) => VerificationReport::pass(label),
            Err(w) => VerificationReport::fail(label, w),
        });
    };
    for p in &nodes.q_cap_l {
        check(format!("node {:?} on Q and L", p), fam.transversal_at(p, &fam.conic, &fam.line_l));
    }
    check(
        "node L∩M".to_string(),
        fam.transversal_at(&nodes.l_cap_m, &fam.line_l, &fam.line_m),
    );
    if nodes.q_cap_m_points.is_empty() {
        let ctx = ExtContext::new(nodes.q_cap_m_poly.clone().expect("finite alpha"), "t")?;
        let fam_e = build_quartic(AlgExt::from_base(alpha.clone()));
        let t = AlgExt::generator(&ctx);
        let conj = AlgExt::from_int(-2) - t.clone();
        for (label, root) in [("Q∩M root t", t), ("Q∩M root -2-t", conj)] {
            let p = [AlgExt::one(), root.clone(), root.clone() * root];
            check(label.to_string(), fam_e.transversal_at(&p, &fam_e.conic, &fam_e.line_m));
        }
    } else {
        for p in &nodes.q_cap_m_points {
            check(format!("node {:?} on Q and M", p), fam.transversal_at(p, &fam.conic, &fam.line_m));
        }
    }
    let count_ok = nodes.distinct == 5;
    parts.push(VerificationReport::check("five distinct nodes", count_ok, || {
        format!("{} distinct singular points", nodes.distinct)
    }));
    Ok(VerificationReport::all("ordinary nodes", parts))
}

/// Verifies `λ(z - λ²)(z + 2λ + α) = ¼λ(λ² + 2λ + α)²(z₁² - 1)` under
/// `z = h(a - b)z₁ + h(a + b)` with `a = λ²`, `b = -(2λ + α)`; the
/// identity holds for `h = ½`; other values serve as negative controls.
pub fn pencil_substitution_check<K: Field>(alpha: K, half: &Rational) -> VerificationReport {
    let ring = PolyRing::new(&["lambda", "z1"]);
    let lam: MultiPoly<K> = ring.v("lambda");
    let z1: MultiPoly<K> = ring.v("z1");
    let a = lam.pow(2);
    let b = -(&lam.scale(&K::from_int(2)) + &ring.constant(alpha.clone()));
    let h = K::from_rational(half);
    let z = &(&(&a - &b) * &z1).scale(&h) + &(&a + &b).scale(&h);
    let lhs = &(&lam * &(&z - &a)) * &(&z - &b);
    let g = &(&lam.pow(2) + &lam.scale(&K::from_int(2))) + &ring.constant(alpha.clone());
    let rhs = (&(&lam * &g.pow(2)) * &(&z1.pow(2) - &ring.int(1))).scale(&K::from_rational(&rat(1, 4)));
    let residual = &lhs - &rhs;

    // Restricting the quartic to the line y = λx, x = 1 gives −lhs.
    let fam = build_quartic(alpha);
    let images = vec![ring.int(1), lam.clone(), z.clone()];
    let restricted = fam.equation.eval_with(&images).expect("three images");
    let sign_ok = (&restricted + &lhs).is_zero();

    let name = format!("pencil substitution (h = {half})");
    let mut rep = VerificationReport::check(name, residual.is_zero(), || {
        format!("residual {}", residual.render(&["alpha"]))
    });
    if sign_ok {
        rep = rep.with_note("C(1, lambda, z) = -lambda*(z - lambda^2)*(z + 2*lambda + alpha)");
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use k3_algebra::QFunc;

    #[test]
    fn special_member_vanishes_at_p2() {
        let fam = build_quartic(rat(81, 49));
        assert!(eval_point(&fam.equation, &pt(1, 0, 0)).is_zero());
        assert!(fam.factor_check().pass);
    }

    #[test]
    fn triple_point_at_zero() {
        let fam = build_quartic(rat(0, 1));
        assert!(fam.multiplicity_at(&pt(1, 0, 0)) >= 3);
        let fam = build_quartic(rat(5, 1));
        assert_eq!(fam.multiplicity_at(&pt(1, 0, 0)), 2);
    }

    #[test]
    fn stability_table() {
        assert_eq!(stability(&AlphaValue::Finite(rat(81, 49))), Stability::Stable);
        assert_eq!(stability(&AlphaValue::Finite(rat(1, 1))), Stability::Unstable(UnstableReason::Tacnode));
        assert_eq!(stability(&AlphaValue::Finite(rat(0, 1))), Stability::Unstable(UnstableReason::TriplePoint));
        assert_eq!(stability(&AlphaValue::Infinity), Stability::Unstable(UnstableReason::TangentAtP1));
    }

    #[test]
    fn tacnode_point() {
        let n = singular_points(&AlphaValue::Finite(rat(1, 1)));
        assert_eq!(n.q_cap_m_points, vec![pt(1, -1, 1)]);
        assert_eq!(n.q_cap_m_discriminant, Some(rat(0, 1)));
        let n0 = singular_points(&AlphaValue::Finite(rat(0, 1)));
        assert_eq!(n0.l_cap_m, pt(1, 0, 0));
    }

    #[test]
    fn nodes_are_ordinary() {
        for a in [rat(81, 49), rat(5, 1), rat(-3, 1), rat(1, 2), rat(-1, 7)] {
            let r = verify_ordinary_nodes(&a).unwrap();
            assert!(r.pass, "{a}: {:?}", r.witness);
        }
    }

    #[test]
    fn pencil_identity_symbolic_and_control() {
        let alpha = QFunc::var();
        assert!(pencil_substitution_check(alpha.clone(), &rat(1, 2)).pass);
        assert!(!pencil_substitution_check(alpha, &rat(1, 3)).pass);
        assert!(pencil_substitution_check(rat(81, 49), &rat(1, 2)).pass);
    }

    #[test]
    fn symbolic_family_is_over_q_alpha() {
        let fam = build_quartic(QFunc::var());
        assert!(fam.factor_check().pass);
        let gen = singular_points(&AlphaValue::Finite(rat(3, 7)));
        assert_eq!(gen.distinct, 5);
    }
}
