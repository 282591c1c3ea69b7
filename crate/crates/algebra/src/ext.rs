//! Simple algebraic extensions `K[θ]/(m(θ))`.
//!
//! Irreducibility of `m` is assumed. When an inversion meets a nontrivial
//! common factor with `m`, the failure carries that factor as a witness.
//! Extensions nest, so a two-level tower is `AlgExt<AlgExt<Q>>`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::poly::Poly;

/// Defining data of an extension: a monic modulus and the generator's name.
#[derive(Debug, PartialEq)]
pub struct ExtContext<K> {
    modulus: Poly<K>,
    name: String,
}

impl<K: Field> ExtContext<K> {
    pub fn new(modulus: Poly<K>, name: impl Into<String>) -> Result<Arc<Self>> {
        match modulus.degree() {
            Some(d) if d >= 2 => Ok(Arc::new(ExtContext {
                modulus: modulus.monic(),
                name: name.into(),
            })),
            _ => Err(AlgebraError::Configuration(
                "extension modulus must have degree at least 2".into(),
            )),
        }
    }

    pub fn modulus(&self) -> &Poly<K> {
        &self.modulus
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }
}

/// An element of `K[θ]/(m)`. Elements from the base field may omit the
/// context; it is adopted from the other operand on first contact.
#[derive(Clone)]
pub struct AlgExt<K> {
    ctx: Option<Arc<ExtContext<K>>>,
    coords: Poly<K>,
}

impl<K: Field> AlgExt<K> {
    pub fn from_base(c: K) -> Self {
        AlgExt { ctx: None, coords: Poly::constant(c) }
    }

    /// Builds `Σ coords[i] θ^i`, reduced modulo the defining polynomial.
    pub fn from_coords(ctx: &Arc<ExtContext<K>>, coords: Vec<K>) -> Self {
        Self::from_poly(ctx, Poly::from_coeffs(coords))
    }

    pub fn from_poly(ctx: &Arc<ExtContext<K>>, p: Poly<K>) -> Self {
        let coords = p.rem(&ctx.modulus).expect("modulus is nonzero");
        AlgExt { ctx: Some(ctx.clone()), coords }
    }

    pub fn generator(ctx: &Arc<ExtContext<K>>) -> Self {
        Self::from_poly(ctx, Poly::x())
    }

    pub fn context(&self) -> Option<&Arc<ExtContext<K>>> {
        self.ctx.as_ref()
    }

    /// Coordinates in the power basis, padded to the extension degree.
    pub fn coords(&self) -> Vec<K> {
        let n = self.ctx.as_ref().map_or(1, |c| c.degree());
        (0..n).map(|i| self.coords.coeff(i)).collect()
    }

    pub fn coord(&self, i: usize) -> K {
        self.coords.coeff(i)
    }

    pub fn as_poly(&self) -> &Poly<K> {
        &self.coords
    }

    /// The base-field value when the element lies in `K`.
    pub fn as_base(&self) -> Option<K> {
        self.coords.is_constant().then(|| self.coords.coeff(0))
    }

    /// Applies the `K`-algebra map sending `θ` to `image`. The caller is
    /// responsible for `image` being a root of the defining polynomial.
    pub fn substitute_generator(&self, image: &Self) -> Self {
        self.coords.eval_in(image, |c| Self::from_base(c.clone()))
    }

    fn join_ctx(a: &Option<Arc<ExtContext<K>>>, b: &Option<Arc<ExtContext<K>>>) -> Option<Arc<ExtContext<K>>> {
        match (a, b) {
            (Some(x), Some(y)) => {
                assert!(
                    Arc::ptr_eq(x, y) || x == y,
                    "operands live in different extensions ({} vs {})",
                    x.name,
                    y.name
                );
                Some(x.clone())
            }
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (None, None) => None,
        }
    }

    fn build(ctx: Option<Arc<ExtContext<K>>>, p: Poly<K>) -> Self {
        match ctx {
            Some(c) => Self::from_poly(&c, p),
            None => AlgExt { ctx: None, coords: p },
        }
    }
}

impl<K: Field> PartialEq for AlgExt<K> {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl<K: Field> fmt::Debug for AlgExt<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&["x", "t", "s"]))
    }
}

impl<K: Field> fmt::Display for AlgExt<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&["x", "t", "s"]))
    }
}

impl<K: Field> Zero for AlgExt<K> {
    fn zero() -> Self {
        AlgExt { ctx: None, coords: Poly::zero() }
    }
    fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }
}

impl<K: Field> One for AlgExt<K> {
    fn one() -> Self {
        Self::from_base(K::one())
    }
}

impl<K: Field> Add for AlgExt<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let ctx = Self::join_ctx(&self.ctx, &rhs.ctx);
        AlgExt { ctx, coords: &self.coords + &rhs.coords }
    }
}

impl<K: Field> Sub for AlgExt<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let ctx = Self::join_ctx(&self.ctx, &rhs.ctx);
        AlgExt { ctx, coords: &self.coords - &rhs.coords }
    }
}

impl<K: Field> Mul for AlgExt<K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let ctx = Self::join_ctx(&self.ctx, &rhs.ctx);
        Self::build(ctx, &self.coords * &rhs.coords)
    }
}

impl<K: Field> Neg for AlgExt<K> {
    type Output = Self;
    fn neg(self) -> Self {
        AlgExt { ctx: self.ctx, coords: -self.coords }
    }
}

impl<K: Field> Field for AlgExt<K> {
    fn try_inv(&self) -> Result<Self> {
        if self.coords.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let ctx = match &self.ctx {
            None => return Ok(Self::from_base(self.coords.coeff(0).try_inv()?)),
            Some(c) => c,
        };
        let (g, s, _) = self.coords.ext_gcd(&ctx.modulus);
        if !g.is_constant() {
            return Err(AlgebraError::Reducible {
                modulus: ctx.modulus.render(&ctx.name, &[]),
                factor: g.render(&ctx.name, &[]),
            });
        }
        Ok(Self::from_poly(ctx, s))
    }

    fn from_rational(q: &BigRational) -> Self {
        Self::from_base(K::from_rational(q))
    }

    fn as_rational(&self) -> Option<BigRational> {
        self.as_base()?.as_rational()
    }

    fn fourth_root(&self) -> Option<Self> {
        self.as_base()?.fourth_root().map(Self::from_base)
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coords().iter().map(|c| c.to_json()).collect())
    }

    fn render(&self, vars: &[&str]) -> String {
        let name = self.ctx.as_ref().map_or("θ", |c| c.name.as_str());
        self.coords.render(name, vars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    type E = AlgExt<BigRational>;

    fn gaussian() -> Arc<ExtContext<BigRational>> {
        ExtContext::new(Poly::from_ints(&[1, 0, 1]), "i").unwrap()
    }

    #[test]
    fn norm_of_one_plus_i() {
        let ctx = gaussian();
        let i = E::generator(&ctx);
        let a = E::one() + i.clone();
        let b = E::one() - i;
        assert_eq!(a * b, E::from_int(2));
    }

    #[test]
    fn fourth_root_of_seven_relation() {
        let ctx = ExtContext::new(Poly::from_ints(&[-7, 0, 0, 0, 1]), "t").unwrap();
        let t = E::generator(&ctx);
        let t2 = t.clone() * t;
        assert_eq!(t2.clone() * t2, E::from_int(7));
    }

    #[test]
    fn inverse_in_gaussian_rationals() {
        let ctx = gaussian();
        let a = E::one() + E::generator(&ctx);
        let inv = a.try_inv().unwrap();
        assert_eq!(inv, E::from_coords(&ctx, vec![rat(1, 2), rat(-1, 2)]));
        assert_eq!(inv * a, E::one());
    }

    #[test]
    fn reducible_modulus_gives_witness() {
        let ctx = ExtContext::new(Poly::from_ints(&[-1, 0, 1]), "e").unwrap();
        let a = E::generator(&ctx) - E::one();
        match a.try_inv() {
            Err(AlgebraError::Reducible { factor, .. }) => assert_eq!(factor, "e - 1"),
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn conjugation_by_generator_image() {
        let ctx = gaussian();
        let i = E::generator(&ctx);
        let z = E::from_int(3) + E::from_int(2) * i.clone();
        assert_eq!(z.substitute_generator(&(-i.clone())), E::from_int(3) - E::from_int(2) * i);
    }
}
