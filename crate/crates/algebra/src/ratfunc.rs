//! Rational functions in one variable, kept in lowest terms with a monic
//! denominator. Used both as a field of transcendentals (`Q(α)`, `Q(β)`) and
//! as coordinate functions on curves.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::poly::{is_compound, Poly};

#[derive(Clone, PartialEq)]
pub struct RationalFunction<K> {
    num: Poly<K>,
    den: Poly<K>,
}

impl<K: Field> RationalFunction<K> {
    pub fn new(num: Poly<K>, den: Poly<K>) -> Result<Self> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly<K>, den: Poly<K>) -> Self {
        if num.is_zero() {
            return Self::from_poly(Poly::zero());
        }
        let g = num.gcd(&den);
        let mut n = num.exact_div(&g).expect("gcd divides");
        let mut d = den.exact_div(&g).expect("gcd divides");
        let lc = d.leading().try_inv().expect("nonzero");
        n = n.scale(&lc);
        d = d.scale(&lc);
        RationalFunction { num: n, den: d }
    }

    pub fn from_poly(p: Poly<K>) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    pub fn constant(c: K) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly<K> {
        &self.num
    }

    pub fn den(&self) -> &Poly<K> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The underlying polynomial when the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly<K>> {
        self.is_polynomial().then_some(&self.num)
    }

    /// The constant value when the function has degree 0.
    pub fn as_constant(&self) -> Option<K> {
        (self.is_polynomial() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    /// Evaluates at a point of `K`; fails on a pole.
    pub fn eval(&self, x: &K) -> Result<K> {
        self.num.eval(x).try_div(&self.den.eval(x))
    }

    /// `self(q)` for another rational function `q`.
    pub fn compose(&self, q: &Self) -> Result<Self> {
        let n = self.num.eval_in(q, |c| Self::constant(c.clone()));
        let d = self.den.eval_in(q, |c| Self::constant(c.clone()));
        n.try_div(&d)
    }

    /// Maps coefficients through a ring homomorphism; the result is renormalized.
    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> Result<RationalFunction<L>> {
        RationalFunction::new(self.num.map_coeffs(&f), self.den.map_coeffs(&f))
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::normalized(n, &self.den * &self.den)
    }

    /// `self(-x)`
    pub fn reflect(&self) -> Self {
        let m = K::from_int(-1);
        Self::normalized(self.num.scale_var(&m), self.den.scale_var(&m))
    }

    /// True when `self(-x) = self(x)`.
    pub fn is_even(&self) -> bool {
        self.reflect() == *self
    }

    /// For an even function `φ(x)`, returns `ψ` with `ψ(x²) = φ(x)`.
    pub fn even_part_in_square(&self) -> Option<Self> {
        fn halve<K: Field>(p: &Poly<K>) -> Option<Poly<K>> {
            let mut terms = Vec::new();
            for (e, c) in p.terms() {
                if e % 2 == 1 {
                    return None;
                }
                terms.push((e / 2, c.clone()));
            }
            Some(Poly::from_terms(terms))
        }
        Some(Self::normalized(halve(&self.num)?, halve(&self.den)?))
    }
}

impl<K: Field> fmt::Debug for RationalFunction<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&["x", "t", "s"]))
    }
}

impl<K: Field> fmt::Display for RationalFunction<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&["x", "t", "s"]))
    }
}

impl<K: Field> Zero for RationalFunction<K> {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<K: Field> One for RationalFunction<K> {
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
}

impl<K: Field> Add for RationalFunction<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self::normalized(&self.num + &rhs.num, self.den);
        }
        Self::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<K: Field> Sub for RationalFunction<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<K: Field> Mul for RationalFunction<K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<K: Field> Neg for RationalFunction<K> {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction { num: -self.num, den: self.den }
    }
}

impl<K: Field> Field for RationalFunction<K> {
    fn try_inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    fn from_rational(q: &BigRational) -> Self {
        Self::constant(K::from_rational(q))
    }

    fn as_rational(&self) -> Option<BigRational> {
        self.as_constant()?.as_rational()
    }

    fn fourth_root(&self) -> Option<Self> {
        self.as_constant()?.fourth_root().map(Self::constant)
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "num": crate::json::poly_to_json(&self.num),
            "den": crate::json::poly_to_json(&self.den),
        })
    }

    fn render(&self, vars: &[&str]) -> String {
        let (var, inner) = match vars.split_first() {
            Some((v, rest)) => (*v, rest),
            None => ("x", &[][..]),
        };
        let n = self.num.render(var, inner);
        if self.den.is_constant() {
            return n;
        }
        let d = self.den.render(var, inner);
        let wrap = |s: String| {
            if is_compound(&s) || s.contains('*') {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(n), wrap(d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    type F = RationalFunction<BigRational>;

    fn p(cs: &[i64]) -> Poly<BigRational> {
        Poly::from_ints(cs)
    }

    #[test]
    fn lowest_terms_and_monic_denominator() {
        let f = F::new(p(&[-2, 2]).pow(2), p(&[-3, 3])).unwrap();
        assert_eq!(f.num(), &p(&[-4, 4]).scale(&rat(1, 3)));
        assert_eq!(f.den(), &Poly::one());
        assert!(F::new(p(&[1]), Poly::zero()).is_err());
    }

    #[test]
    fn field_ops() {
        let a = F::new(p(&[1]), p(&[0, 1])).unwrap();
        let b = F::new(p(&[1]), p(&[1, 1])).unwrap();
        let s = a.clone() + b.clone();
        assert_eq!(s, F::new(p(&[1, 2]), p(&[0, 1, 1])).unwrap());
        assert_eq!(a.clone() * a.try_inv().unwrap(), F::one());
        assert!((s.clone() - s).is_zero());
    }

    #[test]
    fn even_functions() {
        let f = F::new(p(&[1, 0, 3]), p(&[-1, 0, 1])).unwrap();
        assert!(f.is_even());
        let g = f.even_part_in_square().unwrap();
        assert_eq!(g.compose(&F::from_poly(p(&[0, 0, 1]))).unwrap(), f);
        assert!(!F::var().is_even());
    }

    #[test]
    fn derivative_quotient_rule() {
        let f = F::new(p(&[0, 1]), p(&[-1, 1])).unwrap();
        // d/dx x/(x-1) = -1/(x-1)^2
        assert_eq!(f.derivative(), F::new(p(&[-1]), p(&[-1, 1]).pow(2)).unwrap());
    }
}
