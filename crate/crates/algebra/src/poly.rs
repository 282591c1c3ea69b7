//! Dense univariate polynomials over a [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{AlgebraError, Result};
use crate::field::Field;

/// A univariate polynomial stored densely, lowest degree first, with no
/// trailing zero coefficients. The zero polynomial has an empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<K> {
    coeffs: Vec<K>,
}

/// Output of [`Poly::squarefree_decomposition`]: `p = constant * Π factor^mult`.
#[derive(Clone, Debug, PartialEq)]
pub struct SquarefreeDecomposition<K> {
    pub constant: K,
    pub factors: Vec<(Poly<K>, u32)>,
}

impl<K: Field> SquarefreeDecomposition<K> {
    pub fn expand(&self) -> Poly<K> {
        self.factors
            .iter()
            .fold(Poly::constant(self.constant.clone()), |acc, (f, m)| {
                &acc * &f.pow(*m)
            })
    }
}

impl<K: Field> Poly<K> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(K::one(), 1)
    }

    pub fn monomial(c: K, e: usize) -> Self {
        let mut coeffs = vec![K::zero(); e];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// `x - a`
    pub fn linear_root(a: &K) -> Self {
        Self::from_coeffs(vec![-a.clone(), K::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Builds from machine integers, lowest degree first.
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| K::from_int(c)).collect())
    }

    /// Builds from sparse `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (usize, K)>>(terms: I) -> Self {
        let mut coeffs: Vec<K> = Vec::new();
        for (e, c) in terms {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, K::zero());
            }
            coeffs[e] = coeffs[e].clone() + c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &K)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> K {
        self.coeffs.last().cloned().unwrap_or_else(K::zero)
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> Poly<L> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().try_inv().expect("leading coefficient is nonzero");
        self.scale(&inv)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &K) -> K {
        self.coeffs
            .iter()
            .rev()
            .fold(K::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Evaluates at an element of a larger structure using `embed` for coefficients.
    pub fn eval_in<L: Field>(&self, x: &L, embed: impl Fn(&K) -> L) -> L {
        self.coeffs
            .iter()
            .rev()
            .fold(L::zero(), |acc, c| acc * x.clone() + embed(c))
    }

    /// `self(q(x))`
    pub fn compose(&self, q: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * q) + &Self::constant(c.clone()))
    }

    /// `self(c·x)`
    pub fn scale_var(&self, c: &K) -> Self {
        let mut pw = K::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * pw.clone());
            pw = pw * c.clone();
        }
        Self::from_coeffs(out)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * K::from_int(i as i64))
                .collect(),
        )
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(AlgebraError::DivisionByZero)?;
        let lead_inv = d.leading().try_inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![K::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i - dd + j] = rem[i - dd + j].clone() - c.clone() * dc.clone();
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(AlgebraError::InexactDivision)
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.rem(self).map_or(false, |r| r.is_zero())
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.leading().try_inv().expect("nonzero");
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// Yun's algorithm. Factors are monic, squarefree and pairwise coprime;
    /// constants decompose to an empty factor list.
    pub fn squarefree_decomposition(&self) -> Result<SquarefreeDecomposition<K>> {
        if self.is_zero() {
            return Err(AlgebraError::Domain("squarefree decomposition of 0".into()));
        }
        let constant = self.leading();
        let f = self.monic();
        let mut factors = Vec::new();
        if f.is_constant() {
            return Ok(SquarefreeDecomposition { constant, factors });
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0)?;
        let mut c = df.exact_div(&a0)?;
        let mut d = &c - &b.derivative();
        let mut i = 1u32;
        while !b.is_constant() {
            let a = b.gcd(&d);
            b = b.exact_div(&a)?;
            c = d.exact_div(&a)?;
            d = &c - &b.derivative();
            if !a.is_constant() {
                factors.push((a, i));
            }
            i += 1;
        }
        Ok(SquarefreeDecomposition { constant, factors })
    }

    /// Multiplicity of `factor` (nonconstant) in `self`.
    pub fn multiplicity_of(&self, factor: &Self) -> u32 {
        if self.is_zero() || factor.is_constant() {
            return 0;
        }
        let mut m = 0;
        let mut cur = self.clone();
        while let Ok(q) = cur.exact_div(factor) {
            cur = q;
            m += 1;
        }
        m
    }

    /// Splits off the linear factors found by [`Field::roots_of`]. Returns
    /// `(roots, cofactor)` for a squarefree input.
    pub fn split_linear(&self) -> (Vec<K>, Self) {
        let roots = K::roots_of(self);
        let mut co = self.clone();
        for r in &roots {
            co = co.exact_div(&Self::linear_root(r)).expect("root divides");
        }
        (roots, co)
    }

    /// Pretty-printer; `var` names this polynomial's variable, `inner` names
    /// variables of nested coefficient fields.
    pub fn render(&self, var: &str, inner: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let mut cs = c.render(inner);
            let compound = is_compound(&cs);
            let negative = !compound && cs.starts_with('-');
            if negative {
                cs.remove(0);
            }
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            if e == 0 {
                out.push_str(&cs);
            } else if cs == "1" {
                out.push_str(&mono);
            } else if compound {
                out.push_str(&format!("({cs})*{mono}"));
            } else {
                out.push_str(&format!("{cs}*{mono}"));
            }
        }
        out
    }
}

pub(crate) fn is_compound(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    body.contains(" + ") || body.contains(" - ") || body.contains('/') && body.contains(' ')
}

impl<K: fmt::Debug> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

impl<K: Field> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x", &["t", "s"]))
    }
}

impl<'a, K: Field> Add<&'a Poly<K>> for &'a Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: &'a Poly<K>) -> Poly<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, K: Field> Sub<&'a Poly<K>> for &'a Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: &'a Poly<K>) -> Poly<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, K: Field> Mul<&'a Poly<K>> for &'a Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: &'a Poly<K>) -> Poly<K> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<K: Field> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<K: Field> Neg for Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<K: Field> $tr<Poly<K>> for Poly<K> {
            type Output = Poly<K>;
            fn $m(self, rhs: Poly<K>) -> Poly<K> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;
    use num_rational::BigRational;

    type P = Poly<BigRational>;

    #[test]
    fn gcd_with_zero_is_monic_input() {
        let p = P::from_ints(&[2, 4]);
        assert_eq!(p.gcd(&P::zero()), P::from_coeffs(vec![rat(1, 2), rat(1, 1)]));
        assert!(P::zero().gcd(&P::zero()).is_zero());
    }

    #[test]
    fn gcd_of_shared_powers() {
        // (r-1)^4 r^4 and (r-1)^2 r^3
        let r = P::x();
        let rm1 = P::from_ints(&[-1, 1]);
        let a = &rm1.pow(4) * &r.pow(4);
        let b = &rm1.pow(2) * &r.pow(3);
        assert_eq!(a.gcd(&b), b.monic());
    }

    #[test]
    fn squarefree_of_constant_is_empty() {
        let d = P::constant(rat(5, 1)).squarefree_decomposition().unwrap();
        assert!(d.factors.is_empty());
        assert_eq!(d.constant, rat(5, 1));
        assert!(P::zero().squarefree_decomposition().is_err());
    }

    #[test]
    fn squarefree_mu_cubed_two_plus_mu_squared() {
        let mu = P::x();
        let f = &mu.pow(3) * &P::from_ints(&[2, 1]).pow(2);
        let d = f.squarefree_decomposition().unwrap();
        assert_eq!(d.factors, vec![(P::from_ints(&[2, 1]), 2), (mu, 3)]);
        assert_eq!(d.expand(), f);
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = P::from_ints(&[1, 0, 1]);
        let b = P::from_ints(&[-1, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, P::one());
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn render_signs() {
        let p = P::from_ints(&[-1, 0, 3, -1]);
        assert_eq!(p.render("r", &[]), "-r^3 + 3*r^2 - 1");
    }

    #[test]
    fn compose_and_scale_var() {
        let p = P::from_ints(&[1, 2, 3]);
        assert_eq!(p.compose(&P::from_ints(&[0, 2])), p.scale_var(&rat(2, 1)));
    }
}
