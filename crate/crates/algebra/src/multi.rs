//! Sparse multivariate polynomials over a [`Field`] and unreduced fractions
//! of them.
//!
//! Monomials are exponent vectors over a fixed variable list and are ordered
//! lexicographically in the declared variable order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::poly::{is_compound, Poly};

/// The ordered variable list shared by all polynomials of one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    vars: Arc<Vec<String>>,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Self {
        PolyRing { vars: Arc::new(vars.iter().map(|s| s.as_ref().to_string()).collect()) }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| AlgebraError::Mismatch(format!("unknown variable {name}")))
    }

    pub fn zero<K: Field>(&self) -> MultiPoly<K> {
        MultiPoly { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn constant<K: Field>(&self, c: K) -> MultiPoly<K> {
        self.monomial(c, vec![0; self.nvars()])
    }

    pub fn int<K: Field>(&self, n: i64) -> MultiPoly<K> {
        self.constant(K::from_int(n))
    }

    pub fn monomial<K: Field>(&self, c: K, exps: Vec<u32>) -> MultiPoly<K> {
        assert_eq!(exps.len(), self.nvars(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly { ring: self.clone(), terms }
    }

    /// The `i`-th variable.
    pub fn var<K: Field>(&self, i: usize) -> MultiPoly<K> {
        let mut e = vec![0; self.nvars()];
        e[i] = 1;
        self.monomial(K::one(), e)
    }

    /// The variable called `name`; panics on an unknown name.
    pub fn v<K: Field>(&self, name: &str) -> MultiPoly<K> {
        self.var(self.index_of(name).expect("declared variable"))
    }

    /// Embeds a univariate polynomial as a polynomial in variable `i`.
    pub fn from_univariate<K: Field>(&self, p: &Poly<K>, i: usize) -> MultiPoly<K> {
        let mut out = self.zero();
        for (e, c) in p.terms() {
            let mut exps = vec![0; self.nvars()];
            exps[i] = e as u32;
            out = &out + &self.monomial(c.clone(), exps);
        }
        out
    }
}

#[derive(Clone, PartialEq)]
pub struct MultiPoly<K> {
    ring: PolyRing,
    terms: BTreeMap<Vec<u32>, K>,
}

impl<K: Field> MultiPoly<K> {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &K)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> K {
        self.terms.get(exps).cloned().unwrap_or_else(K::zero)
    }

    /// The constant value when no variable occurs.
    pub fn as_constant(&self) -> Option<K> {
        match self.terms.len() {
            0 => Some(K::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] > 0)
    }

    /// Homogeneity with respect to the variables listed in `vars`.
    pub fn is_homogeneous_in(&self, vars: &[usize]) -> bool {
        let mut degs = self.terms.keys().map(|e| vars.iter().map(|&i| e[i]).sum::<u32>());
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let all: Vec<usize> = (0..self.ring.nvars()).collect();
        self.is_homogeneous_in(&all)
    }

    pub fn scale(&self, c: &K) -> Self {
        let mut out = self.ring.zero();
        if c.is_zero() {
            return out;
        }
        for (e, a) in &self.terms {
            out.insert_add(e.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> MultiPoly<L> {
        let mut out = self.ring.zero();
        for (e, a) in &self.terms {
            out.insert_add(e.clone(), f(a));
        }
        out
    }

    fn insert_add(&mut self, e: Vec<u32>, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.ring.constant(K::one());
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

    /// Replaces every variable by a polynomial in a (possibly different) ring.
    pub fn eval_with(&self, images: &[MultiPoly<K>]) -> Result<MultiPoly<K>> {
        if images.len() != self.ring.nvars() {
            return Err(AlgebraError::Mismatch("one image per variable required".into()));
        }
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .unwrap_or_else(|| self.ring.clone());
        let mut cache: Vec<Vec<MultiPoly<K>>> = images
            .iter()
            .map(|p| vec![target.constant(K::one()), p.clone()])
            .collect();
        let mut out = target.zero();
        for (e, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while cache[i].len() <= k as usize {
                    let next = cache[i].last().unwrap() * &images[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][k as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Replaces variable `i` by `q`.
    pub fn substitute(&self, i: usize, q: &MultiPoly<K>) -> MultiPoly<K> {
        let images: Vec<MultiPoly<K>> = (0..self.ring.nvars())
            .map(|j| if j == i { q.clone() } else { self.ring.var(j) })
            .collect();
        self.eval_with(&images).expect("arity matches")
    }

    /// Sets variable `i` to the constant `c`.
    pub fn specialize(&self, i: usize, c: &K) -> MultiPoly<K> {
        self.substitute(i, &self.ring.constant(c.clone()))
    }

    /// Applies a map to the coefficients that may fail.
    pub fn try_map_coeffs<L: Field>(&self, f: impl Fn(&K) -> Result<L>) -> Result<MultiPoly<L>> {
        let mut out = self.ring.zero();
        for (e, a) in &self.terms {
            out.insert_add(e.clone(), f(a)?);
        }
        Ok(out)
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = self.ring.zero();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.insert_add(e2, c.clone() * K::from_int(e[i] as i64));
        }
        out
    }

    /// The univariate polynomial in variable `i`, provided no other variable occurs.
    pub fn to_univariate(&self, i: usize) -> Result<Poly<K>> {
        let mut terms = Vec::new();
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(j, &k)| j != i && k > 0) {
                return Err(AlgebraError::Mismatch(format!(
                    "polynomial involves variables other than {}",
                    self.ring.vars[i]
                )));
            }
            terms.push((e[i] as usize, c.clone()));
        }
        Ok(Poly::from_terms(terms))
    }

    /// Collects as a univariate polynomial in variable `i` with coefficients
    /// in the same ring.
    pub fn collect_in(&self, i: usize) -> Vec<MultiPoly<K>> {
        let d = self.degree_in(i) as usize;
        let mut out = vec![self.ring.zero(); d + 1];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[i] = 0;
            out[e[i] as usize].insert_add(e2, c.clone());
        }
        out
    }

    pub fn render(&self, inner: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
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
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.ring.vars[i].clone()
                    } else {
                        format!("{}^{}", self.ring.vars[i], k)
                    }
                })
                .collect();
            let mono = mono.join("*");
            if mono.is_empty() {
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

    fn check_ring(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.ring.vars, &other.ring.vars) || self.ring == other.ring,
            "polynomials from different rings"
        );
    }
}

impl<K: fmt::Debug> fmt::Debug for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultiPoly")
            .field("vars", &self.ring.vars)
            .field("terms", &self.terms)
            .finish()
    }
}

impl<K: Field> fmt::Display for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&["t", "s"]))
    }
}

impl<'a, K: Field> Add<&'a MultiPoly<K>> for &'a MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn add(self, rhs: &'a MultiPoly<K>) -> MultiPoly<K> {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }
}

impl<'a, K: Field> Sub<&'a MultiPoly<K>> for &'a MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn sub(self, rhs: &'a MultiPoly<K>) -> MultiPoly<K> {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(e.clone(), -c.clone());
        }
        out
    }
}

impl<'a, K: Field> Mul<&'a MultiPoly<K>> for &'a MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn mul(self, rhs: &'a MultiPoly<K>) -> MultiPoly<K> {
        self.check_ring(rhs);
        let mut out = self.ring.zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_add(e, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<K: Field> Neg for &MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn neg(self) -> MultiPoly<K> {
        self.scale(&(-K::one()))
    }
}

impl<K: Field> Neg for MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn neg(self) -> MultiPoly<K> {
        -&self
    }
}

macro_rules! forward_owned {
    ($ty:ident, $tr:ident, $m:ident) => {
        impl<K: Field> $tr<$ty<K>> for $ty<K> {
            type Output = $ty<K>;
            fn $m(self, rhs: $ty<K>) -> $ty<K> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(MultiPoly, Add, add);
forward_owned!(MultiPoly, Sub, sub);
forward_owned!(MultiPoly, Mul, mul);

/// A formal quotient `num / den` of multivariate polynomials. No cancellation
/// is attempted; equality questions are settled by cross-multiplying and
/// reducing in a quotient ring.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiFrac<K> {
    pub num: MultiPoly<K>,
    pub den: MultiPoly<K>,
}

impl<K: Field> MultiFrac<K> {
    pub fn new(num: MultiPoly<K>, den: MultiPoly<K>) -> Result<Self> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        num.check_ring(&den);
        Ok(MultiFrac { num, den })
    }

    pub fn from_poly(p: MultiPoly<K>) -> Self {
        let den = p.ring.constant(K::one());
        MultiFrac { num: p, den }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.num.ring
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return MultiFrac { num: &self.num + &o.num, den: self.den.clone() };
        }
        MultiFrac {
            num: &(&self.num * &o.den) + &(&o.num * &self.den),
            den: &self.den * &o.den,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        MultiFrac { num: &self.num * &o.num, den: &self.den * &o.den }
    }

    pub fn neg(&self) -> Self {
        MultiFrac { num: -&self.num, den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self> {
        MultiFrac::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn scale(&self, c: &K) -> Self {
        MultiFrac { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        MultiFrac { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// Formal derivative by the quotient rule.
    pub fn derivative(&self, i: usize) -> Self {
        MultiFrac {
            num: &(&self.num.derivative(i) * &self.den) - &(&self.num * &self.den.derivative(i)),
            den: &self.den * &self.den,
        }
    }

    /// Replaces every variable of `self` by a fraction.
    pub fn compose(&self, images: &[MultiFrac<K>]) -> Result<Self> {
        let n = substitute_fracs(&self.num, images)?;
        let d = substitute_fracs(&self.den, images)?;
        n.div(&d)
    }
}

/// Substitutes fractions `N_i / D_i` for the variables of `p`. The result has
/// denominator `Π D_i^{deg_i p}`, so no division is ever needed.
pub fn substitute_fracs<K: Field>(p: &MultiPoly<K>, images: &[MultiFrac<K>]) -> Result<MultiFrac<K>> {
    let nv = p.ring.nvars();
    if images.len() != nv {
        return Err(AlgebraError::Mismatch("one image per variable required".into()));
    }
    let target = images
        .first()
        .map(|f| f.ring().clone())
        .ok_or_else(|| AlgebraError::Mismatch("empty ring".into()))?;
    let degs: Vec<u32> = (0..nv).map(|i| p.degree_in(i)).collect();
    let powers = |base: &MultiPoly<K>, d: u32| {
        let mut v = vec![target.constant(K::one())];
        for k in 0..d as usize {
            let next = &v[k] * base;
            v.push(next);
        }
        v
    };
    let npow: Vec<Vec<MultiPoly<K>>> = (0..nv).map(|i| powers(&images[i].num, degs[i])).collect();
    let dpow: Vec<Vec<MultiPoly<K>>> = (0..nv).map(|i| powers(&images[i].den, degs[i])).collect();
    let mut num = target.zero();
    for (e, c) in p.terms() {
        let mut t = target.constant(c.clone());
        for i in 0..nv {
            if degs[i] == 0 {
                continue;
            }
            let k = e[i] as usize;
            let d = degs[i] as usize;
            t = &(&t * &npow[i][k]) * &dpow[i][d - k];
        }
        num = &num + &t;
    }
    let mut den = target.constant(K::one());
    for i in 0..nv {
        den = &den * &dpow[i][degs[i] as usize];
    }
    MultiFrac::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;
    use num_rational::BigRational;

    type M = MultiPoly<BigRational>;

    #[test]
    fn homogeneous_quartic_divisible_pieces() {
        let r = PolyRing::new(&["x", "y", "z"]);
        let (x, y, z): (M, M, M) = (r.v("x"), r.v("y"), r.v("z"));
        let q = &(&y * &y) - &(&x * &z);
        let m = &(&x.scale(&rat(81, 49)) + &y.scale(&rat(2, 1))) + &z;
        let f = &(&q * &y) * &m;
        assert!(f.is_homogeneous());
        assert_eq!(f.total_degree(), 4);
        assert!(f.specialize(1, &rat(0, 1)).is_zero());
    }

    #[test]
    fn substitution_with_fractions_clears_denominators() {
        let r = PolyRing::new(&["u", "v"]);
        let f: M = &r.v::<BigRational>("u").pow(2) - &r.v("v");
        // u = 1/v, v = v
        let img = vec![
            MultiFrac::new(r.int(1), r.v("v")).unwrap(),
            MultiFrac::from_poly(r.v("v")),
        ];
        let s = substitute_fracs(&f, &img).unwrap();
        assert_eq!(s.num, &r.int::<BigRational>(1) - &r.v::<BigRational>("v").pow(3));
        assert_eq!(s.den, r.v::<BigRational>("v").pow(2));
    }

    #[test]
    fn collect_and_univariate() {
        let r = PolyRing::new(&["a", "b"]);
        let p: M = &r.v::<BigRational>("a").pow(3) + &r.int(2);
        assert_eq!(p.to_univariate(0).unwrap(), Poly::from_ints(&[2, 0, 0, 1]));
        assert!((&p * &r.v("b")).to_univariate(0).is_err());
        assert_eq!(p.collect_in(0).len(), 4);
    }

    #[test]
    fn render_lex() {
        let r = PolyRing::new(&["x", "y"]);
        let p: M = &(&r.v::<BigRational>("x") * &r.v("y")) - &r.v::<BigRational>("y").pow(2).scale(&rat(3, 1));
        assert_eq!(p.render(&[]), "x*y - 3*y^2");
    }
}
