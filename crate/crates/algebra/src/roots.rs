//! Rational roots of polynomials over `Q` by p-adic lifting.
//!
//! The polynomial is made squarefree, integral and primitive. A small prime
//! `p` is chosen that keeps it squarefree modulo `p`, roots mod `p` are found
//! by exhaustion and Hensel-lifted past twice the Cauchy bound. Each lifted
//! residue gives one candidate which is tested exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::Poly;

/// Distinct rational roots of `p`, sorted ascending. The zero polynomial has none.
pub fn rational_roots(p: &Poly<BigRational>) -> Vec<BigRational> {
    if p.is_zero() || p.is_constant() {
        return Vec::new();
    }
    let sqf = p.exact_div(&p.gcd(&p.derivative())).expect("gcd divides");
    let mut roots = Vec::new();
    let mut f = sqf;
    if f.coeff(0).is_zero() {
        roots.push(BigRational::zero());
        f = f.exact_div(&Poly::x()).expect("x divides");
    }
    if !f.is_constant() {
        let ints = primitive_integer_coeffs(&f);
        roots.extend(integer_poly_roots(&ints));
    }
    roots.sort();
    roots
}

/// Clears denominators and content; the result has a positive leading term.
pub fn primitive_integer_coeffs(p: &Poly<BigRational>) -> Vec<BigInt> {
    let l = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() {
        for c in ints.iter_mut() {
            *c = &*c / &g;
        }
    }
    if ints.last().map_or(false, |c| c.is_negative()) {
        for c in ints.iter_mut() {
            *c = -&*c;
        }
    }
    ints
}

fn eval_int(f: &[BigInt], x: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn mod_u64(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().expect("reduced")
}

fn poly_mod_p(f: &[BigInt], p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = f.iter().map(|c| mod_u64(c, p)).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn rem_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = pow_mod(b[db], p - 2, p);
    while r.len() > db {
        let lead = *r.last().unwrap() * inv % p;
        let shift = r.len() - 1 - db;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p - lead * bc % p) % p;
        }
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

fn gcd_degree_mod_p(a: &[u64], b: &[u64], p: u64) -> usize {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = rem_mod_p(&a, &b, p);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn integer_poly_roots(f: &[BigInt]) -> Vec<BigRational> {
    let n = f.len() - 1;
    let lead = f[n].clone();
    let df: Vec<BigInt> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let p = (3u64..)
        .filter(|&q| is_prime(q))
        .find(|&q| {
            if (&lead % BigInt::from(q)).is_zero() {
                return false;
            }
            let fp = poly_mod_p(f, q);
            let dfp = poly_mod_p(&df, q);
            !dfp.is_empty() && gcd_degree_mod_p(&fp, &dfp, q) == 0
        })
        .expect("a good prime exists for squarefree input");

    // |root| <= 1 + max |a_i / a_n|, so |lead * root| <= |lead| + max |a_i|.
    let max_low = f[..n].iter().map(|c| c.abs()).max().unwrap_or_default();
    let bound = lead.abs() + max_low;
    let target = &bound * 2u32 + 1u32;

    let pb = BigInt::from(p);
    let fp = poly_mod_p(f, p);
    let mut out = Vec::new();
    for r0 in 0..p {
        let val = fp
            .iter()
            .rev()
            .fold(0u64, |acc, c| (acc * r0 + c) % p);
        if val != 0 {
            continue;
        }
        let mut r = BigInt::from(r0);
        let mut modulus = pb.clone();
        while modulus < target {
            let next = &modulus * &modulus;
            let fv = eval_int(f, &r);
            let dv = eval_int(&df, &r);
            let inv = mod_inverse(&dv.mod_floor(&next), &next)
                .expect("derivative is a unit at a simple root");
            r = (&r - fv * inv).mod_floor(&next);
            modulus = next;
        }
        let mut m = (&lead * &r).mod_floor(&modulus);
        if &m * 2u32 > modulus {
            m -= &modulus;
        }
        let cand = BigRational::new(m, lead.clone());
        let num = cand.numer().clone();
        let den = cand.denom().clone();
        // Homogenized evaluation: Σ a_i num^i den^(n-i) = 0.
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        let mut terms = Vec::with_capacity(n + 1);
        for _ in 0..=n {
            terms.push(dpow.clone());
            dpow *= &den;
        }
        let mut npow = BigInt::one();
        for (i, c) in f.iter().enumerate() {
            acc += c * &npow * &terms[n - i];
            npow *= &num;
        }
        if acc.is_zero() {
            out.push(cand);
        }
    }
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}
