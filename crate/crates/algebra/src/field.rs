//! The scalar abstraction shared by every exact structure in the crate.
//!
//! Everything downstream (polynomials, rational functions, extensions,
//! quotient rings) is generic over [`Field`], so the same code runs over
//! `Q`, `Q(i)`, `Q(α)`, `Q(7^{1/4})(λ)` and so on.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};
use crate::poly::Poly;

/// A commutative field of characteristic zero with exact arithmetic.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn try_inv(&self) -> Result<Self>;

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.try_inv()?)
    }

    /// The canonical image of a rational number.
    fn from_rational(q: &BigRational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Returns the element as a rational number when it lies in the prime field.
    fn as_rational(&self) -> Option<BigRational> {
        None
    }

    /// A fourth root inside the same field, when one is cheaply decidable.
    fn fourth_root(&self) -> Option<Self> {
        None
    }

    /// Roots of `p` lying in the field. Fields without a root finder return
    /// an empty list, which callers treat as "no linear factors known".
    fn roots_of(_p: &Poly<Self>) -> Vec<Self> {
        Vec::new()
    }

    /// Renders the element, naming nested transcendental variables from `vars`
    /// (outermost first).
    fn render(&self, _vars: &[&str]) -> String {
        self.to_string()
    }

    /// JSON form: rationals as `"p/q"` strings, extension elements as
    /// coordinate arrays, rational functions as `{num, den}` objects.
    fn to_json(&self) -> serde_json::Value {
        match self.as_rational() {
            Some(q) => serde_json::Value::String(q.to_string()),
            None => serde_json::Value::String(self.render(&["x", "t", "s"])),
        }
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Field for BigRational {
    fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(AlgebraError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn as_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    fn fourth_root(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = exact_fourth_root(self.numer())?;
        let d = exact_fourth_root(self.denom())?;
        Some(BigRational::new(n, d))
    }

    fn roots_of(p: &Poly<Self>) -> Vec<Self> {
        crate::roots::rational_roots(p)
    }
}

fn exact_fourth_root(n: &BigInt) -> Option<BigInt> {
    let r = n.nth_root(4);
    if &r.pow(4u32) == n {
        Some(r)
    } else {
        None
    }
}

/// Parses `"p/q"`, `"p"` or `"-p/q"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || AlgebraError::Parse(format!("not a rational number: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

/// Shorthand for building a rational from machine integers.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
