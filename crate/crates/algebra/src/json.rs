//! JSON encodings used by reports and input files.
//!
//! Rationals are strings `"p/q"` so that no value passes through a float.
//! Polynomials are sparse `[[exponent, coefficient], ...]` arrays.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;

use crate::error::{AlgebraError, Result};
use crate::field::{parse_rational, Field};
use crate::poly::Poly;

pub fn rational_to_json(q: &BigRational) -> Value {
    Value::String(q.to_string())
}

/// Accepts a `"p/q"` string or a JSON integer.
pub fn rational_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(BigRational::from_integer(BigInt::from(n.as_i64().unwrap()))),
        Value::Number(n) if n.is_u64() => Ok(BigRational::from_integer(BigInt::from(n.as_u64().unwrap()))),
        other => Err(AlgebraError::Parse(format!("expected a rational string, got {other}"))),
    }
}

pub fn poly_to_json<K: Field>(p: &Poly<K>) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| Value::Array(vec![Value::from(e as u64), c.to_json()]))
            .collect(),
    )
}

/// Parses `[[e, c], ...]` with rational coefficients; repeated exponents add up.
pub fn poly_from_json(v: &Value) -> Result<Poly<BigRational>> {
    let arr = v
        .as_array()
        .ok_or_else(|| AlgebraError::Parse("polynomial must be an array of [exponent, coefficient]".into()))?;
    let mut terms = Vec::with_capacity(arr.len());
    for item in arr {
        let pair = item
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| AlgebraError::Parse(format!("bad term {item}")))?;
        let e = pair[0]
            .as_u64()
            .ok_or_else(|| AlgebraError::Parse(format!("bad exponent {}", pair[0])))?;
        if e > 10_000 {
            return Err(AlgebraError::Parse(format!("exponent {e} is too large")));
        }
        terms.push((e as usize, rational_from_json(&pair[1])?));
    }
    Ok(Poly::from_terms(terms))
}
