//! Wire format for exact values.
//!
//! A rational is the string `"num/den"` (or `"num"` when the denominator is
//! 1). A polynomial is an array of `{"exponents": [...], "coefficient": ...}`
//! records, exponents listed for the ring's indeterminates in order, terms in
//! descending graded-lex order.

use num_traits::One;
use serde_json::{json, Value};

use super::{Monomial, MultiPoly, Rational, Scalar, VarSet};
use crate::error::{Result, SwrError};

pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_from_str(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().map_err(|_| bad_rational(s))?;
            let d: num_bigint::BigInt = d.trim().parse().map_err(|_| bad_rational(s))?;
            if d == num_bigint::BigInt::from(0) {
                return Err(SwrError::Parse(format!("zero denominator in `{s}`")));
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(s.parse().map_err(|_| bad_rational(s))?),
    };
    Ok(parsed)
}

fn bad_rational(s: &str) -> SwrError {
    SwrError::Parse(format!("not a rational: `{s}`"))
}

pub fn poly_to_json(p: &MultiPoly) -> Value {
    let vars: Vec<_> = p.ring().iter().collect();
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .rev()
        .map(|(m, c)| {
            let exps: Vec<u16> = vars.iter().map(|v| m.exp(*v)).collect();
            json!({"exponents": exps, "coefficient": rational_to_string(c)})
        })
        .collect();
    Value::Array(terms)
}

pub fn poly_from_json(ring: VarSet, v: &Value) -> Result<MultiPoly> {
    let arr = v.as_array().ok_or_else(|| SwrError::Parse("polynomial must be an array".into()))?;
    let vars: Vec<_> = ring.iter().collect();
    let mut terms = Vec::with_capacity(arr.len());
    for rec in arr {
        let exps = rec
            .get("exponents")
            .and_then(Value::as_array)
            .ok_or_else(|| SwrError::Parse("term without exponents".into()))?;
        if exps.len() != vars.len() {
            return Err(SwrError::Parse(format!(
                "exponent vector of length {} in ring {}",
                exps.len(),
                ring
            )));
        }
        let mut m = Monomial::ONE;
        for (var, e) in vars.iter().zip(exps) {
            let e = e
                .as_u64()
                .filter(|&e| e <= u16::MAX as u64)
                .ok_or_else(|| SwrError::Parse("bad exponent".into()))?;
            m.0[var.index()] = e as u16;
        }
        let c = rec
            .get("coefficient")
            .and_then(Value::as_str)
            .ok_or_else(|| SwrError::Parse("term without coefficient".into()))?;
        terms.push((m, rational_from_str(c)?));
    }
    MultiPoly::from_terms(ring, terms)
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Rat(r) => Value::String(rational_to_string(r)),
        Scalar::Poly(p) => poly_to_json(p),
    }
}

/// Parses a scalar; arrays are read as polynomials over `ring`.
pub fn scalar_from_json(ring: VarSet, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => rational_from_str(s).map(Scalar::Rat),
        Value::Number(n) => rational_from_str(&n.to_string()).map(Scalar::Rat),
        Value::Array(_) => poly_from_json(ring, v).map(Scalar::Poly),
        _ => Err(SwrError::Parse(format!("not a scalar: {v}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Var;

    #[test]
    fn rational_strings() {
        let r = rational_from_str("-6/4").unwrap();
        assert_eq!(rational_to_string(&r), "-3/2");
        assert_eq!(rational_to_string(&rational_from_str("7").unwrap()), "7");
        assert!(rational_from_str("1/0").is_err());
        assert!(rational_from_str("x").is_err());
    }

    #[test]
    fn polynomial_records() {
        let ring = VarSet::of(&[Var::Lam, Var::Q]);
        let p = MultiPoly::var(ring, Var::Q)
            .unwrap()
            .try_add(&MultiPoly::var(ring, Var::Lam).unwrap())
            .unwrap()
            .pow(2);
        let v = poly_to_json(&p);
        assert_eq!(v[0]["exponents"], json!([2, 0]));
        assert_eq!(poly_from_json(ring, &v).unwrap(), p);
    }
}
