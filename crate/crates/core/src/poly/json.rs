//! JSON wire format: `{"kind": "real"|"complex"|"rational", "degree_bound": n, "coeffs": [...]}`.
//!
//! Complex coefficients travel as `[re, im]` pairs and rationals as
//! `["num", "den"]` decimal strings.

use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{ComplexPoly, RationalPoly, RealPoly};

/// Scalars that have a JSON encoding in the polynomial and transcript schemas.
pub trait JsonScalar: Sized {
    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Result<Self>;
}

fn bad(what: &str, value: &Value) -> Error {
    Error::InvalidInput(format!("expected {what}, got {value}"))
}

impl JsonScalar for f64 {
    fn to_json(&self) -> Value {
        json!(self)
    }

    fn from_json(value: &Value) -> Result<Self> {
        value.as_f64().ok_or_else(|| bad("a number", value))
    }
}

impl JsonScalar for Complex64 {
    fn to_json(&self) -> Value {
        json!([self.re, self.im])
    }

    fn from_json(value: &Value) -> Result<Self> {
        match value.as_array().map(Vec::as_slice) {
            Some([re, im]) => Ok(Complex64::new(f64::from_json(re)?, f64::from_json(im)?)),
            _ => Err(bad("a [re, im] pair", value)),
        }
    }
}

impl JsonScalar for BigRational {
    fn to_json(&self) -> Value {
        json!([self.numer().to_string(), self.denom().to_string()])
    }

    fn from_json(value: &Value) -> Result<Self> {
        let parse = |v: &Value| {
            v.as_str()
                .and_then(|s| BigInt::from_str(s).ok())
                .ok_or_else(|| bad("a decimal integer string", v))
        };
        match value.as_array().map(Vec::as_slice) {
            Some([num, den]) => {
                let (num, den) = (parse(num)?, parse(den)?);
                if den.is_zero() {
                    return Err(bad("a nonzero denominator", value));
                }
                Ok(BigRational::new(num, den))
            }
            _ => Err(bad("a [\"num\", \"den\"] pair", value)),
        }
    }
}

/// Serialized form of any polynomial kind.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub kind: String,
    pub degree_bound: usize,
    pub coeffs: Vec<Value>,
}

/// A polynomial of any of the three supported kinds.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyPoly {
    Real(RealPoly),
    Complex(ComplexPoly),
    Rational(RationalPoly),
}

fn encode<T: JsonScalar>(kind: &str, coeffs: &[T]) -> PolyJson {
    PolyJson {
        kind: kind.to_owned(),
        degree_bound: coeffs.len() - 1,
        coeffs: coeffs.iter().map(JsonScalar::to_json).collect(),
    }
}

impl From<&RealPoly> for PolyJson {
    fn from(p: &RealPoly) -> Self {
        encode("real", p.coeffs())
    }
}

impl From<&ComplexPoly> for PolyJson {
    fn from(p: &ComplexPoly) -> Self {
        encode("complex", p.coeffs())
    }
}

impl From<&RationalPoly> for PolyJson {
    fn from(p: &RationalPoly) -> Self {
        encode("rational", p.coeffs())
    }
}

impl From<&AnyPoly> for PolyJson {
    fn from(p: &AnyPoly) -> Self {
        match p {
            AnyPoly::Real(p) => p.into(),
            AnyPoly::Complex(p) => p.into(),
            AnyPoly::Rational(p) => p.into(),
        }
    }
}

impl TryFrom<&PolyJson> for AnyPoly {
    type Error = Error;

    fn try_from(raw: &PolyJson) -> Result<Self> {
        if raw.coeffs.len() != raw.degree_bound + 1 {
            return Err(Error::LengthMismatch {
                expected: raw.degree_bound + 1,
                actual: raw.coeffs.len(),
            });
        }
        fn decode<T: JsonScalar>(values: &[Value]) -> Result<Vec<T>> {
            values.iter().map(T::from_json).collect()
        }
        match raw.kind.as_str() {
            "real" => Ok(AnyPoly::Real(RealPoly::new(decode(&raw.coeffs)?)?)),
            "complex" => Ok(AnyPoly::Complex(ComplexPoly::new(decode(&raw.coeffs)?)?)),
            "rational" => Ok(AnyPoly::Rational(RationalPoly::new(decode(&raw.coeffs)?)?)),
            other => Err(Error::InvalidInput(format!("unknown polynomial kind {other:?}"))),
        }
    }
}

impl AnyPoly {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: PolyJson =
            serde_json::from_str(s).map_err(|e| Error::InvalidInput(e.to_string()))?;
        AnyPoly::try_from(&raw)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&PolyJson::from(self)).expect("polynomial JSON serializes")
    }
}
