//! Run manifests and shared serialization helpers.
//!
//! Exact integers serialize as decimal strings and intervals as `[lo, hi]`
//! pairs of decimal strings.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Serialize, Serializer};
use serde_json::Value;
use std::collections::BTreeMap;

use crate::langspec::{spec_to_json, LanguageSpec};

#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<Value>,
    pub parameters: BTreeMap<String, Value>,
    pub outputs: Vec<String>,
    pub versions: BTreeMap<String, String>,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        let mut versions = BTreeMap::new();
        versions.insert("digitlang".to_string(), env!("CARGO_PKG_VERSION").to_string());
        RunManifest {
            command: command.to_string(),
            spec: None,
            parameters: BTreeMap::new(),
            outputs: Vec::new(),
            versions,
        }
    }

    pub fn with_spec(mut self, spec: &LanguageSpec) -> Self {
        self.spec = Some(spec_to_json(spec));
        self
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters
            .insert(key.to_string(), serde_json::to_value(value).unwrap_or(Value::Null));
        self
    }

    pub fn output(mut self, path: impl Into<String>) -> Self {
        self.outputs.push(path.into());
        self
    }
}

pub fn ser_biguints<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

pub fn ser_bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

pub fn ser_biguint<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn ser_rational<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `[lo, hi]` of f64 bounds as decimal strings (round-trip precision).
pub fn ser_interval<S: Serializer>(v: &(f64, f64), s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq([fmt_f64(v.0), fmt_f64(v.1)])
}

pub fn fmt_f64(x: f64) -> String {
    if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{x:e}")
    }
}

/// Decimal rendering of a rational to `digits` significant places after the point.
pub fn rational_decimal(x: &BigRational, digits: usize) -> String {
    use num_traits::{Signed, Zero};
    let neg = x.is_negative();
    let a = x.abs();
    let int = a.to_integer();
    let mut frac = a - BigRational::from_integer(int.clone());
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    s.push_str(&int.to_string());
    if digits > 0 {
        s.push('.');
        let ten = BigRational::from_integer(BigInt::from(10));
        for _ in 0..digits {
            frac *= &ten;
            let d = frac.to_integer();
            s.push_str(&d.to_string());
            frac -= BigRational::from_integer(d);
            if frac.is_zero() {
                break;
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_is_deterministic() {
        let spec = crate::langspec::presets::preset("L1").unwrap();
        let a = RunManifest::new("count").with_spec(&spec).param("upto", 4);
        let b = RunManifest::new("count").with_spec(&spec).param("upto", 4);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn decimals() {
        let r = BigRational::new(1.into(), 8.into());
        assert_eq!(rational_decimal(&r, 5), "0.125");
        let r = BigRational::new((-7).into(), 3.into());
        assert_eq!(rational_decimal(&r, 3), "-2.333");
    }
}
