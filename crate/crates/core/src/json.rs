//! JSON encodings.
//!
//! Every number is written as a decimal string so arbitrary-precision values
//! survive 64-bit JSON consumers. Readers also accept JSON integers.
//!
//! - series: `{"order": N, "coeffs": [c0, c1, ...]}` where each coefficient
//!   is a bare integer string `"3"` or a pair `["num", "den"]`
//!   (`"num/den"` strings are accepted on input)
//! - factor exponents: `{"exponents": {"1": "-1", "2": "1/2"}, "max_index": N}`
//! - matrices: `{"dim": d, "rows": [["p/q", ...], ...]}`
//! - orbit tables: `{"orbits": [{"m": 2, "a": 1, "b": 0}]}` or
//!   `{"linearizations": [{"period": k, "matrix": {...}}]}`

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::series::{Rational, TruncatedSeries};
use crate::spectral::{OrbitCount, OrbitTable, RationalMatrix};
use crate::transforms::{DoldCoefficients, DoldVerdict};
use crate::zeta::FactorExponents;

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

/// `"n"` for integers, `"p/q"` otherwise.
pub fn rational_to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_bigint(s: &str) -> Result<BigInt> {
    BigInt::from_str(s.trim()).map_err(|_| malformed(format!("not an integer: {s:?}")))
}

fn checked_ratio(num: BigInt, den: BigInt) -> Result<Rational> {
    if den.is_zero() {
        return Err(malformed("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

pub fn parse_rational_str(s: &str) -> Result<Rational> {
    match s.split_once('/') {
        Some((n, d)) => checked_ratio(parse_bigint(n)?, parse_bigint(d)?),
        None => Ok(Rational::from_integer(parse_bigint(s)?)),
    }
}

/// Accepts `"n"`, `"p/q"`, `["p", "q"]` and JSON integers.
pub fn parse_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational_str(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from_integer(u.into()))
            } else {
                Err(malformed(format!("non-integer JSON number {n}; use a \"p/q\" string")))
            }
        }
        Value::Array(pair) if pair.len() == 2 => {
            let num = parse_integer(&pair[0])?;
            let den = parse_integer(&pair[1])?;
            checked_ratio(num, den)
        }
        other => Err(malformed(format!("expected a rational, found {other}"))),
    }
}

pub fn parse_integer(v: &Value) -> Result<BigInt> {
    let r = parse_rational(v)?;
    if !r.is_integer() {
        return Err(malformed(format!("expected an integer, found {}", rational_to_string(&r))));
    }
    Ok(r.to_integer())
}

fn parse_small<T: TryFrom<i64>>(v: &Value, what: &str) -> Result<T> {
    parse_integer(v)?
        .to_i64()
        .and_then(|i| T::try_from(i).ok())
        .ok_or_else(|| malformed(format!("{what} out of range")))
}

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| malformed(format!("missing field {key:?}")))
}

fn coeff_to_json(c: &Rational) -> Value {
    if c.is_integer() {
        Value::String(c.numer().to_string())
    } else {
        json!([c.numer().to_string(), c.denom().to_string()])
    }
}

pub fn series_to_json(s: &TruncatedSeries) -> Value {
    json!({
        "order": s.order(),
        "coeffs": s.coeffs().iter().map(coeff_to_json).collect::<Vec<_>>(),
    })
}

/// Reads a series; `order`, when present, must equal `len(coeffs) - 1`.
pub fn series_from_json(v: &Value) -> Result<TruncatedSeries> {
    let coeffs = field(v, "coeffs")?
        .as_array()
        .ok_or_else(|| malformed("\"coeffs\" must be an array"))?
        .iter()
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()?;
    if coeffs.is_empty() {
        return Err(malformed("\"coeffs\" must not be empty"));
    }
    if let Some(order) = v.get("order") {
        let order: usize = parse_small(order, "order")?;
        if order + 1 != coeffs.len() {
            return Err(malformed(format!(
                "order {order} needs {} coefficients, found {}",
                order + 1,
                coeffs.len()
            )));
        }
    }
    TruncatedSeries::new(coeffs)
}

pub fn sequence_to_json(values: &[Rational]) -> Value {
    Value::Array(
        values
            .iter()
            .map(|v| Value::String(rational_to_string(v)))
            .collect(),
    )
}

pub fn sequence_from_json(v: &Value) -> Result<Vec<Rational>> {
    v.as_array()
        .ok_or_else(|| malformed("expected a JSON array of integers"))?
        .iter()
        .map(parse_rational)
        .collect()
}

pub fn factors_to_json(f: &FactorExponents) -> Value {
    let exps: Map<String, Value> = f
        .iter()
        .map(|(n, e)| (n.to_string(), Value::String(rational_to_string(e))))
        .collect();
    json!({ "exponents": exps, "max_index": f.max_index() })
}

pub fn factors_from_json(v: &Value) -> Result<FactorExponents> {
    let exps = field(v, "exponents")?
        .as_object()
        .ok_or_else(|| malformed("\"exponents\" must be an object"))?;
    let pairs = exps
        .iter()
        .map(|(k, e)| {
            let n: usize = k
                .parse()
                .map_err(|_| malformed(format!("exponent key {k:?} is not a positive integer")))?;
            Ok((n, parse_rational(e)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let max_index = match v.get("max_index") {
        Some(m) => parse_small(m, "max_index")?,
        None => pairs.iter().map(|(n, _)| *n).max().unwrap_or(0),
    };
    FactorExponents::from_pairs(max_index, pairs)
}

pub fn matrix_to_json(m: &RationalMatrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| sequence_to_json(m.row(i)))
        .collect();
    if m.is_square() {
        json!({ "dim": m.rows(), "rows": rows })
    } else {
        json!({ "rows": rows })
    }
}

/// Reads a matrix; `dim`, when present, requires a square `dim x dim` matrix.
pub fn matrix_from_json(v: &Value) -> Result<RationalMatrix> {
    let rows = field(v, "rows")?
        .as_array()
        .ok_or_else(|| malformed("\"rows\" must be an array"))?
        .iter()
        .map(sequence_from_json)
        .collect::<Result<Vec<_>>>()?;
    let m = RationalMatrix::new(rows).map_err(|e| malformed(e.to_string()))?;
    if let Some(dim) = v.get("dim") {
        let dim: usize = parse_small(dim, "dim")?;
        if !m.is_square() || m.rows() != dim {
            return Err(malformed(format!(
                "\"dim\" is {dim} but the rows form a {}x{} matrix",
                m.rows(),
                m.cols()
            )));
        }
    }
    Ok(m)
}

pub fn orbit_table_from_json(v: &Value) -> Result<OrbitTable> {
    if let Some(orbits) = v.get("orbits") {
        let counts = orbits
            .as_array()
            .ok_or_else(|| malformed("\"orbits\" must be an array"))?
            .iter()
            .map(|o| {
                Ok(OrbitCount {
                    period: parse_small(field(o, "m")?, "m")?,
                    a: parse_small(field(o, "a")?, "a")?,
                    b: parse_small(field(o, "b")?, "b")?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        return OrbitTable::from_counts(counts).map_err(|e| malformed(e.to_string()));
    }
    if let Some(lins) = v.get("linearizations") {
        let orbits = lins
            .as_array()
            .ok_or_else(|| malformed("\"linearizations\" must be an array"))?
            .iter()
            .map(|o| {
                let period: usize = parse_small(field(o, "period")?, "period")?;
                Ok((period, matrix_from_json(field(o, "matrix")?)?))
            })
            .collect::<Result<Vec<_>>>()?;
        return OrbitTable::from_linearizations(&orbits);
    }
    Err(malformed("orbit table needs \"orbits\" or \"linearizations\""))
}

pub fn orbit_table_to_json(t: &OrbitTable) -> Value {
    json!({
        "orbits": t.counts().iter().map(|o| json!({
            "m": o.period.to_string(),
            "a": o.a.to_string(),
            "b": o.b.to_string(),
        })).collect::<Vec<_>>()
    })
}

pub fn dold_verdict_to_json(v: &DoldVerdict) -> Value {
    json!({
        "pass": v.pass,
        "first_violation": v.first_violation.as_ref().map(|(k, value)| json!({
            "k": k,
            "value": format!("{}/{}", value.numer(), value.denom()),
        })),
    })
}

pub fn dold_coefficients_to_json(a: &DoldCoefficients) -> Value {
    json!({
        "values": sequence_to_json(a.values()),
        "integral": a.integrality_flags(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, ratio};

    #[test]
    fn series_accepts_both_coefficient_forms() {
        let v: Value = serde_json::from_str(r#"{"order": 3, "coeffs": ["1", ["-1", "2"], "3/4", 5]}"#).unwrap();
        let s = series_from_json(&v).unwrap();
        assert_eq!(s.coeffs(), &[int(1), ratio(-1, 2), ratio(3, 4), int(5)]);
        let back = series_to_json(&s);
        assert_eq!(back, json!({"order": 3, "coeffs": ["1", ["-1", "2"], ["3", "4"], "5"]}));
        assert_eq!(series_from_json(&back).unwrap().coeffs(), s.coeffs());
    }

    #[test]
    fn series_rejects_bad_input() {
        for bad in [
            r#"{"order": 2, "coeffs": ["1"]}"#,
            r#"{"coeffs": []}"#,
            r#"{"coeffs": ["1/0"]}"#,
            r#"{"coeffs": ["x"]}"#,
            r#"{"coeffs": [1.5]}"#,
            r#"{"order": 0}"#,
        ] {
            let v: Value = serde_json::from_str(bad).unwrap();
            assert!(matches!(series_from_json(&v), Err(Error::Malformed(_))), "{bad}");
        }
    }

    #[test]
    fn big_integers_survive() {
        let big = "123456789012345678901234567890";
        let v = json!({"coeffs": [big, [big, "7"]]});
        let s = series_from_json(&v).unwrap();
        assert_eq!(series_to_json(&s)["coeffs"][0], json!(big));
    }

    #[test]
    fn factor_exponents_roundtrip() {
        let v = json!({"exponents": {"1": "-1", "2": "1", "3": "1/2"}, "max_index": 8});
        let f = factors_from_json(&v).unwrap();
        assert_eq!(f.get(3), ratio(1, 2));
        assert_eq!(factors_to_json(&f), v);
        assert!(factors_from_json(&json!({"exponents": {"9": "1"}, "max_index": 8})).is_err());
        assert!(factors_from_json(&json!({"exponents": {"x": "1"}})).is_err());
    }

    #[test]
    fn matrix_and_orbits() {
        let m = matrix_from_json(&json!({"dim": 2, "rows": [["1/2", "0"], [3, "-1"]]})).unwrap();
        assert_eq!(m.get(0, 0), &ratio(1, 2));
        assert_eq!(matrix_from_json(&matrix_to_json(&m)).unwrap(), m);
        assert!(matrix_from_json(&json!({"dim": 3, "rows": [["1"]]})).is_err());
        let rect = matrix_from_json(&json!({"rows": [["2", "0"]]})).unwrap();
        assert_eq!((rect.rows(), rect.cols()), (1, 2));

        let t = orbit_table_from_json(&json!({"orbits": [{"m": 2, "a": 1, "b": "0"}]})).unwrap();
        assert_eq!(t.counts(), &[OrbitCount { period: 2, a: 1, b: 0 }]);
        let t = orbit_table_from_json(&json!({"linearizations": [{"period": 1, "matrix": {"dim": 1, "rows": [["2"]]}}]})).unwrap();
        assert_eq!(t.counts(), &[OrbitCount { period: 1, a: -1, b: 0 }]);
        assert!(orbit_table_from_json(&json!({})).is_err());
    }

    #[test]
    fn verdict_shape() {
        let v = DoldVerdict { pass: false, first_violation: Some((2, ratio(-1, 2))) };
        assert_eq!(
            dold_verdict_to_json(&v),
            json!({"pass": false, "first_violation": {"k": 2, "value": "-1/2"}})
        );
        let ok = DoldVerdict { pass: true, first_violation: None };
        assert_eq!(dold_verdict_to_json(&ok), json!({"pass": true, "first_violation": null}));
    }
}
