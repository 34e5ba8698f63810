//! JSON model and transformation files.
//!
//! Both use `{"degree": n, "coefficients": ...}`. Rationals are strings
//! such as `"-3"` or `"5/7"`; plain JSON integers are accepted on input.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::model::GenusOneModel;
use super::transform::Transformation;
use crate::error::{Error, Result};
use crate::exactmath::{format_rational, parse_rational, RatMatrix, Rational};

#[derive(Serialize, Deserialize)]
struct Envelope {
    degree: u8,
    coefficients: Value,
}

fn parse_error(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn scalar(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rational::from_integer(i.into()))
            .ok_or_else(|| parse_error(format!("not an integer: {n}"))),
        other => Err(parse_error(format!("expected a rational, got {other}"))),
    }
}

fn list(v: &Value, len: usize, what: &str) -> Result<Vec<Rational>> {
    let arr = v
        .as_array()
        .ok_or_else(|| parse_error(format!("{what}: expected an array")))?;
    if arr.len() != len {
        return Err(parse_error(format!(
            "{what}: expected {len} entries, got {}",
            arr.len()
        )));
    }
    arr.iter().map(scalar).collect()
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| parse_error(format!("missing field `{key}`")))
}

fn matrix(v: &Value, n: usize, what: &str) -> Result<RatMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| parse_error(format!("{what}: expected an array of rows")))?;
    if rows.len() != n {
        return Err(parse_error(format!("{what}: expected {n} rows")));
    }
    let rows = rows
        .iter()
        .map(|r| list(r, n, what))
        .collect::<Result<Vec<_>>>()?;
    RatMatrix::from_rows(rows)
}

fn strings(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|q| Value::String(format_rational(q))).collect())
}

fn matrix_json(m: &RatMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| strings(r)).collect())
}

fn envelope(text: &str) -> Result<Envelope> {
    serde_json::from_str(text).map_err(|e| parse_error(e.to_string()))
}

pub fn model_from_json(text: &str) -> Result<GenusOneModel> {
    let env = envelope(text)?;
    let c = &env.coefficients;
    let flat = match env.degree {
        1 => list(c, 5, "coefficients")?,
        2 => {
            let mut v = list(field(c, "p")?, 3, "p")?;
            v.extend(list(field(c, "q")?, 5, "q")?);
            v
        }
        3 => list(c, 10, "coefficients")?,
        4 => {
            let mut v = list(field(c, "q1")?, 10, "q1")?;
            v.extend(list(field(c, "q2")?, 10, "q2")?);
            v
        }
        5 => {
            let rows = field(c, "matrix")?
                .as_array()
                .ok_or_else(|| parse_error("matrix: expected an array"))?;
            if rows.len() != 10 {
                return Err(parse_error(format!(
                    "matrix: expected 10 upper-triangle entries, got {}",
                    rows.len()
                )));
            }
            let mut v = Vec::with_capacity(50);
            for r in rows {
                v.extend(list(r, 5, "matrix entry")?);
            }
            v
        }
        d => {
            return Err(parse_error(format!("unsupported degree {d}")));
        }
    };
    GenusOneModel::from_coefficients(env.degree, flat)
}

pub fn model_to_json(m: &GenusOneModel) -> String {
    let c = m.coefficients();
    let coefficients = match m.degree() {
        2 => json!({"p": strings(&c[..3]), "q": strings(&c[3..])}),
        4 => json!({"q1": strings(&c[..10]), "q2": strings(&c[10..])}),
        5 => json!({"matrix": c.chunks(5).map(strings).collect::<Vec<_>>()}),
        _ => strings(&c),
    };
    let env = Envelope {
        degree: m.degree(),
        coefficients,
    };
    serde_json::to_string_pretty(&env).expect("serialisable") + "\n"
}

/// Reads a transformation: degree 1 has `u, r, s, t`; degree 2 `mu, r, B`;
/// degree 3 `mu, B`; degrees 4 and 5 `A, B`.
pub fn transformation_from_json(text: &str) -> Result<Transformation> {
    let env = envelope(text)?;
    let c = &env.coefficients;
    let g = match env.degree {
        1 => Transformation::Weierstrass {
            u: scalar(field(c, "u")?)?,
            r: scalar(field(c, "r")?)?,
            s: scalar(field(c, "s")?)?,
            t: scalar(field(c, "t")?)?,
        },
        2 => {
            let r = list(field(c, "r")?, 3, "r")?;
            Transformation::BinaryQuartic {
                mu: scalar(field(c, "mu")?)?,
                r: [r[0].clone(), r[1].clone(), r[2].clone()],
                b: matrix(field(c, "B")?, 2, "B")?,
            }
        }
        3 => Transformation::TernaryCubic {
            mu: scalar(field(c, "mu")?)?,
            b: matrix(field(c, "B")?, 3, "B")?,
        },
        4 => Transformation::QuadricPair {
            a: matrix(field(c, "A")?, 2, "A")?,
            b: matrix(field(c, "B")?, 4, "B")?,
        },
        5 => Transformation::Quintic {
            a: matrix(field(c, "A")?, 5, "A")?,
            b: matrix(field(c, "B")?, 5, "B")?,
        },
        d => return Err(parse_error(format!("unsupported degree {d}"))),
    };
    g.validate()?;
    Ok(g)
}

pub fn transformation_to_json(g: &Transformation) -> String {
    let s = |q: &Rational| Value::String(format_rational(q));
    let coefficients = match g {
        Transformation::Weierstrass { u, r, s: sv, t } => {
            json!({"u": s(u), "r": s(r), "s": s(sv), "t": s(t)})
        }
        Transformation::BinaryQuartic { mu, r, b } => {
            json!({"mu": s(mu), "r": strings(r), "B": matrix_json(b)})
        }
        Transformation::TernaryCubic { mu, b } => json!({"mu": s(mu), "B": matrix_json(b)}),
        Transformation::QuadricPair { a, b } | Transformation::Quintic { a, b } => {
            json!({"A": matrix_json(a), "B": matrix_json(b)})
        }
    };
    let env = Envelope {
        degree: g.degree(),
        coefficients,
    };
    serde_json::to_string_pretty(&env).expect("serialisable") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio};
    use crate::models::weierstrass::weierstrass_model;

    #[test]
    fn round_trips() {
        let w = GenusOneModel::weierstrass([rat(1), ratio(-1, 2), rat(0), rat(3), rat(-7)]);
        for n in 1..=5 {
            let m = weierstrass_model(&w, n).unwrap();
            assert_eq!(model_from_json(&model_to_json(&m)).unwrap(), m);
        }
        let g = crate::models::transform::gamma(
            &Transformation::Weierstrass {
                u: rat(2),
                r: rat(1),
                s: ratio(1, 3),
                t: rat(-1),
            },
            5,
        )
        .unwrap();
        assert_eq!(transformation_from_json(&transformation_to_json(&g)).unwrap(), g);
    }

    #[test]
    fn integers_and_errors() {
        let m = model_from_json(r#"{"degree": 1, "coefficients": [0, 0, 0, "-1", 0]}"#).unwrap();
        assert_eq!(m, GenusOneModel::weierstrass([0, 0, 0, -1, 0].map(rat)));
        assert!(model_from_json(r#"{"degree": 1, "coefficients": [0, 0]}"#).is_err());
        assert!(model_from_json(r#"{"degree": 7, "coefficients": []}"#).is_err());
        assert!(model_from_json("not json").is_err());
        assert!(model_from_json(r#"{"degree": 3, "coefficients": ["1/0",0,0,0,0,0,0,0,0,0]}"#).is_err());
        let singular = r#"{"degree": 3, "coefficients": {"mu": "0", "B": [[1,0,0],[0,1,0],[0,0,1]]}}"#;
        assert!(transformation_from_json(singular).is_err());
    }
}
