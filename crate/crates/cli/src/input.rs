//! Instance documents: JSON with exact rationals.
//!
//! Rationals are strings `"p/q"`, `"p"` or bare JSON integers. Complex values
//! are `[re, im]`. Matrices are row-major arrays of rows.

use std::fmt;

use orthofarkas::complex::{ComplexOperator, GaussianRational};
use orthofarkas::interval::IntervalOperator;
use orthofarkas::lattice::{Operator, Point, Rational};
use serde_json::Value;

#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<orthofarkas::Error> for InputError {
    fn from(e: orthofarkas::Error) -> Self {
        InputError(e.to_string())
    }
}

pub type Parsed<T> = std::result::Result<T, InputError>;

fn fail<T>(msg: impl Into<String>) -> Parsed<T> {
    Err(InputError(msg.into()))
}

/// A parsed instance document whose kind matched the subcommand.
pub struct Instance {
    doc: serde_json::Map<String, Value>,
}

impl Instance {
    pub fn parse(text: &str, expected_kind: &str) -> Parsed<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| InputError(format!("invalid JSON: {e}")))?;
        let Value::Object(doc) = value else {
            return fail("instance must be a JSON object");
        };
        let kind = match doc.get("kind") {
            Some(Value::String(k)) => k.clone(),
            _ => return fail("missing string field `kind`"),
        };
        if kind != expected_kind {
            return fail(format!("instance kind `{kind}` does not match subcommand `{expected_kind}`"));
        }
        Ok(Instance { doc })
    }

    fn field(&self, name: &str) -> Parsed<&Value> {
        self.doc.get(name).ok_or_else(|| InputError(format!("missing field `{name}`")))
    }

    pub fn has(&self, name: &str) -> bool {
        self.doc.contains_key(name)
    }

    pub fn size(&self, name: &str) -> Parsed<usize> {
        match self.field(name)? {
            Value::Number(n) => n
                .as_u64()
                .map(|v| v as usize)
                .ok_or_else(|| InputError(format!("`{name}` must be a nonnegative integer"))),
            _ => fail(format!("`{name}` must be a nonnegative integer")),
        }
    }

    pub fn optional_size(&self, name: &str) -> Parsed<Option<usize>> {
        if self.has(name) {
            self.size(name).map(Some)
        } else {
            Ok(None)
        }
    }

    pub fn vector(&self, name: &str, len: usize) -> Parsed<Vec<Rational>> {
        vector(self.field(name)?, len, name)
    }

    pub fn matrix(&self, name: &str, rows: usize, cols: usize) -> Parsed<Operator> {
        matrix(self.field(name)?, rows, cols, name)
    }

    pub fn points(&self, name: &str, count: usize, len: usize) -> Parsed<Vec<Point>> {
        list(self.field(name)?, count, name)?
            .iter()
            .enumerate()
            .map(|(k, v)| vector(v, len, &format!("{name}[{k}]")).map(Point::new))
            .collect()
    }

    pub fn matrices(&self, name: &str, count: usize, rows: usize, cols: usize) -> Parsed<Vec<Operator>> {
        list(self.field(name)?, count, name)?
            .iter()
            .enumerate()
            .map(|(k, v)| matrix(v, rows, cols, &format!("{name}[{k}]")))
            .collect()
    }

    pub fn interval(&self, name: &str, rows: usize, cols: usize) -> Parsed<IntervalOperator> {
        interval(self.field(name)?, rows, cols, name)
    }

    pub fn intervals(&self, name: &str, count: usize, rows: usize, cols: usize) -> Parsed<Vec<IntervalOperator>> {
        list(self.field(name)?, count, name)?
            .iter()
            .enumerate()
            .map(|(k, v)| interval(v, rows, cols, &format!("{name}[{k}]")))
            .collect()
    }

    pub fn complex_matrix(&self, name: &str, rows: usize, cols: usize) -> Parsed<ComplexOperator> {
        complex_matrix(self.field(name)?, rows, cols, name)
    }

    pub fn complex_matrices(&self, name: &str, count: usize, rows: usize, cols: usize) -> Parsed<Vec<ComplexOperator>> {
        list(self.field(name)?, count, name)?
            .iter()
            .enumerate()
            .map(|(k, v)| complex_matrix(v, rows, cols, &format!("{name}[{k}]")))
            .collect()
    }

    pub fn complex_vectors(&self, name: &str, count: usize, len: usize) -> Parsed<Vec<Vec<GaussianRational>>> {
        list(self.field(name)?, count, name)?
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let ctx = format!("{name}[{k}]");
                list(v, len, &ctx)?
                    .iter()
                    .enumerate()
                    .map(|(i, z)| complex(z, &format!("{ctx}[{i}]")))
                    .collect()
            })
            .collect()
    }
}

/// Parses `"p/q"`, `"p"` or a JSON integer. Zero denominators and floats
/// are rejected.
pub fn rational(v: &Value, ctx: &str) -> Parsed<Rational> {
    match v {
        Value::String(s) => s
            .trim()
            .parse::<Rational>()
            .map_err(|e| InputError(format!("{ctx}: cannot parse rational {s:?}: {e}"))),
        Value::Number(n) if n.is_i64() || n.is_u64() => n
            .to_string()
            .parse::<Rational>()
            .map_err(|e| InputError(format!("{ctx}: {e}"))),
        Value::Number(n) => fail(format!("{ctx}: {n} is not exact; write it as a \"p/q\" string")),
        other => fail(format!("{ctx}: expected a rational, found {other}")),
    }
}

fn list<'a>(v: &'a Value, len: usize, ctx: &str) -> Parsed<&'a [Value]> {
    match v {
        Value::Array(items) if items.len() == len => Ok(items),
        Value::Array(items) => fail(format!("{ctx}: expected {len} entries, found {}", items.len())),
        _ => fail(format!("{ctx}: expected an array")),
    }
}

fn vector(v: &Value, len: usize, ctx: &str) -> Parsed<Vec<Rational>> {
    list(v, len, ctx)?
        .iter()
        .enumerate()
        .map(|(i, e)| rational(e, &format!("{ctx}[{i}]")))
        .collect()
}

fn matrix(v: &Value, rows: usize, cols: usize, ctx: &str) -> Parsed<Operator> {
    let entries = list(v, rows, ctx)?
        .iter()
        .enumerate()
        .map(|(i, r)| vector(r, cols, &format!("{ctx}[{i}]")))
        .collect::<Parsed<Vec<_>>>()?;
    Ok(Operator::new(cols, entries)?)
}

fn interval(v: &Value, rows: usize, cols: usize, ctx: &str) -> Parsed<IntervalOperator> {
    let Value::Object(obj) = v else {
        return fail(format!("{ctx}: expected {{\"lower\", \"upper\"}}"));
    };
    let get = |key: &str| {
        obj.get(key)
            .ok_or_else(|| InputError(format!("{ctx}: missing `{key}`")))
            .and_then(|m| matrix(m, rows, cols, &format!("{ctx}.{key}")))
    };
    IntervalOperator::new(get("lower")?, get("upper")?).map_err(|e| InputError(format!("{ctx}: {e}")))
}

fn complex(v: &Value, ctx: &str) -> Parsed<GaussianRational> {
    match v {
        Value::Array(parts) if parts.len() == 2 => Ok(GaussianRational::new(
            rational(&parts[0], &format!("{ctx}.re"))?,
            rational(&parts[1], &format!("{ctx}.im"))?,
        )),
        _ => fail(format!("{ctx}: expected a complex number [re, im]")),
    }
}

fn complex_matrix(v: &Value, rows: usize, cols: usize, ctx: &str) -> Parsed<ComplexOperator> {
    let entries = list(v, rows, ctx)?
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let rctx = format!("{ctx}[{i}]");
            list(r, cols, &rctx)?
                .iter()
                .enumerate()
                .map(|(j, z)| complex(z, &format!("{rctx}[{j}]")))
                .collect()
        })
        .collect::<Parsed<Vec<_>>>()?;
    Ok(ComplexOperator::new(cols, entries)?)
}
