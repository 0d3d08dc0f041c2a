//! JSON rendering of exact values and the result document.

use orthofarkas::complex::GaussianRational;
use orthofarkas::lattice::{Band, Operator, Rational};
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Serialize)]
pub struct ResultDocument {
    pub result: &'static str,
    pub body: Value,
    pub verified: bool,
    pub engine_version: String,
}

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn vector(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn matrix(rows: &[Vec<Rational>]) -> Value {
    Value::Array(rows.iter().map(|r| vector(r)).collect())
}

pub fn operator(op: &Operator) -> Value {
    matrix(op.entries())
}

pub fn complex(z: &GaussianRational) -> Value {
    Value::Array(vec![rational(&z.re), rational(&z.im)])
}

pub fn complex_vector(v: &[GaussianRational]) -> Value {
    Value::Array(v.iter().map(complex).collect())
}

pub fn band(b: &Band) -> Value {
    Value::Array(b.members().map(Value::from).collect())
}
