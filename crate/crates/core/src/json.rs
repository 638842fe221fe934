//! JSON input and output for complexes, vectors and matrices.
//!
//! Input is `{"facets": [[1, 2, 3], ["a", "b"]]}`; labels may be strings or
//! integers. Big integers are written as plain JSON numbers.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Number, Value};
use thiserror::Error;

use crate::complex::{ComplexError, SimplicialComplex};
use crate::transforms::IntegerMatrix;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("expected an array of integers")]
    NotAnIntegerArray,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Label {
    Int(i64),
    Str(String),
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Label::Int(i) => write!(f, "{i}"),
            Label::Str(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Deserialize)]
struct ComplexInput {
    facets: Vec<Vec<Label>>,
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, JsonError> {
    let input: ComplexInput = serde_json::from_str(text)?;
    Ok(SimplicialComplex::from_facets(input.facets)?)
}

pub fn bigint(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integers are valid JSON numbers"))
}

pub fn bigints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(bigint).collect())
}

pub fn matrix(m: &IntegerMatrix) -> Value {
    Value::Array(m.rows().iter().map(|row| bigints(row)).collect())
}

/// Vertices in id order, facets sorted by their label lists.
pub fn complex(c: &SimplicialComplex) -> Value {
    let mut facets: Vec<Vec<String>> = c.facets().iter().map(|f| c.labeled_face(f)).collect();
    facets.sort();
    json!({
        "vertices": c.labels(),
        "facets": facets,
        "f_vector": bigints(c.f_vector().entries()),
        "h_vector": bigints(c.h_vector().entries()),
    })
}

/// An integer vector given either bare (`[1, 3, 3, 1]`) or as the
/// `f_vector` of a complex document.
pub fn parse_vector(text: &str) -> Result<Vec<BigInt>, JsonError> {
    let value: Value = serde_json::from_str(text)?;
    let array = match &value {
        Value::Array(a) => a,
        Value::Object(o) => match o.get("f_vector") {
            Some(Value::Array(a)) => a,
            _ => return Err(JsonError::NotAnIntegerArray),
        },
        _ => return Err(JsonError::NotAnIntegerArray),
    };
    array
        .iter()
        .map(|v| match v {
            Value::Number(n) => BigInt::from_str(&n.to_string()).map_err(|_| JsonError::NotAnIntegerArray),
            _ => Err(JsonError::NotAnIntegerArray),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_labels() {
        let c = parse_complex(r#"{"facets": [[1, 2, 3], ["a", 3]]}"#).unwrap();
        assert_eq!(c.num_vertices(), 4);
        assert!(c.contains_labeled_face(&["a", "3"]));
    }

    #[test]
    fn bad_input() {
        assert!(matches!(parse_complex("{"), Err(JsonError::Syntax(_))));
        assert!(matches!(parse_complex(r#"{"facets": []}"#), Err(JsonError::Complex(ComplexError::EmptyInput))));
    }

    #[test]
    fn big_numbers_stay_exact() {
        let x = BigInt::from_str("123456789012345678901234567890").unwrap();
        assert_eq!(bigint(&x).to_string(), "123456789012345678901234567890");
        assert_eq!(parse_vector("[123456789012345678901234567890, 1]").unwrap()[0], x);
    }

    #[test]
    fn complex_round_trip() {
        let c = SimplicialComplex::simplex_boundary(3);
        let text = complex(&c).to_string();
        let back = parse_complex(&text).unwrap();
        assert_eq!(back.labeled_faces(), c.labeled_faces());
        assert_eq!(parse_vector(&text).unwrap(), c.f_vector().0);
    }
}
