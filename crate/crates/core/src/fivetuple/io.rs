//! JSON document format.
//!
//! ```json
//! { "beta": "x1^6 + x2^6 + x3^6", "e3_twist": 0, "sigma2": [["1", "0", ...], ...] }
//! ```

use serde_json::{json, Map, Value};
use thiserror::Error;

use super::model::FiveTuple;
use crate::exact_ring::{parse_base_poly, parse_wpoly, PolyMatrix, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiveTupleError {
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("schema violation in `{field}`: {message}")]
    Schema { field: String, message: String },
}

fn schema(field: &str, message: impl Into<String>) -> FiveTupleError {
    FiveTupleError::Schema { field: field.to_string(), message: message.into() }
}

const KEYS: [&str; 3] = ["beta", "e3_twist", "sigma2"];

pub fn parse_five_tuple(text: &str) -> Result<FiveTuple, FiveTupleError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| FiveTupleError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = doc.as_object().ok_or_else(|| schema("$", "top level must be an object"))?;
    for k in obj.keys() {
        if !KEYS.contains(&k.as_str()) {
            return Err(schema(k, "unknown key"));
        }
    }
    let sigma2 = parse_sigma2(obj)?;
    let e3_twist = match obj.get("e3_twist") {
        Some(v) => v.as_i64().ok_or_else(|| schema("e3_twist", "must be an integer"))?,
        None => return Err(schema("e3_twist", "missing")),
    };
    let beta_text = match obj.get("beta") {
        Some(Value::String(s)) => s,
        Some(_) => return Err(schema("beta", "must be a string")),
        None => return Err(schema("beta", "missing")),
    };
    let beta = parse_wpoly(beta_text).map_err(|e| schema("beta", e.to_string()))?;
    if beta.involves(Var::Z) {
        return Err(schema("beta", "beta must not involve z"));
    }
    Ok(FiveTuple { sigma2, e3_twist, beta })
}

fn parse_sigma2(obj: &Map<String, Value>) -> Result<PolyMatrix, FiveTupleError> {
    let shape = || schema("sigma2", "sigma2 must be 6×6");
    let rows = obj.get("sigma2").ok_or_else(|| schema("sigma2", "missing"))?.as_array().ok_or_else(shape)?;
    if rows.len() != 6 {
        return Err(shape());
    }
    let mut out = Vec::with_capacity(6);
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().filter(|r| r.len() == 6).ok_or_else(shape)?;
        let mut parsed = Vec::with_capacity(6);
        for (j, entry) in row.iter().enumerate() {
            let field = format!("sigma2[{i}][{j}]");
            let s = entry.as_str().ok_or_else(|| schema(&field, "must be a string"))?;
            parsed.push(parse_base_poly(s).map_err(|e| schema(&field, e.to_string()))?);
        }
        out.push(parsed);
    }
    Ok(PolyMatrix::from_rows(out))
}

/// Canonical document: sorted keys, reduced coefficients, trailing newline.
pub fn serialize_five_tuple(tuple: &FiveTuple) -> String {
    let sigma2: Vec<Vec<String>> =
        tuple.sigma2.to_rows().iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect();
    let doc = json!({
        "beta": tuple.beta.to_string(),
        "e3_twist": tuple.e3_twist,
        "sigma2": sigma2,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("json values always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_ring::rat;

    fn identity_doc(beta: &str) -> String {
        let rows: Vec<Vec<&str>> =
            (0..6).map(|i| (0..6).map(|j| if i == j { "1" } else { "0" }).collect()).collect();
        json!({"sigma2": rows, "e3_twist": 0, "beta": beta}).to_string()
    }

    #[test]
    fn parses_identity() {
        let t = parse_five_tuple(&identity_doc("x1^6 + x2^6 + x3^6")).unwrap();
        assert_eq!(t.sigma2, PolyMatrix::identity(6));
        assert_eq!(t.beta.homogeneous_degree(), Some(6));
    }

    #[test]
    fn schema_violations() {
        let doc = json!({"sigma2": vec![vec!["1"; 6]; 5], "e3_twist": 0, "beta": "y^3"}).to_string();
        let e = parse_five_tuple(&doc).unwrap_err();
        assert!(e.to_string().contains("sigma2 must be 6×6"), "{e}");
        let e = parse_five_tuple(&identity_doc("z^2")).unwrap_err();
        assert!(e.to_string().contains("beta must not involve z"), "{e}");
        let e = parse_five_tuple(&identity_doc("x1^6 +")).unwrap_err();
        assert!(matches!(e, FiveTupleError::Schema { ref field, .. } if field == "beta"));
    }

    #[test]
    fn json_errors_carry_position() {
        let e = parse_five_tuple("{\n  \"sigma2\": [\n}").unwrap_err();
        match e {
            FiveTupleError::Json { line, .. } => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn round_trip_is_a_fixed_point() {
        let mut t = parse_five_tuple(&identity_doc("x1^6 + x2^6 + x3^6")).unwrap();
        t.sigma2[(0, 1)] = crate::exact_ring::BasePoly::constant(rat(2, 4));
        let once = serialize_five_tuple(&t);
        assert!(once.contains("\"1/2\""));
        let back = parse_five_tuple(&once).unwrap();
        assert_eq!(back, t);
        assert_eq!(serialize_five_tuple(&back), once);
    }
}
