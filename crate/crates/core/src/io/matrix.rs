//! Matrix documents:
//! `{"conductor": m, "matrix": [[..]]}`, `{"conductor": m, "antidiag": [..]}`
//! or `{"conductor": m, "diag": [..]}`, entries written as polynomials in `z`.

use serde_json::{json, Map, Value};

use crate::arith::CycloNumber;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

const SHAPES: [&str; 3] = ["matrix", "antidiag", "diag"];

pub fn parse_matrix(text: &str) -> Result<ExactMatrix> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::parse("document", e.to_string()))?;
    parse_matrix_value(&value)
}

pub fn parse_matrix_value(value: &Value) -> Result<ExactMatrix> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::parse("document", "expected a JSON object"))?;
    for key in obj.keys() {
        if key != "conductor" && !SHAPES.contains(&key.as_str()) {
            return Err(Error::parse(key.clone(), "unknown key"));
        }
    }
    let conductor = match obj.get("conductor") {
        None => return Err(Error::parse("conductor", "missing")),
        Some(v) => v
            .as_u64()
            .filter(|&m| m >= 1)
            .ok_or_else(|| Error::parse("conductor", "expected a positive integer"))?,
    };
    let shapes: Vec<&str> = SHAPES
        .iter()
        .copied()
        .filter(|k| obj.contains_key(*k))
        .collect();
    let shape = match shapes.as_slice() {
        [one] => *one,
        [] => {
            return Err(Error::parse(
                "document",
                "expected one of matrix, antidiag, diag",
            ))
        }
        _ => {
            return Err(Error::parse(
                shapes[1],
                "only one of matrix, antidiag, diag may be given",
            ))
        }
    };
    let body = &obj[shape];
    match shape {
        "matrix" => {
            let rows = array(body, "matrix")?;
            if rows.is_empty() {
                return Err(Error::parse("matrix", "empty matrix"));
            }
            let n = rows.len();
            let mut parsed = Vec::with_capacity(n);
            for (i, row) in rows.iter().enumerate() {
                let field = format!("matrix[{i}]");
                let cells = array(row, &field)?;
                if cells.len() != n {
                    return Err(Error::parse(
                        field,
                        format!(
                            "row has {} entries, matrix is not square ({n} rows)",
                            cells.len()
                        ),
                    ));
                }
                parsed.push(
                    cells
                        .iter()
                        .enumerate()
                        .map(|(j, c)| entry(c, conductor, &format!("matrix[{i}][{j}]")))
                        .collect::<Result<Vec<_>>>()?,
                );
            }
            ExactMatrix::from_rows(conductor, parsed)
        }
        _ => {
            let values = array(body, shape)?
                .iter()
                .enumerate()
                .map(|(i, c)| entry(c, conductor, &format!("{shape}[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            if values.is_empty() {
                return Err(Error::parse(shape, "empty list"));
            }
            if let Some(i) = values.iter().position(CycloNumber::is_zero) {
                return Err(Error::parse(
                    format!("{shape}[{i}]"),
                    "zero entry makes the matrix singular",
                ));
            }
            if shape == "antidiag" {
                ExactMatrix::antidiag(&values)
            } else {
                ExactMatrix::diag(&values)
            }
        }
    }
}

fn array<'a>(v: &'a Value, field: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::parse(field, "expected an array"))
}

fn entry(v: &Value, conductor: u64, field: &str) -> Result<CycloNumber> {
    let text = v
        .as_str()
        .ok_or_else(|| Error::parse(field, "expected a string such as \"1/2*z+3\""))?;
    CycloNumber::parse(conductor, text).map_err(|e| match e {
        Error::Parse { message, .. } => Error::parse(field, message),
        other => Error::parse(field, other.to_string()),
    })
}

/// The full-matrix form, which [`parse_matrix_value`] reads back exactly.
pub fn matrix_to_json(m: &ExactMatrix) -> Value {
    let rows: Vec<Value> = m
        .rows()
        .map(|r| Value::Array(r.iter().map(|c| Value::String(c.to_z_string())).collect()))
        .collect();
    let mut obj = Map::new();
    obj.insert("conductor".into(), json!(m.conductor()));
    obj.insert("matrix".into(), Value::Array(rows));
    Value::Object(obj)
}
