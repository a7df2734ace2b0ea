//! JSON documents for actions and pairings.
//!
//! ```json
//! {"genus": 3, "matrix": [[...], ...], "pairing": "standard"}
//! ```
//!
//! `pairing` is either `"standard"` (the default when absent) or a full
//! `2g × 2g` matrix. Entries are JSON integers of any size, or decimal strings.

use serde_json::{Map, Number, Value};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::surface::{Action, IntersectionForm};

/// A parsed action document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionDocument<T> {
    pub action: Action<T>,
    pub pairing: IntersectionForm<T>,
    /// Whether the pairing was given as `"standard"` or omitted.
    pub standard_pairing: bool,
}

fn parse_entry<T: Scalar>(field: &str, v: &Value) -> Result<T> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        other => return Err(Error::input(field, format!("expected an integer, got {other}"))),
    };
    T::from_str_radix(&text, 10).map_err(|_| Error::input(field, format!("{text:?} is not an integer")))
}

/// Reads a square integer matrix of side `dim` from a JSON array of rows.
pub fn parse_matrix<T: Scalar>(field: &str, v: &Value, dim: usize) -> Result<Matrix<T>> {
    let Value::Array(rows) = v else {
        return Err(Error::input(field, "expected an array of rows"));
    };
    if rows.len() != dim {
        return Err(Error::input(field, format!("expected {dim} rows, found {}", rows.len())));
    }
    let mut out = Vec::with_capacity(dim);
    for (i, row) in rows.iter().enumerate() {
        let Value::Array(cells) = row else {
            return Err(Error::input(format!("{field}[{i}]"), "expected an array"));
        };
        if cells.len() != dim {
            return Err(Error::input(
                format!("{field}[{i}]"),
                format!("expected {dim} entries, found {}", cells.len()),
            ));
        }
        out.push(
            cells
                .iter()
                .enumerate()
                .map(|(j, c)| parse_entry(&format!("{field}[{i}][{j}]"), c))
                .collect::<Result<Vec<T>>>()?,
        );
    }
    Matrix::from_rows(out)
}

fn parse_genus(obj: &Map<String, Value>) -> Result<u32> {
    let g = obj
        .get("genus")
        .ok_or_else(|| Error::input("genus", "missing"))?
        .as_u64()
        .ok_or_else(|| Error::input("genus", "expected a non-negative integer"))?;
    u32::try_from(g).map_err(|_| Error::input("genus", format!("{g} is too large")))
}

fn parse_pairing_value<T: Scalar>(v: Option<&Value>, genus: u32) -> Result<(IntersectionForm<T>, bool)> {
    match v {
        None => Ok((IntersectionForm::standard(genus)?, true)),
        Some(Value::String(s)) if s == "standard" => Ok((IntersectionForm::standard(genus)?, true)),
        Some(Value::String(s)) => Err(Error::input("pairing", format!("unknown pairing {s:?}"))),
        Some(m) => {
            let form = parse_matrix("pairing", m, 2 * genus as usize)?;
            let form = IntersectionForm::new(genus, form).map_err(|e| Error::input("pairing", e.to_string()))?;
            Ok((form, false))
        }
    }
}

fn parse_object(text: &str) -> Result<Map<String, Value>> {
    match serde_json::from_str::<Value>(text) {
        Ok(Value::Object(obj)) => Ok(obj),
        Ok(_) => Err(Error::input("document", "expected a JSON object")),
        Err(e) => Err(Error::input("document", e.to_string())),
    }
}

pub fn parse_action_document<T: Scalar>(text: &str) -> Result<ActionDocument<T>> {
    let obj = parse_object(text)?;
    let genus = parse_genus(&obj)?;
    let matrix = obj.get("matrix").ok_or_else(|| Error::input("matrix", "missing"))?;
    let matrix = parse_matrix("matrix", matrix, 2 * genus as usize)?;
    let action = Action::new(genus, matrix)?;
    let (pairing, standard_pairing) = parse_pairing_value(obj.get("pairing"), genus)?;
    Ok(ActionDocument {
        action,
        pairing,
        standard_pairing,
    })
}

/// Reads a pairing on its own: either a bare matrix or an object with a
/// `pairing` key (and optionally `genus`, which must agree).
pub fn parse_pairing_document<T: Scalar>(text: &str, genus: u32) -> Result<IntersectionForm<T>> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::input("pairing", e.to_string()))?;
    match &v {
        Value::Object(obj) => {
            if obj.contains_key("genus") {
                let g = parse_genus(obj)?;
                if g != genus {
                    return Err(Error::GenusMismatch { expected: genus, found: g });
                }
            }
            let p = obj.get("pairing").ok_or_else(|| Error::input("pairing", "missing"))?;
            Ok(parse_pairing_value(Some(p), genus)?.0)
        }
        _ => Ok(parse_pairing_value(Some(&v), genus)?.0),
    }
}

/// A JSON number carrying the exact decimal expansion of `v`.
pub fn number<T: Scalar>(v: &T) -> Value {
    Value::Number(v.to_string().parse::<Number>().expect("integers are valid JSON numbers"))
}

pub fn matrix_json<T: Scalar>(m: &Matrix<T>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(number).collect()))
            .collect(),
    )
}

pub fn action_document_json<T: Scalar>(action: &Action<T>, pairing: Option<&IntersectionForm<T>>) -> Value {
    let mut obj = Map::new();
    obj.insert("genus".into(), Value::from(action.genus()));
    obj.insert("matrix".into(), matrix_json(action.matrix()));
    obj.insert(
        "pairing".into(),
        match pairing {
            None => Value::from("standard"),
            Some(p) => matrix_json(p.form()),
        },
    );
    Value::Object(obj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn round_trip_with_big_entries() {
        let text = r#"{"genus":1,"matrix":[[123456789012345678901234567890,"-5"],[0,1]]}"#;
        let doc = parse_action_document::<BigInt>(text).unwrap();
        assert!(doc.standard_pairing);
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(doc.action.matrix().get(0, 0), &big);
        assert_eq!(doc.action.matrix().get(0, 1), &BigInt::from(-5));
        let out = action_document_json(&doc.action, None).to_string();
        assert!(out.contains("123456789012345678901234567890"));
        let again = parse_action_document::<BigInt>(&out).unwrap();
        assert_eq!(again, doc);
    }

    #[test]
    fn errors_name_the_field() {
        let cases = [
            (r#"{"matrix":[[1]]}"#, "genus"),
            (r#"{"genus":1}"#, "matrix"),
            (r#"{"genus":1,"matrix":[[1,0]]}"#, "matrix"),
            (r#"{"genus":1,"matrix":[[1,0],[0]]}"#, "matrix[1]"),
            (r#"{"genus":1,"matrix":[[1,0.5],[0,1]]}"#, "matrix[0][1]"),
            (r#"{"genus":1,"matrix":[[1,true],[0,1]]}"#, "matrix[0][1]"),
            (r#"{"genus":1,"matrix":[[1,0],[0,1]],"pairing":"weird"}"#, "pairing"),
            (r#"{"genus":1,"matrix":[[1,0],[0,1]],"pairing":[[0,1],[1,0]]}"#, "pairing"),
            ("[1,2]", "document"),
            ("{", "document"),
        ];
        for (text, want) in cases {
            match parse_action_document::<BigInt>(text) {
                Err(Error::InvalidInput { field, .. }) => assert_eq!(field, want, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn explicit_pairing() {
        let text = r#"{"genus":1,"matrix":[[1,0],[0,1]],"pairing":[[0,-1],[1,0]]}"#;
        let doc = parse_action_document::<i64>(text).unwrap();
        assert!(!doc.standard_pairing);
        assert_eq!(doc.pairing.form().get(0, 1), &-1);
        let p = parse_pairing_document::<i64>("[[0,1],[-1,0]]", 1).unwrap();
        assert_eq!(p, IntersectionForm::standard(1).unwrap());
        assert!(parse_pairing_document::<i64>(r#"{"genus":2,"pairing":"standard"}"#, 1).is_err());
    }
}
