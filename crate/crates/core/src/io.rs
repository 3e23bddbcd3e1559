//! JSON forms of ideals.
//!
//! ```json
//! { "ring": { "vars": ["X", "Y", "Z"], "field": "QQ" }, "gens": ["X^2", "Y^2"] }
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{parse_poly, Field, Polynomial, Ring};

#[derive(Serialize, Deserialize)]
struct RingJson {
    vars: Vec<String>,
    field: String,
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    ring: RingJson,
    gens: Vec<String>,
}

pub fn ideal_to_json(ideal: &Ideal) -> serde_json::Value {
    let ring = ideal.ring();
    serde_json::to_value(IdealJson {
        ring: RingJson {
            vars: ring.var_names().to_vec(),
            field: ring.field().tag(),
        },
        gens: ideal.gens().iter().map(ToString::to_string).collect(),
    })
    .expect("serializable")
}

/// Reads an ideal; `field` overrides the field named in the document.
pub fn ideal_from_json(value: &serde_json::Value, field: Option<Field>) -> Result<Ideal> {
    let doc: IdealJson = serde_json::from_value(value.clone())?;
    let field = match field {
        Some(f) => f,
        None => Field::parse_tag(&doc.ring.field)?,
    };
    let ring = Ring::new(&doc.ring.vars, field)?;
    Ideal::from_strs(&ring, &doc.gens)
}

pub fn read_ideal(path: &Path, field: Option<Field>) -> Result<Ideal> {
    let text = std::fs::read_to_string(path)?;
    ideal_from_json(&serde_json::from_str(&text)?, field)
}

#[derive(Deserialize)]
struct MatrixJson {
    ring: Option<RingJson>,
    matrix: Vec<Vec<String>>,
}

/// Reads `{"ring": ..., "matrix": [["X", "Y"], ...]}`; without a ring the
/// entries live in `k[X,Y,Z]` over `field` (rationals by default).
pub fn matrix_from_json(
    value: &serde_json::Value,
    field: Option<Field>,
) -> Result<Vec<Vec<Polynomial>>> {
    let doc: MatrixJson = serde_json::from_value(value.clone())?;
    let ring = match doc.ring {
        Some(r) => {
            let field = match field {
                Some(f) => f,
                None => Field::parse_tag(&r.field)?,
            };
            Ring::new(&r.vars, field)?
        }
        None => Ring::xyz(field.unwrap_or(Field::Rationals)),
    };
    if doc.matrix.is_empty() {
        return Err(Error::Precondition("empty matrix".into()));
    }
    doc.matrix
        .iter()
        .map(|row| row.iter().map(|e| parse_poly(e, &ring)).collect())
        .collect()
}

pub fn read_matrix(path: &Path, field: Option<Field>) -> Result<Vec<Vec<Polynomial>>> {
    let text = std::fs::read_to_string(path)?;
    matrix_from_json(&serde_json::from_str(&text)?, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_equal;

    #[test]
    fn roundtrip() {
        let ring = Ring::new(&["a", "b", "c"], Field::Prime(101)).unwrap();
        let i = Ideal::from_strs(&ring, &["a^2 - 3*b*c", "c^3"]).unwrap();
        let v = ideal_to_json(&i);
        assert_eq!(v["ring"]["field"], "Fp:101");
        let back = ideal_from_json(&v, None).unwrap();
        assert!(ideal_equal(&i, &back).unwrap());
        assert_eq!(back.gens(), i.gens());
    }

    #[test]
    fn matrix_document() {
        let v = serde_json::json!({"matrix": [["X", "Y", "Z", "0"], ["0", "X", "Y", "Z"]]});
        let m = matrix_from_json(&v, None).unwrap();
        assert_eq!((m.len(), m[1].len()), (2, 4));
        assert!(m[1][0].is_zero());
    }

    #[test]
    fn bad_documents() {
        assert!(ideal_from_json(&serde_json::json!({"gens": []}), None).is_err());
        let v = serde_json::json!({"ring": {"vars": ["X"], "field": "Fp:4"}, "gens": ["X"]});
        assert!(ideal_from_json(&v, None).is_err());
    }
}
