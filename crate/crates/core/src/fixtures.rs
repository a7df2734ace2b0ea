//! Bundled test data: the Klein quartic generators `R`, `S`, `T` on `H_1` of
//! the genus-3 surface (standard pairing) and their integer shift vectors.
//!
//! The raw files are pinned by SHA-256 so silent edits are caught.

use num_bigint::BigInt;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::io::parse_action_document;
use crate::surface::{Action, IntersectionForm};

pub const KLEIN_R_JSON: &str = include_str!("../fixtures/klein_R.json");
pub const KLEIN_S_JSON: &str = include_str!("../fixtures/klein_S.json");
pub const KLEIN_T_JSON: &str = include_str!("../fixtures/klein_T.json");
pub const KLEIN_V_JSON: &str = include_str!("../fixtures/klein_v.json");

/// `(file name, contents, sha256)` for every bundled file.
pub const CHECKSUMS: [(&str, &str, &str); 4] = [
    ("klein_R.json", KLEIN_R_JSON, "2d0b89ddf0bebb6271fab3e72cf9b5194c762bd529aed1c57545eaca5ec1a259"),
    ("klein_S.json", KLEIN_S_JSON, "48ee4fb9d31504f7fedac09e4a2afcfeb676ac586c7610d7d5e021618a25072b"),
    ("klein_T.json", KLEIN_T_JSON, "cb73df8d1d9b7b430986055b4b5783cc379d117f419864e25ae2f5fcb7e9b0cb"),
    ("klein_v.json", KLEIN_V_JSON, "aac5ca3964ee4d10286a5c458a8147af63fd241332d65514bda3158ca80d696b"),
];

fn hex_digest(data: &str) -> String {
    Sha256::digest(data.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Checks every bundled file against its pinned digest.
pub fn verify_checksums() -> Result<()> {
    for (name, data, want) in CHECKSUMS {
        let got = hex_digest(data);
        if got != want {
            return Err(Error::input(name, format!("sha256 {got} does not match pinned {want}")));
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct KleinData {
    pub pairing: IntersectionForm<BigInt>,
    pub r: Action<BigInt>,
    pub s: Action<BigInt>,
    pub t: Action<BigInt>,
    pub v_r: Vec<BigInt>,
    pub v_s: Vec<BigInt>,
    pub v_t: Vec<BigInt>,
}

impl KleinData {
    /// `(name, action, integer shift)` in the order R, S, T.
    pub fn generators(&self) -> [(&'static str, &Action<BigInt>, &[BigInt]); 3] {
        [("R", &self.r, &self.v_r), ("S", &self.s, &self.v_s), ("T", &self.t, &self.v_t)]
    }
}

fn shift(obj: &Value, key: &str) -> Result<Vec<BigInt>> {
    obj.get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| Error::input(key, "missing shift vector"))?
        .iter()
        .map(|v| {
            v.as_i64()
                .map(BigInt::from)
                .ok_or_else(|| Error::input(key, "entries must be integers"))
        })
        .collect()
}

pub fn klein_data() -> Result<KleinData> {
    verify_checksums()?;
    let r = parse_action_document::<BigInt>(KLEIN_R_JSON)?;
    let s = parse_action_document::<BigInt>(KLEIN_S_JSON)?;
    let t = parse_action_document::<BigInt>(KLEIN_T_JSON)?;
    let v: Value = serde_json::from_str(KLEIN_V_JSON).map_err(|e| Error::input("klein_v.json", e.to_string()))?;
    Ok(KleinData {
        pairing: r.pairing,
        r: r.action,
        s: s.action,
        t: t.action,
        v_r: shift(&v, "R")?,
        v_s: shift(&v, "S")?,
        v_t: shift(&v, "T")?,
    })
}

/// Solution counts for `R`, `S`, `T` individually.
pub const KLEIN_EXPECTED_COUNTS: [u64; 3] = [16, 4, 1];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::v_vector_int;

    #[test]
    fn checksums_hold() {
        verify_checksums().unwrap();
    }

    #[test]
    fn shifts_match_recomputation() {
        let k = klein_data().unwrap();
        for (name, a, v) in k.generators() {
            assert_eq!(v_vector_int(a, &k.pairing).unwrap(), v, "{name}");
        }
    }

    #[test]
    fn orders() {
        let k = klein_data().unwrap();
        assert_eq!(k.r.matrix().multiplicative_order(10), Some(2));
        assert_eq!(k.s.matrix().multiplicative_order(10), Some(3));
        assert_eq!(k.t.matrix().multiplicative_order(10), Some(7));
    }
}
