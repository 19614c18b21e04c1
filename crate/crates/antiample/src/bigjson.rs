//! Serde glue rendering arbitrary-precision integers as plain JSON
//! numbers (serde_json's arbitrary-precision mode carries them without
//! rounding).

use num_bigint::BigUint;
use serde::ser::{Error, Serialize, SerializeSeq, Serializer};
use serde_json::Number;
use std::collections::BTreeMap;

/// Exact JSON number carrying the decimal digits of `x`.
pub fn to_number(x: &BigUint) -> Result<Number, String> {
    x.to_string()
        .parse::<Number>()
        .map_err(|e| format!("big integer does not parse as a JSON number: {e}"))
}

fn number(x: &BigUint) -> Result<Number, String> {
    to_number(x)
}

pub fn biguint<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    number(x).map_err(S::Error::custom)?.serialize(s)
}

pub fn biguint_vec<S: Serializer>(xs: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&number(x).map_err(S::Error::custom)?)?;
    }
    seq.end()
}

pub fn biguint_opt<S: Serializer>(x: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => number(x).map_err(S::Error::custom)?.serialize(s),
        None => s.serialize_none(),
    }
}

/// Twist map as a sorted array of {twist, multiplicity} objects.
pub fn twist_map<S: Serializer>(m: &BTreeMap<i64, BigUint>, s: S) -> Result<S::Ok, S::Error> {
    #[derive(serde::Serialize)]
    struct Entry {
        twist: i64,
        multiplicity: Number,
    }
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for (&twist, mult) in m {
        let multiplicity = number(mult).map_err(S::Error::custom)?;
        seq.serialize_element(&Entry { twist, multiplicity })?;
    }
    seq.end()
}
