//! Serde helpers: integers that fit in 64 bits become JSON numbers, larger
//! ones become decimal strings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::SerializeSeq;
use serde::Serializer;

pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    if let Some(i) = v.to_i64() {
        s.serialize_i64(i)
    } else if let Some(u) = v.to_u64() {
        s.serialize_u64(u)
    } else {
        s.serialize_str(&v.to_string())
    }
}

struct Wrap<'a>(&'a BigInt);

impl serde::Serialize for Wrap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize(self.0, s)
    }
}

pub fn serialize_slice<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&Wrap(x))?;
    }
    seq.end()
}

/// Owns a value so it can be passed straight to `serde_json`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Big(pub BigInt);

impl serde::Serialize for Big {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize(&self.0, s)
    }
}
