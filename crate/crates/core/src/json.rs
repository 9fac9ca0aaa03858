//! Serde helpers that write big integers as plain JSON numbers.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

fn to_number(x: &BigInt) -> Number {
    Number::from_str(&x.to_string()).expect("decimal integer is a valid JSON number")
}

fn from_number<E: serde::de::Error>(n: Number) -> Result<BigInt, E> {
    BigInt::from_str(&n.to_string()).map_err(|_| E::custom(format!("not an integer: {n}")))
}

pub mod bigint {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        to_number(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        from_number(Number::deserialize(d)?)
    }
}

pub mod bigint_vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        xs.iter().map(to_number).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Number>::deserialize(d)?
            .into_iter()
            .map(from_number)
            .collect()
    }
}

/// `[i, j, value]` triples.
pub mod triples {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[(i64, i64, BigInt)], s: S) -> Result<S::Ok, S::Error> {
        xs.iter()
            .map(|(i, j, v)| (*i, *j, to_number(v)))
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Vec<(i64, i64, BigInt)>, D::Error> {
        let raw = Vec::<(i64, i64, Number)>::deserialize(d)?;
        raw.into_iter()
            .map(|(i, j, v)| {
                let v = from_number::<D::Error>(v)?;
                if v <= BigInt::from(0) {
                    return Err(D::Error::custom("Betti entries must be positive"));
                }
                Ok((i, j, v))
            })
            .collect()
    }
}
