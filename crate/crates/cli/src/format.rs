//! JSON encodings of exact values: integers, rationals and matrices.

use std::fmt;

use hvs_core::algebra::Matrix;
use hvs_core::RatMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

/// Parses "p/q" or "p"; with `decimals`, also a finite decimal such as "0.4".
pub fn parse_rational(s: &str, decimals: bool) -> Result<BigRational, String> {
    let t = s.trim();
    let bad = || format!("invalid rational {:?}", s);
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(format!("zero denominator in {:?}", s));
        }
        return Ok(BigRational::new(p, q));
    }
    if let Ok(p) = t.parse::<BigInt>() {
        return Ok(BigRational::from_integer(p));
    }
    if decimals {
        if let Some((whole, frac)) = t.split_once('.') {
            if !frac.is_empty() && frac.bytes().all(|b| b.is_ascii_digit()) {
                let negative = whole.starts_with('-');
                let w: BigInt = match whole {
                    "" | "-" | "+" => BigInt::zero(),
                    w => w.parse().map_err(|_| bad())?,
                };
                let f: BigInt = frac.parse().map_err(|_| bad())?;
                let den = num_traits::pow(BigInt::from(10), frac.len());
                let f = BigRational::new(f, den);
                let w = BigRational::from_integer(w);
                return Ok(if negative { w - f } else { w + f });
            }
        }
    }
    Err(bad())
}

/// Integer rendered as a JSON number when it fits in i64, otherwise as a string.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let q = d.deserialize_any(ExactVisitor)?;
        if !q.is_integer() {
            return Err(de::Error::custom(format!("expected an integer, found {}", q)));
        }
        Ok(Int(q.to_integer()))
    }
}

/// Exact rational: a JSON integer or a "p/q" string. Floats are rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exact(pub BigRational);

struct ExactVisitor;

impl<'de> Visitor<'de> for ExactVisitor {
    type Value = BigRational;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a \"p/q\" string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigRational, E> {
        Ok(BigRational::from_integer(v.into()))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigRational, E> {
        Ok(BigRational::from_integer(v.into()))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<BigRational, E> {
        Err(E::custom(format!(
            "floating-point entry {} is not exact; write an integer or a \"p/q\" string",
            v
        )))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<BigRational, E> {
        parse_rational(v, false).map_err(E::custom)
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            Int(self.0.to_integer()).serialize(s)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(ExactVisitor).map(Exact)
    }
}

/// Square exact matrix as an array of rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix(pub RatMatrix);

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Exact>> =
            self.0.to_rows().into_iter().map(|r| r.into_iter().map(Exact).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct Rows;

        impl<'de> Visitor<'de> for Rows {
            type Value = ExactMatrix;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a square matrix given as an array of rows")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<ExactMatrix, A::Error> {
                let mut rows: Vec<Vec<Exact>> = Vec::new();
                while let Some(row) = seq.next_element::<Vec<Exact>>()? {
                    rows.push(row);
                }
                let n = rows.len();
                if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
                    return Err(de::Error::custom(format!(
                        "matrix is not square: row {} has {} entries, expected {}",
                        i + 1,
                        r.len(),
                        n
                    )));
                }
                let data = rows.into_iter().flatten().map(|e| e.0).collect();
                Ok(ExactMatrix(Matrix::from_vec(n, n, data)))
            }
        }

        d.deserialize_seq(Rows)
    }
}
