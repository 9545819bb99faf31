//! Exact fractions and their string form (`"3/2"`, `"2"`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{input, Error, Result};

pub type Rational = BigRational;

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `"p/q"` or an integer.
pub fn parse_fraction(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Input(format!("bad fraction `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `c` as a pair of machine integers `p/q`, for tight inner loops.
pub(crate) fn small_parts(c: &Rational) -> Result<(u64, u64)> {
    match (c.numer().to_u64(), c.denom().to_u64()) {
        (Some(p), Some(q)) if q <= u32::MAX as u64 && p <= u32::MAX as u64 => Ok((p, q)),
        _ => input(format!("fraction {c} is too large")),
    }
}

/// Checks `1/2 <= c < 1`.
pub(crate) fn check_balance(c: &Rational) -> Result<()> {
    if c.is_negative() || *c < ratio(1, 2) || *c >= Rational::one() {
        return input(format!("c = {c} must satisfy 1/2 <= c < 1"));
    }
    Ok(())
}

/// Serde adapter writing a [`Rational`] as its string form.
pub mod as_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        super::parse_fraction(&text).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for a list of [`Rational`]s as strings.
pub mod vec_as_string {
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&r.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let text = Vec::<String>::deserialize(d)?;
        text.iter()
            .map(|t| super::parse_fraction(t).map_err(serde::de::Error::custom))
            .collect()
    }
}
