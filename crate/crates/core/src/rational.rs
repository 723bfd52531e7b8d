//! Exact rationals and their `"p/q"` text form.

use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Formats as `p/q` with `q > 0` and `gcd(p, q) = 1`, always including
/// the denominator.
pub fn format_rational(x: &Rational) -> String {
    // Ratio keeps itself reduced with a positive denominator.
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `p/q` or a bare integer `p`. Floats are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Rational(s.to_string());
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (i64::from_str(p.trim()).map_err(|_| bad())?, i64::from_str(q.trim()).map_err(|_| bad())?),
        None => (i64::from_str(s).map_err(|_| bad())?, 1),
    };
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Least integer `>= x`.
pub fn ceil_int(x: &Rational) -> i64 {
    x.ceil().to_integer()
}

/// `floor(x)`, the integral part used for truncation lengths.
pub fn floor_int(x: &Rational) -> i64 {
    x.floor().to_integer()
}

pub fn is_nonneg_integer(x: &Rational) -> bool {
    x.is_integer() && !x.is_negative()
}

/// Serde adapter storing a rational as a `"p/q"` string.
pub mod as_string {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        format_rational(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Same as [`as_string`] for vectors.
pub mod vec_as_string {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        xs.iter().map(format_rational).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?.iter().map(|s| parse_rational(s).map_err(serde::de::Error::custom)).collect()
    }
}
