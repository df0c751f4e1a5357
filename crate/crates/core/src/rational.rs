//! Exact rational numbers and their string form.
//!
//! Rationals are always written as `"p/q"` in lowest terms, or `"k"` when
//! the denominator is one. They are never rendered as decimals except through
//! [`approx`], whose callers must label the output as approximate.

use num_rational::Ratio;
use num_traits::ToPrimitive;

pub type Rational = Ratio<i64>;

pub fn int(k: i64) -> Rational {
    Rational::from_integer(k)
}

pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}

pub fn to_exact_string(r: &Rational) -> String {
    r.to_string()
}

pub fn parse(s: &str) -> Option<Rational> {
    let r: Rational = s.trim().parse().ok()?;
    Some(r)
}

pub fn approx(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `#[serde(with = "crate::rational::as_string")]` for a single rational.
pub mod as_string {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::to_exact_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = String::deserialize(d)?;
        super::parse(&raw).ok_or_else(|| D::Error::custom(format!("not a rational: {raw:?}")))
    }
}
