// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Real coefficients that remember whether they are exact.
//!
//! The case splits of the analysis (`c₁ = ±c₂`, `(m c₁)² = (ℓ c₂)²`,
//! `|c| = 2/3`, ...) are exact equalities. A coefficient given as a rational
//! is compared exactly; a coefficient given as a double is compared with the
//! tolerance [`EQ_TOL`].

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Relative tolerance for equality tests involving inexact coefficients.
pub const EQ_TOL: f64 = 1e-9;

/// A real number, either an exact rational or a double.
#[derive(Clone, Debug, PartialEq)]
pub enum Real {
    Exact(BigRational),
    Approx(f64),
}

/// Failure to parse a [`Real`] from text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseRealError(pub String);

impl fmt::Display for ParseRealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid real number `{}`", self.0)
    }
}

impl core::error::Error for ParseRealError {}

/// Exact rational value of a finite double.
///
/// Every finite `f64` is a dyadic rational, so this conversion loses nothing.
pub fn rational_from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).unwrap_or_else(BigRational::zero)
}

/// Nearest double to an exact rational.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(0.0)
}

impl Real {
    pub fn int(i: i64) -> Self {
        Real::Exact(BigRational::from_integer(BigInt::from(i)))
    }

    /// Exact `n / d`. Panics if `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Real::Exact(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Real::Exact(_))
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Real::Exact(_) => true,
            Real::Approx(x) => x.is_finite(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Real::Exact(q) => rational_to_f64(q),
            Real::Approx(x) => *x,
        }
    }

    /// The exact rational value (a double is taken at its exact binary value).
    pub fn to_rational(&self) -> BigRational {
        match self {
            Real::Exact(q) => q.clone(),
            Real::Approx(x) => rational_from_f64(*x),
        }
    }

    pub fn abs(&self) -> Real {
        match self {
            Real::Exact(q) => Real::Exact(q.abs()),
            Real::Approx(x) => Real::Approx(x.abs()),
        }
    }

    /// `self · k` for an integer `k`, keeping exactness.
    pub fn scaled(&self, k: i64) -> Real {
        match self {
            Real::Exact(q) => Real::Exact(q * BigRational::from_integer(BigInt::from(k))),
            Real::Approx(x) => Real::Approx(x * k as f64),
        }
    }

    pub fn neg(&self) -> Real {
        match self {
            Real::Exact(q) => Real::Exact(-q.clone()),
            Real::Approx(x) => Real::Approx(-x),
        }
    }

    pub fn mul(&self, other: &Real) -> Real {
        match (self, other) {
            (Real::Exact(a), Real::Exact(b)) => Real::Exact(a * b),
            _ => Real::Approx(self.to_f64() * other.to_f64()),
        }
    }

    pub fn add(&self, other: &Real) -> Real {
        match (self, other) {
            (Real::Exact(a), Real::Exact(b)) => Real::Exact(a + b),
            _ => Real::Approx(self.to_f64() + other.to_f64()),
        }
    }

    /// Exact test when both sides are exact, otherwise `|a − b| ≤ EQ_TOL·max(1, |a|, |b|)`.
    pub fn approx_eq(&self, other: &Real) -> bool {
        match (self, other) {
            (Real::Exact(a), Real::Exact(b)) => a == b,
            _ => {
                let a = self.to_f64();
                let b = other.to_f64();
                (a - b).abs() <= EQ_TOL * a.abs().max(b.abs()).max(1.0)
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Real::Exact(q) => q.is_zero(),
            Real::Approx(x) => x.abs() <= EQ_TOL,
        }
    }

    /// Sign with the same exactness rules as [`Real::approx_eq`].
    pub fn signum(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        match self {
            Real::Exact(q) => q.cmp(&BigRational::zero()),
            Real::Approx(x) => x.partial_cmp(&0.0).unwrap_or(Ordering::Equal),
        }
    }
}

impl From<f64> for Real {
    fn from(x: f64) -> Self {
        Real::Approx(x)
    }
}

impl From<i64> for Real {
    fn from(i: i64) -> Self {
        Real::int(i)
    }
}

impl From<BigRational> for Real {
    fn from(q: BigRational) -> Self {
        Real::Exact(q)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Exact(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Real::Exact(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Real::Approx(x) => write!(f, "{}", x),
        }
    }
}

/// Parses `"p/q"`, integers and decimals (all exact) into a rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = parse_rational(n)?;
        let d = parse_rational(d)?;
        if d.is_zero() {
            return None;
        }
        return Some(n / d);
    }
    if let Ok(i) = BigInt::from_str(s) {
        return Some(BigRational::from_integer(i));
    }
    parse_decimal(s)
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mut digits = String::from(int_part);
    digits.push_str(frac_part);
    let mut value = BigRational::from_integer(BigInt::from_str(&digits).ok()?);
    let scale = exponent - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    let pow = num_traits::pow(ten, scale.unsigned_abs() as usize);
    if scale >= 0 {
        value *= pow;
    } else {
        value /= pow;
    }
    Some(if neg { -value } else { value })
}

impl FromStr for Real {
    type Err = ParseRealError;

    /// Text is always exact: `"7/3"`, `"-2"` and `"0.25"` all become rationals.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rational(s)
            .map(Real::Exact)
            .ok_or_else(|| ParseRealError(String::from(s)))
    }
}

#[cfg(feature = "serde")]
mod serde_impl {
    use super::*;
    use serde::de::{self, Visitor};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    impl Serialize for Real {
        fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
            match self {
                Real::Exact(q) if q.denom().is_one() => match q.numer().to_i64() {
                    Some(i) => serializer.serialize_i64(i),
                    None => serializer.collect_str(self),
                },
                Real::Exact(_) => serializer.collect_str(self),
                Real::Approx(x) => serializer.serialize_f64(*x),
            }
        }
    }

    struct RealVisitor;

    impl<'de> Visitor<'de> for RealVisitor {
        type Value = Real;

        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("a number or a rational string such as \"7/3\"")
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<Real, E> {
            Ok(Real::int(v))
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<Real, E> {
            Ok(Real::Exact(BigRational::from_integer(BigInt::from(v))))
        }

        fn visit_f64<E: de::Error>(self, v: f64) -> Result<Real, E> {
            if v.is_finite() {
                Ok(Real::Approx(v))
            } else {
                Err(E::custom("coefficient must be finite"))
            }
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<Real, E> {
            v.parse().map_err(E::custom)
        }
    }

    impl<'de> Deserialize<'de> for Real {
        fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Real, D::Error> {
            deserializer.deserialize_any(RealVisitor)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_and_decimals() {
        assert_eq!("7/3".parse::<Real>().unwrap(), Real::ratio(7, 3));
        assert_eq!("-2".parse::<Real>().unwrap(), Real::int(-2));
        assert_eq!("0.25".parse::<Real>().unwrap(), Real::ratio(1, 4));
        assert_eq!("-1.5e1".parse::<Real>().unwrap(), Real::int(-15));
        assert!("1/0".parse::<Real>().is_err());
        assert!("abc".parse::<Real>().is_err());
    }

    #[test]
    fn exact_equality_is_exact() {
        let a = Real::ratio(2, 3);
        let b = Real::Approx(2.0 / 3.0);
        assert!(a.approx_eq(&b));
        assert!(!a.approx_eq(&Real::ratio(2_000_000_001, 3_000_000_000)));
        assert!(Real::Approx(1e-12).is_zero());
        assert!(!Real::ratio(1, 1_000_000_000_000).is_zero());
    }

    #[test]
    fn dyadic_conversion_round_trips() {
        for x in [0.1, -2.0 / 3.0, 1e300, 5e-324, 123456.789] {
            assert_eq!(rational_to_f64(&rational_from_f64(x)), x);
        }
    }
}
