// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Rolling-circle curves as two-member chains.
//!
//! A circle of radius `r` rolling on a fixed circle of radius `R` traces
//! `(R ± r)e^{it} ∓ ρ e^{±iλt}` with `λ = (R ± r)/r` and `ρ = r` (cycloids) or
//! the tracing distance `d` (trochoids). Writing `λ = p/q` in lowest terms and
//! substituting `t = ±qs` turns this into a [`TwoChain`].

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::geom::Vec2;
use crate::real::{rational_from_f64, Real};
use crate::two_chain::{TwoChain, TwoChainError, MAX_EXPONENT};

// std, when linked, shadows these with its inherent float methods.
#[allow(unused_imports)]
use num_traits::Float;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub enum RollingKind {
    Epicycloid,
    Hypocycloid,
    Epitrochoid,
    Hypotrochoid,
}

impl RollingKind {
    pub fn is_trochoid(self) -> bool {
        matches!(self, RollingKind::Epitrochoid | RollingKind::Hypotrochoid)
    }

    fn is_outer(self) -> bool {
        matches!(self, RollingKind::Epicycloid | RollingKind::Epitrochoid)
    }
}

impl core::str::FromStr for RollingKind {
    type Err = ClassicalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "epicycloid" => Ok(RollingKind::Epicycloid),
            "hypocycloid" => Ok(RollingKind::Hypocycloid),
            "epitrochoid" => Ok(RollingKind::Epitrochoid),
            "hypotrochoid" => Ok(RollingKind::Hypotrochoid),
            _ => Err(ClassicalError::UnknownKind),
        }
    }
}

impl fmt::Display for RollingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RollingKind::Epicycloid => "epicycloid",
            RollingKind::Hypocycloid => "hypocycloid",
            RollingKind::Epitrochoid => "epitrochoid",
            RollingKind::Hypotrochoid => "hypotrochoid",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ClassicalError {
    UnknownKind,
    NonPositive,
    /// Inner rolling needs `R > r`.
    RadiusOrder,
    MissingDistance,
    /// `R = 2r` inside: the curve degenerates to a diameter segment.
    Degenerate,
    /// The frequency ratio has no rational form within the denominator cap.
    IrrationalRatio,
    NotACycloid,
    TwoChain(TwoChainError),
}

impl fmt::Display for ClassicalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassicalError::UnknownKind => f.write_str(
                "unknown curve kind (expected epicycloid, hypocycloid, epitrochoid or hypotrochoid)",
            ),
            ClassicalError::NonPositive => f.write_str("radii and distance must be positive"),
            ClassicalError::RadiusOrder => f.write_str("inner rolling needs R > r"),
            ClassicalError::MissingDistance => f.write_str("trochoids need a tracing distance d"),
            ClassicalError::Degenerate => f.write_str("R = 2r gives a straight segment"),
            ClassicalError::IrrationalRatio => {
                f.write_str("frequency ratio is not rational within the denominator cap")
            }
            ClassicalError::NotACycloid => f.write_str("cusps are only defined for cycloids"),
            ClassicalError::TwoChain(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for ClassicalError {}

impl From<TwoChainError> for ClassicalError {
    fn from(e: TwoChainError) -> Self {
        match e {
            TwoChainError::OppositeExponents => ClassicalError::Degenerate,
            e => ClassicalError::TwoChain(e),
        }
    }
}

/// Largest denominator accepted when rationalizing floating-point radii.
pub const DENOMINATOR_CAP: i64 = 1_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct RollingSpec {
    pub kind: RollingKind,
    pub big_r: BigRational,
    pub r: BigRational,
    /// Tracing distance; ignored for cycloids.
    pub d: Option<BigRational>,
}

impl RollingSpec {
    pub fn new(
        kind: RollingKind,
        big_r: BigRational,
        r: BigRational,
        d: Option<BigRational>,
    ) -> Result<Self, ClassicalError> {
        if !big_r.is_positive() || !r.is_positive() || d.as_ref().is_some_and(|d| !d.is_positive()) {
            return Err(ClassicalError::NonPositive);
        }
        if !kind.is_outer() && big_r <= r {
            return Err(ClassicalError::RadiusOrder);
        }
        if kind.is_trochoid() && d.is_none() {
            return Err(ClassicalError::MissingDistance);
        }
        let d = if kind.is_trochoid() { d } else { None };
        Ok(RollingSpec { kind, big_r, r, d })
    }

    /// Rationalizes floating-point inputs with continued fractions, refusing
    /// values that need a denominator above [`DENOMINATOR_CAP`].
    pub fn from_f64(kind: RollingKind, big_r: f64, r: f64, d: Option<f64>) -> Result<Self, ClassicalError> {
        let conv = |x: f64| rationalize(x, DENOMINATOR_CAP).ok_or(ClassicalError::IrrationalRatio);
        let d = d.map(conv).transpose()?;
        RollingSpec::new(kind, conv(big_r)?, conv(r)?, d)
    }

    fn tracing(&self) -> BigRational {
        self.d.clone().unwrap_or_else(|| self.r.clone())
    }

    /// `λ = (R ± r)/r`.
    pub fn ratio(&self) -> BigRational {
        let sum = if self.kind.is_outer() {
            &self.big_r + &self.r
        } else {
            &self.big_r - &self.r
        };
        sum / &self.r
    }

    /// The curve in its original parameter.
    pub fn point(&self, t: f64) -> Vec2 {
        let (big_r, r, d) = (f(&self.big_r), f(&self.r), f(&self.tracing()));
        let lambda = f(&self.ratio());
        if self.kind.is_outer() {
            let a = big_r + r;
            Vec2::new(
                a * t.cos() - d * (lambda * t).cos(),
                a * t.sin() - d * (lambda * t).sin(),
            )
        } else {
            let a = big_r - r;
            Vec2::new(
                a * t.cos() + d * (lambda * t).cos(),
                a * t.sin() - d * (lambda * t).sin(),
            )
        }
    }
}

fn f(q: &BigRational) -> f64 {
    crate::real::rational_to_f64(q)
}

/// Best rational approximation of `x` with denominator at most `cap`, as
/// long as it reproduces `x` to within a few ulps.
pub fn rationalize(x: f64, cap: i64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let exact = rational_from_f64(x);
    let (mut p0, mut q0, mut p1, mut q1) = (BigInt::zero(), BigInt::one(), BigInt::one(), BigInt::zero());
    let mut rest = exact.clone();
    let cap = BigInt::from(cap);
    loop {
        let a = rest.floor().to_integer();
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        if q2 > cap {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = &rest - BigRational::from_integer(a);
        if frac.is_zero() {
            break;
        }
        rest = frac.recip();
    }
    if q1.is_zero() {
        return None;
    }
    let approx = BigRational::new(p1, q1);
    let err = (f(&approx) - x).abs();
    (err <= 4.0 * f64::EPSILON * x.abs().max(f64::MIN_POSITIVE)).then_some(approx)
}

/// A converted curve: `chain(s) = original(t)` with `t = sign·q·s`.
#[derive(Clone, Debug, PartialEq)]
pub struct Conversion {
    pub two_chain: TwoChain,
    pub q: i64,
    /// `+1` for outer rolling, `−1` for inner.
    pub sign: i64,
}

impl Conversion {
    pub fn original_parameter(&self, s: f64) -> f64 {
        (self.sign * self.q) as f64 * s
    }
}

/// Outer rolling gives `(R+r, −ρ, q, p)` with `t = qs`; inner rolling gives
/// `(R−r, ρ, −q, p)` with `t = −qs`.
pub fn to_two_chain(spec: &RollingSpec) -> Result<Conversion, ClassicalError> {
    let lambda = spec.ratio();
    let p = lambda.numer().to_i64().ok_or(ClassicalError::IrrationalRatio)?;
    let q = lambda.denom().to_i64().ok_or(ClassicalError::IrrationalRatio)?;
    if p.abs() > MAX_EXPONENT || q > MAX_EXPONENT {
        return Err(TwoChainError::ExponentTooLarge.into());
    }
    debug_assert_eq!(p.gcd(&q), 1);
    let rho = spec.tracing();
    let (c1, c2, m, sign) = if spec.kind.is_outer() {
        (&spec.big_r + &spec.r, -rho, q, 1)
    } else {
        if lambda.is_one() {
            return Err(ClassicalError::Degenerate);
        }
        (&spec.big_r - &spec.r, rho, -q, -1)
    };
    let two_chain = TwoChain::new(Real::Exact(c1), Real::Exact(c2), m, p)?;
    Ok(Conversion { two_chain, q, sign })
}

/// Number of cusps of an epicycloid or hypocycloid (the singular orbit size).
pub fn cusp_count(spec: &RollingSpec) -> Result<usize, ClassicalError> {
    if spec.kind.is_trochoid() && spec.d.as_ref() != Some(&spec.r) {
        return Err(ClassicalError::NotACycloid);
    }
    let conv = to_two_chain(spec)?;
    let tc = &conv.two_chain;
    // cycloids always satisfy m·c₁ = −ℓ·c₂
    debug_assert_eq!(tc.singular_case(), Some(false));
    if tc.singular_case() != Some(false) {
        return Err(ClassicalError::NotACycloid);
    }
    Ok(tc.q())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn spec(kind: RollingKind, big_r: i64, r: i64, d: Option<i64>) -> RollingSpec {
        RollingSpec::new(kind, q(big_r, 1), q(r, 1), d.map(|d| q(d, 1))).unwrap()
    }

    fn max_gap(s: &RollingSpec) -> f64 {
        let conv = to_two_chain(s).unwrap();
        (0..1000)
            .map(|i| {
                let s_par = i as f64 * core::f64::consts::TAU / 1000.0;
                let a = s.point(conv.original_parameter(s_par));
                a.distance(conv.two_chain.point(s_par))
            })
            .fold(0.0, f64::max)
    }

    #[test]
    fn named_curves() {
        let cardioid = to_two_chain(&spec(RollingKind::Epicycloid, 1, 1, None)).unwrap();
        let expect = TwoChain::new(Real::int(2), Real::int(-1), 1, 2).unwrap();
        assert_eq!(cardioid.two_chain, expect);
        let astroid = to_two_chain(&spec(RollingKind::Hypocycloid, 4, 1, None)).unwrap();
        assert_eq!(astroid.two_chain, TwoChain::new(Real::int(3), Real::int(1), -1, 3).unwrap());
        let troch = to_two_chain(&spec(RollingKind::Epitrochoid, 1, 1, Some(1))).unwrap();
        assert_eq!(troch.two_chain, cardioid.two_chain);
    }

    #[test]
    fn parametric_equivalence() {
        let cases = [
            RollingSpec::new(RollingKind::Epicycloid, q(7, 3), q(1, 1), None).unwrap(),
            spec(RollingKind::Hypocycloid, 5, 2, None),
            RollingSpec::new(RollingKind::Epitrochoid, q(3, 1), q(2, 1), Some(q(1, 2))).unwrap(),
            spec(RollingKind::Hypotrochoid, 5, 3, Some(5)),
        ];
        for s in &cases {
            assert!(max_gap(s) < 1e-10, "{s:?}");
        }
    }

    #[test]
    fn cusps() {
        assert_eq!(cusp_count(&spec(RollingKind::Epicycloid, 1, 1, None)), Ok(1));
        assert_eq!(cusp_count(&spec(RollingKind::Epicycloid, 2, 1, None)), Ok(2));
        assert_eq!(cusp_count(&spec(RollingKind::Hypocycloid, 4, 1, None)), Ok(4));
        assert_eq!(
            cusp_count(&spec(RollingKind::Epitrochoid, 2, 1, Some(2))),
            Err(ClassicalError::NotACycloid)
        );
        let t = to_two_chain(&spec(RollingKind::Hypotrochoid, 5, 2, Some(1))).unwrap();
        assert!(t.two_chain.singular_points().is_none());
    }

    #[test]
    fn rejects() {
        assert_eq!(
            RollingSpec::new(RollingKind::Hypocycloid, q(1, 1), q(1, 1), None),
            Err(ClassicalError::RadiusOrder)
        );
        assert_eq!(
            to_two_chain(&spec(RollingKind::Hypocycloid, 2, 1, None)),
            Err(ClassicalError::Degenerate)
        );
        assert_eq!(
            RollingSpec::new(RollingKind::Epitrochoid, q(1, 1), q(1, 1), None),
            Err(ClassicalError::MissingDistance)
        );
        assert_eq!("Astroid".parse::<RollingKind>(), Err(ClassicalError::UnknownKind));
    }

    #[test]
    fn float_wrapper() {
        let s = RollingSpec::from_f64(RollingKind::Epicycloid, 2.5, 1.0, None).unwrap();
        assert_eq!(s.big_r, q(5, 2));
        assert_eq!(rationalize(1.0 / 3.0, DENOMINATOR_CAP), Some(q(1, 3)));
        assert_eq!(rationalize(core::f64::consts::SQRT_2, DENOMINATOR_CAP), None);
        assert_eq!(
            RollingSpec::from_f64(RollingKind::Epicycloid, core::f64::consts::PI, 1.0, None),
            Err(ClassicalError::IrrationalRatio)
        );
    }
}
