// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Space curves over planar chains: periodic helices and torus knots.
//!
//! Both put a height `z(t)` over a planar chain. Planar features lift to space
//! features when the heights agree (self-intersections) or the height is
//! stationary (singular points).

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};
use core::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::axis_analysis::{general_singular_points, AxisError};
use crate::chain::Chain;
use crate::classical::{rationalize, DENOMINATOR_CAP};
use crate::feature::{CurveFeature, FeatureKind};
use crate::geom::{circular_gap, wrap_2pi, Vec2, Vec3};
use crate::real::Real;
use crate::two_chain::{TwoChain, TwoChainError};

// std, when linked, shadows these with its inherent float methods.
#[allow(unused_imports)]
use num_traits::Float;

#[derive(Clone, Debug, PartialEq)]
pub enum SpaceError {
    InvalidTorus(&'static str),
    NonRationalFrequency,
    NotSPeriodic,
    /// A closed-form crossing failed its numeric check.
    CrossingCheck { k: usize, j: usize, what: &'static str },
    TwoChain(TwoChainError),
    Axis(AxisError),
}

impl fmt::Display for SpaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceError::InvalidTorus(why) => write!(f, "invalid torus knot: {why}"),
            SpaceError::NonRationalFrequency => f.write_str("helix frequency must be rational"),
            SpaceError::NotSPeriodic => f.write_str("helix is not S-periodic (needs theta = 0, Q = (l - m)/2)"),
            SpaceError::CrossingCheck { k, j, what } => {
                write!(f, "crossing ({k}, {j}) failed the {what} check")
            }
            SpaceError::TwoChain(e) => e.fmt(f),
            SpaceError::Axis(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for SpaceError {}

impl From<TwoChainError> for SpaceError {
    fn from(e: TwoChainError) -> Self {
        SpaceError::TwoChain(e)
    }
}

impl From<AxisError> for SpaceError {
    fn from(e: AxisError) -> Self {
        SpaceError::Axis(e)
    }
}

/// A feature of a space curve.
#[derive(Clone, Debug, PartialEq)]
pub struct SpacePoint {
    pub t: f64,
    pub s: Option<f64>,
    pub position: Vec3,
    /// `ProjectionSelfIntersection`, `SpaceSelfIntersection` or `SpaceSingular`.
    pub kind: FeatureKind,
}

impl SpacePoint {
    pub fn to_feature(&self) -> CurveFeature {
        let mut params = alloc::vec![self.t];
        params.extend(self.s);
        CurveFeature::spatial(self.kind, self.position, params)
    }
}

/// The height over a planar curve together with the parameter range that
/// closes both.
trait Height {
    fn z(&self, t: f64) -> f64;
    fn z_dot(&self, t: f64) -> f64;
    /// Number of planar periods in one full period of the space curve.
    fn laps(&self) -> usize;
    fn z_tolerance(&self) -> f64;
    fn z_dot_tolerance(&self) -> f64;
}

/// Lifts planar crossings `(t, s)` and singular parameters to space features.
fn lift<H: Height>(
    h: &H,
    planar: impl Fn(f64) -> Vec2,
    planar_velocity: impl Fn(f64) -> Vec2,
    crossings: &[(f64, f64)],
    singular: &[f64],
) -> Vec<SpacePoint> {
    let laps = h.laps();
    let at = |t: f64| {
        let p = planar(t);
        Vec3::new(p.x, p.y, h.z(t))
    };
    let tangent = |t: f64| {
        let v = planar_velocity(t);
        Vec3::new(v.x, v.y, h.z_dot(t))
    };
    let mut out = Vec::new();
    for &(t, s) in crossings {
        let mut lifted = None;
        'search: for i in 0..laps {
            for j in 0..laps {
                let (ti, sj) = (t + TAU * i as f64, s + TAU * j as f64);
                if (h.z(ti) - h.z(sj)).abs() > h.z_tolerance() {
                    continue;
                }
                let (a, b) = (tangent(ti), tangent(sj));
                if a.cross(b).norm() > 1e-9 * a.norm() * b.norm() {
                    lifted = Some((ti, sj));
                    break 'search;
                }
            }
        }
        out.push(match lifted {
            Some((ti, sj)) => SpacePoint {
                t: ti,
                s: Some(sj),
                position: at(ti),
                kind: FeatureKind::SpaceSelfIntersection,
            },
            None => SpacePoint {
                t,
                s: Some(s),
                position: at(t),
                kind: FeatureKind::ProjectionSelfIntersection,
            },
        });
    }
    for &t in singular {
        for i in 0..laps {
            let ti = t + TAU * i as f64;
            if h.z_dot(ti).abs() <= h.z_dot_tolerance() {
                out.push(SpacePoint {
                    t: ti,
                    s: None,
                    position: at(ti),
                    kind: FeatureKind::SpaceSingular,
                });
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub enum HelixClass {
    /// Lies on the sphere `x² + y² + z² = (c₁ + c₂)²`.
    Capareda,
    /// Lies on the cone-like quadric `x² + y² − z² = (c₁ + c₂)²`.
    ConstantPrecession,
    SPeriodic,
    General,
}

/// `(x, y) = f(t)` for a two-member chain and `z = a sin(θ + Qt)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PeriodicHelix {
    pub planar: TwoChain,
    pub a: f64,
    pub theta: f64,
    q: BigRational,
    q_f64: f64,
}

impl PeriodicHelix {
    /// `q` must be rational; decimal inputs are rationalized with a bounded denominator.
    pub fn new(planar: TwoChain, a: f64, theta: f64, q: Real) -> Result<Self, SpaceError> {
        let q = match q {
            Real::Exact(q) => q,
            Real::Approx(x) => rationalize(x, DENOMINATOR_CAP).ok_or(SpaceError::NonRationalFrequency)?,
        };
        if !a.is_finite() || !theta.is_finite() {
            return Err(SpaceError::NonRationalFrequency);
        }
        let q_f64 = crate::real::rational_to_f64(&q);
        Ok(PeriodicHelix { planar, a, theta, q, q_f64 })
    }

    pub fn frequency(&self) -> &BigRational {
        &self.q
    }

    pub fn point(&self, t: f64) -> Vec3 {
        let p = self.planar.point(t);
        Vec3::new(p.x, p.y, self.z(t))
    }

    pub fn velocity(&self, t: f64) -> Vec3 {
        let v = self.planar.derivative(t);
        Vec3::new(v.x, v.y, self.z_dot(t))
    }

    /// Length of one full period: `2π` times the denominator of `Q`.
    pub fn period(&self) -> f64 {
        TAU * self.laps() as f64
    }

    fn c1c2(&self) -> (f64, f64) {
        (self.planar.c1().to_f64(), self.planar.c2().to_f64())
    }

    fn is_s_periodic(&self) -> bool {
        let half_q = BigRational::new(self.planar.q().into(), 2.into());
        self.theta == 0.0 && self.q == half_q
    }

    pub fn classify(&self) -> HelixClass {
        if !self.is_s_periodic() {
            return HelixClass::General;
        }
        let (c1, c2) = self.c1c2();
        let p = c1 * c2;
        let a2 = self.a * self.a;
        let tol = 1e-9 * (a2 + p.abs()).max(1.0);
        let candidate = if p > 0.0 && (a2 - 4.0 * p).abs() <= tol {
            HelixClass::Capareda
        } else if p < 0.0 && (a2 + 4.0 * p).abs() <= tol {
            HelixClass::ConstantPrecession
        } else {
            return HelixClass::SPeriodic;
        };
        match self.quadric_residual(candidate, 100) {
            Some(r) if r <= 1e-9 * (c1 + c2).powi(2).max(1.0) => candidate,
            _ => {
                log::warn!("helix quadric identity failed to verify; downgrading");
                HelixClass::SPeriodic
            }
        }
    }

    /// Largest deviation from the class's quadric identity over `n` samples.
    pub fn quadric_residual(&self, class: HelixClass, n: usize) -> Option<f64> {
        let sign = match class {
            HelixClass::Capareda => 1.0,
            HelixClass::ConstantPrecession => -1.0,
            _ => return None,
        };
        let (c1, c2) = self.c1c2();
        let target = (c1 + c2) * (c1 + c2);
        let period = self.period();
        let worst = (0..n)
            .map(|i| {
                let p = self.point(period * i as f64 / n as f64);
                (p.x * p.x + p.y * p.y + sign * p.z * p.z - target).abs()
            })
            .fold(0.0, f64::max);
        Some(worst)
    }

    /// Bounds of `x² + y² + z²` (when `c₁c₂ > 0`) or `x² + y² − z²` (when
    /// `c₁c₂ < 0`) for an S-periodic helix. Both are attained.
    pub fn s_envelope(&self) -> Result<HelixEnvelope, SpaceError> {
        if !self.is_s_periodic() {
            return Err(SpaceError::NotSPeriodic);
        }
        let (c1, c2) = self.c1c2();
        let a2 = self.a * self.a;
        let base = (c1 + c2) * (c1 + c2);
        let (form, swing) = if c1 * c2 > 0.0 {
            (QuadricForm::Sphere, a2 - 4.0 * c1 * c2)
        } else {
            (QuadricForm::Hyperboloid, -(a2 + 4.0 * c1 * c2))
        };
        // the form equals base + swing·sin²((ℓ−m)t/2)
        Ok(HelixEnvelope {
            form,
            lower: base.min(base + swing),
            upper: base.max(base + swing),
        })
    }

    /// Planar features lifted to the helix.
    pub fn lift_planar_features(&self) -> Result<Vec<SpacePoint>, SpaceError> {
        let crossings: Vec<(f64, f64)> = self
            .planar
            .self_intersection_classes()?
            .iter()
            .flat_map(|c| c.orbit.iter().filter_map(|m| Some((m.t, m.s?))))
            .collect();
        let singular = self.planar.singular_parameters();
        Ok(lift(
            self,
            |t| self.planar.point(t),
            |t| self.planar.derivative(t),
            &crossings,
            &singular,
        ))
    }
}

impl Height for PeriodicHelix {
    fn z(&self, t: f64) -> f64 {
        self.a * (self.theta + self.q_f64 * t).sin()
    }
    fn z_dot(&self, t: f64) -> f64 {
        self.a * self.q_f64 * (self.theta + self.q_f64 * t).cos()
    }
    fn laps(&self) -> usize {
        self.q.denom().to_usize().unwrap_or(1).max(1)
    }
    fn z_tolerance(&self) -> f64 {
        1e-9 * (self.a.abs() + 1.0)
    }
    fn z_dot_tolerance(&self) -> f64 {
        1e-9 * (self.a.abs() * self.q_f64.abs() + self.planar.velocity_scale())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub enum QuadricForm {
    /// `x² + y² + z²`.
    Sphere,
    /// `x² + y² − z²`.
    Hyperboloid,
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct HelixEnvelope {
    pub form: QuadricForm,
    pub lower: f64,
    pub upper: f64,
}

impl HelixEnvelope {
    pub fn evaluate(&self, p: Vec3) -> f64 {
        match self.form {
            QuadricForm::Sphere => p.x * p.x + p.y * p.y + p.z * p.z,
            QuadricForm::Hyperboloid => p.x * p.x + p.y * p.y - p.z * p.z,
        }
    }
}

/// `((R + r cos qt) cos pt, (R + r cos qt) sin pt, a sin qt)`, with `a = r`
/// on the torus itself.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TorusKnot {
    p: u32,
    q: u32,
    big_r: f64,
    r: f64,
    a: Option<f64>,
}

impl TorusKnot {
    pub fn new(p: u32, q: u32, big_r: f64, r: f64, a: Option<f64>) -> Result<Self, SpaceError> {
        if p == 0 || q == 0 {
            return Err(SpaceError::InvalidTorus("p and q must be positive"));
        }
        if p.gcd(&q) != 1 {
            return Err(SpaceError::InvalidTorus("p and q must be coprime"));
        }
        if p.max(q) as i64 > crate::two_chain::MAX_EXPONENT / 2 {
            return Err(SpaceError::InvalidTorus("p and q are too large"));
        }
        if !(big_r.is_finite() && r.is_finite() && big_r > r && r > 0.0) {
            return Err(SpaceError::InvalidTorus("need R > r > 0"));
        }
        if a.is_some_and(|a| !(a.is_finite() && a > 0.0)) {
            return Err(SpaceError::InvalidTorus("a must be positive"));
        }
        Ok(TorusKnot { p, q, big_r, r, a })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Vertical amplitude; `r` unless an S-torus amplitude was given.
    pub fn amplitude(&self) -> f64 {
        self.a.unwrap_or(self.r)
    }

    pub fn scale(&self) -> f64 {
        self.big_r + self.r + self.amplitude()
    }

    pub fn point(&self, t: f64) -> Vec3 {
        let (p, q) = (self.p as f64, self.q as f64);
        let rho = self.big_r + self.r * (q * t).cos();
        Vec3::new(rho * (p * t).cos(), rho * (p * t).sin(), self.amplitude() * (q * t).sin())
    }

    pub fn velocity(&self, t: f64) -> Vec3 {
        let v = self.planar_velocity(t);
        Vec3::new(v.x, v.y, self.z_dot(t))
    }

    pub fn planar_point(&self, t: f64) -> Vec2 {
        self.point(t).xy()
    }

    pub fn planar_velocity(&self, t: f64) -> Vec2 {
        let (p, q) = (self.p as f64, self.q as f64);
        let rho = self.big_r + self.r * (q * t).cos();
        let rho_dot = -self.r * q * (q * t).sin();
        let (s, c) = (p * t).sin_cos();
        Vec2::new(rho_dot * c - rho * p * s, rho_dot * s + rho * p * c)
    }

    /// The planar projection as the chain `R e^{ipt} + (r/2)e^{i(p+q)t} + (r/2)e^{i(p−q)t}`.
    pub fn fourier_chain(&self) -> Chain {
        let (p, q) = (self.p as i64, self.q as i64);
        let half = Real::Approx(self.r / 2.0);
        let terms = [(p, Real::Approx(self.big_r)), (p + q, half.clone()), (p - q, half)];
        Chain::complex(terms).expect("coprime torus exponents")
    }

    /// The point from the Fourier form of the projection and `z = a sin(qt)`.
    pub fn fourier_point(&self, t: f64) -> Vec3 {
        let p = self.fourier_chain().eval(t);
        Vec3::new(p.x, p.y, self.z(t))
    }

    /// `[R − √(x² + y²)]² + z² − r²` at `t`.
    pub fn torus_residual(&self, t: f64) -> f64 {
        let p = self.point(t);
        let d = self.big_r - p.xy().hypot();
        d * d + p.z * p.z - self.r * self.r
    }

    /// Bounds of [`TorusKnot::torus_residual`]: `[min(0, a² − r²), max(0, a² − r²)]`.
    pub fn s_envelope(&self) -> (f64, f64) {
        let a = self.amplitude();
        let swing = a * a - self.r * self.r;
        (swing.min(0.0), swing.max(0.0))
    }

    /// `ẏ(t)ẋ(τ) − ẏ(τ)ẋ(t)`: nonzero when the projected branches cross transversally.
    pub fn slope_margin(&self, t: f64, tau: f64) -> f64 {
        self.planar_velocity(t).cross(self.planar_velocity(tau)).abs()
    }

    /// The `q(p − 1)` crossings of the projection at
    /// `t = kπ/p + jπ/q`, `τ = −kπ/p + jπ/q`, each verified numerically.
    pub fn projection_self_intersections(&self) -> Result<Vec<SpacePoint>, SpaceError> {
        let (p, q) = (self.p as usize, self.q as usize);
        let scale = self.scale();
        let mut out: Vec<SpacePoint> = Vec::with_capacity(q * p.saturating_sub(1));
        for k in 1..p {
            for j in 0..q {
                let base = j as f64 * PI / q as f64;
                let shift = k as f64 * PI / p as f64;
                let (t, tau) = (wrap_2pi(base + shift), wrap_2pi(base - shift));
                let fail = |what| SpaceError::CrossingCheck { k, j, what };
                if self.planar_point(t).distance(self.planar_point(tau)) > 1e-9 * scale {
                    return Err(fail("coincidence"));
                }
                if self.slope_margin(t, tau) <= 1e-9 * scale * scale {
                    return Err(fail("slope"));
                }
                let (qt, qtau) = (self.q as f64 * t, self.q as f64 * tau);
                if (qt.sin() - qtau.sin()).abs() <= 1e-9 {
                    return Err(fail("height"));
                }
                let point = self.point(t);
                if out.iter().any(|o| o.position.xy().distance(point.xy()) <= 1e-9 * scale) {
                    return Err(fail("distinctness"));
                }
                out.push(SpacePoint {
                    t,
                    s: Some(tau),
                    position: point,
                    kind: FeatureKind::ProjectionSelfIntersection,
                });
            }
        }
        for (i, a) in out.iter().enumerate() {
            for b in &out[..i] {
                let same = circular_gap(a.t, b.t, TAU) <= 1e-9 && circular_gap(a.s.unwrap(), b.s.unwrap(), TAU) <= 1e-9;
                debug_assert!(!same, "duplicate crossing parameters");
            }
        }
        Ok(out)
    }

    /// Projection crossings and planar singular points lifted to the knot.
    pub fn lift_planar_features(&self) -> Result<Vec<SpacePoint>, SpaceError> {
        let crossings: Vec<(f64, f64)> = self
            .projection_self_intersections()?
            .iter()
            .map(|c| (c.t, c.s.unwrap_or(c.t)))
            .collect();
        let singular: Vec<f64> = general_singular_points(&self.fourier_chain())?
            .into_iter()
            .map(|s| s.t)
            .collect();
        Ok(lift(
            self,
            |t| self.planar_point(t),
            |t| self.planar_velocity(t),
            &crossings,
            &singular,
        ))
    }

    /// Smallest `|R'(t)|` over an `n`-point grid.
    pub fn min_speed(&self, n: usize) -> f64 {
        (0..n)
            .map(|i| self.velocity(TAU * i as f64 / n as f64).norm())
            .fold(f64::INFINITY, f64::min)
    }
}

impl Height for TorusKnot {
    fn z(&self, t: f64) -> f64 {
        self.amplitude() * (self.q as f64 * t).sin()
    }
    fn z_dot(&self, t: f64) -> f64 {
        self.amplitude() * self.q as f64 * (self.q as f64 * t).cos()
    }
    fn laps(&self) -> usize {
        1
    }
    fn z_tolerance(&self) -> f64 {
        1e-9 * (self.amplitude() + 1.0)
    }
    fn z_dot_tolerance(&self) -> f64 {
        1e-9 * self.scale() * (self.p + self.q) as f64
    }
}
