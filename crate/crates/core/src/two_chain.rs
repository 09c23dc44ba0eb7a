// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Two-member chains `f(t) = c₁e^{imt} + c₂e^{iℓt}`.
//!
//! With `Q = ℓ − m` the curve satisfies `f(t + 2π/Q) = e^{2iπm/Q} f(t)`, so
//! every feature comes in a *module class*: the orbit of one point under the
//! cyclic rotation group of order `Q` generated by `e^{2iπm/Q}`. This module
//! enumerates the zeros, singular points, fold points and self-intersection
//! classes of such a curve.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};
use core::fmt;

use num_complex::Complex64;
use num_integer::Integer;

use crate::axis_analysis::{x_axis_points, y_axis_points, AxisClass, AxisError};
use crate::chain::{Chain, Term};
use crate::feature::{CurveFeature, FeatureKind, Provenance, Tag};
use crate::geom::{circular_gap, wrap_2pi, Vec2};
use crate::oracle::{self, OracleConfig};
use crate::real::Real;

// std, when linked, shadows these with its inherent float methods.
#[allow(unused_imports)]
use num_traits::Float;

/// Largest exponent magnitude accepted (the reduction limit).
pub const MAX_EXPONENT: i64 = 129;

#[derive(Clone, Debug, PartialEq)]
pub enum TwoChainError {
    NotCoprime { m: i64, l: i64 },
    /// `ℓ > m` is required.
    NotOrdered { m: i64, l: i64 },
    /// `ℓ = −m` collapses the curve onto a segment.
    OppositeExponents,
    ZeroCoefficient,
    ExponentTooLarge,
    NonFinite,
    /// Fold points need `(m c₁)² = (ℓ c₂)²`.
    ConditionNotMet,
    Axis(AxisError),
}

impl fmt::Display for TwoChainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoChainError::NotCoprime { m, l } => write!(f, "exponents {m} and {l} are not coprime"),
            TwoChainError::NotOrdered { m, l } => write!(f, "expected l > m, got m = {m}, l = {l}"),
            TwoChainError::OppositeExponents => f.write_str("l = -m gives a degenerate curve"),
            TwoChainError::ZeroCoefficient => f.write_str("both coefficients must be nonzero"),
            TwoChainError::ExponentTooLarge => {
                write!(f, "exponents must not exceed {MAX_EXPONENT} in magnitude")
            }
            TwoChainError::NonFinite => f.write_str("coefficients must be finite"),
            TwoChainError::ConditionNotMet => f.write_str("fold analysis needs (m c1)^2 = (l c2)^2"),
            TwoChainError::Axis(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for TwoChainError {}

impl From<AxisError> for TwoChainError {
    fn from(e: AxisError) -> Self {
        TwoChainError::Axis(e)
    }
}

/// `f(t) = c₁e^{imt} + c₂e^{iℓt}` with coprime `m < ℓ`, `ℓ ≠ −m`.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TwoChain {
    c1: Real,
    c2: Real,
    m: i64,
    l: i64,
}

impl TwoChain {
    pub fn new(c1: Real, c2: Real, m: i64, l: i64) -> Result<Self, TwoChainError> {
        if !c1.is_finite() || !c2.is_finite() {
            return Err(TwoChainError::NonFinite);
        }
        if c1.is_zero() || c2.is_zero() {
            return Err(TwoChainError::ZeroCoefficient);
        }
        if m.abs() > MAX_EXPONENT || l.abs() > MAX_EXPONENT {
            return Err(TwoChainError::ExponentTooLarge);
        }
        if l <= m {
            return Err(TwoChainError::NotOrdered { m, l });
        }
        if l == -m {
            return Err(TwoChainError::OppositeExponents);
        }
        if m.unsigned_abs().gcd(&l.unsigned_abs()) != 1 {
            return Err(TwoChainError::NotCoprime { m, l });
        }
        Ok(TwoChain { c1, c2, m, l })
    }

    /// Reads a two-term chain with `cₖ = dₖ`, ordering the terms so `ℓ > m`.
    pub fn from_chain(chain: &Chain) -> Option<Self> {
        chain.as_subclass_1_1()?;
        let terms: Vec<&Term> = chain.active_terms().collect();
        let [a, b] = terms.as_slice() else {
            return None;
        };
        let (lo, hi) = if a.m < b.m { (a, b) } else { (b, a) };
        TwoChain::new(lo.c.clone(), hi.c.clone(), lo.m, hi.m).ok()
    }

    pub fn c1(&self) -> &Real {
        &self.c1
    }

    pub fn c2(&self) -> &Real {
        &self.c2
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    /// `Q = ℓ − m`, the order of the rotation group.
    pub fn q(&self) -> usize {
        (self.l - self.m) as usize
    }

    /// `|ℓ + m|`, the number of fold candidates of each kind.
    pub fn fold_order(&self) -> usize {
        (self.l + self.m).unsigned_abs() as usize
    }

    pub fn to_chain(&self) -> Chain {
        Chain::complex([(self.m, self.c1.clone()), (self.l, self.c2.clone())])
            .expect("validated two-chain")
    }

    fn coeffs(&self) -> (f64, f64, f64, f64) {
        (self.c1.to_f64(), self.c2.to_f64(), self.m as f64, self.l as f64)
    }

    pub fn point(&self, t: f64) -> Vec2 {
        let (c1, c2, m, l) = self.coeffs();
        Vec2::from_angle(m * t) * c1 + Vec2::from_angle(l * t) * c2
    }

    pub fn derivative(&self, t: f64) -> Vec2 {
        let (c1, c2, m, l) = self.coeffs();
        (Vec2::from_angle(m * t) * (m * c1) + Vec2::from_angle(l * t) * (l * c2)).turn90()
    }

    pub fn second_derivative(&self, t: f64) -> Vec2 {
        let (c1, c2, m, l) = self.coeffs();
        -(Vec2::from_angle(m * t) * (m * m * c1) + Vec2::from_angle(l * t) * (l * l * c2))
    }

    /// `|c₁| + |c₂|`.
    pub fn scale(&self) -> f64 {
        self.c1.to_f64().abs() + self.c2.to_f64().abs()
    }

    /// `|m c₁| + |ℓ c₂|`.
    pub fn velocity_scale(&self) -> f64 {
        (self.m as f64 * self.c1.to_f64()).abs() + (self.l as f64 * self.c2.to_f64()).abs()
    }

    /// `m² |c₁| + ℓ² |c₂|`.
    pub fn acceleration_scale(&self) -> f64 {
        let (c1, c2, m, l) = self.coeffs();
        m * m * c1.abs() + l * l * c2.abs()
    }

    /// `|f(t)|² = c₁² + c₂² + 2c₁c₂ cos(Qt)`.
    pub fn radius_squared(&self, t: f64) -> f64 {
        let (c1, c2, _, _) = self.coeffs();
        c1 * c1 + c2 * c2 + 2.0 * c1 * c2 * (self.q() as f64 * t).cos()
    }

    /// `{±t₁ + 2sπ/Q mod 2π}`: all parameters with the radius of `t₁`, sorted.
    pub fn equal_radius_preimages(&self, t1: f64) -> Vec<f64> {
        let q = self.q();
        let mut out: Vec<f64> = Vec::with_capacity(2 * q);
        for s in 0..q {
            let shift = TAU * s as f64 / q as f64;
            for t in [t1 + shift, -t1 + shift] {
                let t = wrap_2pi(t);
                if !out.iter().any(|&u| circular_gap(u, t, TAU) < 1e-12) {
                    out.push(t);
                }
            }
        }
        out.sort_by(f64::total_cmp);
        out
    }

    /// The rotation `f(t + π/Q) = e^{imπ/Q} g(t)` relating `f` to the curve `g`
    /// with `c₂` negated. Returns `(mπ/Q, g)`.
    pub fn sign_flip_rotation(&self) -> (f64, TwoChain) {
        let angle = self.m as f64 * PI / self.q() as f64;
        let companion = TwoChain {
            c2: self.c2.neg(),
            ..self.clone()
        };
        (angle, companion)
    }

    pub fn rotation_group(&self) -> RotationGroup {
        rotation_group(self.q(), self.m)
    }

    fn shifted_orbit(&self, kind: ClassKind, t0: f64, s0: Option<f64>, order: usize, step: f64) -> ModuleClass {
        let orbit = (0..order)
            .map(|k| {
                let t = wrap_2pi(t0 + step * k as f64);
                OrbitMember {
                    t,
                    s: s0.map(|s| wrap_2pi(s + step * k as f64)),
                    point: self.point(t),
                }
            })
            .collect();
        ModuleClass::from_orbit(kind, orbit, order)
    }

    /// Zeros of `f`: `tₖ = 2kπ/Q` when `c₁ = −c₂`, `tₖ = (2k+1)π/Q` when `c₁ = c₂`.
    pub fn zeros(&self) -> Option<ModuleClass> {
        let q = self.q();
        let offset = if self.c1.approx_eq(&self.c2.neg()) {
            0.0
        } else if self.c1.approx_eq(&self.c2) {
            PI / q as f64
        } else {
            return None;
        };
        let mut class = self.shifted_orbit(ClassKind::Zero, offset, None, q, TAU / q as f64);
        for m in &mut class.orbit {
            m.point = Vec2::ZERO;
        }
        class.base_point = Vec2::ZERO;
        // branches through the origin with different tangents make it a multiple point
        let dirs: Vec<Vec2> = class.orbit.iter().map(|m| self.derivative(m.t)).collect();
        let transversal = dirs.iter().enumerate().any(|(i, a)| {
            dirs[i + 1..]
                .iter()
                .any(|b| a.line_angle(*b) > MIN_TANGENT_ANGLE)
        });
        if transversal {
            class.tags.push(Tag::MultiplePoint);
        }
        Some(class)
    }

    /// Sign of the singular case: `Some(true)` for `m c₁ = ℓ c₂`,
    /// `Some(false)` for `m c₁ = −ℓ c₂`, `None` otherwise.
    pub fn singular_case(&self) -> Option<bool> {
        let mc1 = self.c1.scaled(self.m);
        let lc2 = self.c2.scaled(self.l);
        if mc1.approx_eq(&lc2) {
            Some(true)
        } else if mc1.approx_eq(&lc2.neg()) {
            Some(false)
        } else {
            None
        }
    }

    /// Singular parameters in `[0, 2π)`, or empty when `(m c₁)² ≠ (ℓ c₂)²`.
    pub fn singular_parameters(&self) -> Vec<f64> {
        let q = self.q();
        let offset = match self.singular_case() {
            Some(true) => PI / q as f64,
            Some(false) => 0.0,
            None => return Vec::new(),
        };
        let mut ts: Vec<f64> = (0..q)
            .map(|k| wrap_2pi(offset + TAU * k as f64 / q as f64))
            .collect();
        ts.sort_by(f64::total_cmp);
        ts
    }

    /// The class of local singular points, each tested for the return-point
    /// geometry and a nonvanishing second derivative.
    pub fn singular_points(&self) -> Option<ModuleClass> {
        let ts = self.singular_parameters();
        let &t0 = ts.first()?;
        let q = self.q();
        let mut class = self.shifted_orbit(ClassKind::Singular, t0, None, q, TAU / q as f64);
        let all_return = class.orbit.iter().all(|m| self.return_point_test(m.t).passes());
        let all_double = class.orbit.iter().all(|m| self.is_double_singularity(m.t));
        if all_return {
            class.tags.push(Tag::ReturnPointFirstKind);
        }
        if all_double {
            class.tags.push(Tag::DoubleSingularity);
        }
        Some(class)
    }

    /// `ẍ² + ÿ² > 1e-9·scale²` at `t`.
    pub fn is_double_singularity(&self, t: f64) -> bool {
        let s = self.acceleration_scale();
        self.second_derivative(t).hypot2() > 1e-9 * s * s
    }

    /// Geometry of the curve near a singular parameter `t0`, sampled at
    /// `t0 ± ε` for `ε ∈ {1e-2, 1e-3}`.
    pub fn return_point_test(&self, t0: f64) -> ReturnPointCheck {
        let p0 = self.point(t0);
        let tangent = self.second_derivative(t0).normalize();
        let normal = tangent.turn90();
        let mut check = ReturnPointCheck {
            common_tangent: true,
            one_side_of_normal: true,
            opposite_sides_of_tangent: true,
        };
        let mut prev_angle = f64::INFINITY;
        for eps in [1e-2, 1e-3] {
            let a = self.point(t0 + eps) - p0;
            let b = self.point(t0 - eps) - p0;
            let (an, bn) = (a.dot(tangent), b.dot(tangent));
            if an * bn <= 0.0 || an.is_nan() || bn.is_nan() {
                check.one_side_of_normal = false;
            }
            let (at, bt) = (a.dot(normal), b.dot(normal));
            if at * bt >= 0.0 || at.is_nan() || bt.is_nan() {
                check.opposite_sides_of_tangent = false;
            }
            let angle = a.line_angle(tangent).max(b.line_angle(tangent));
            if !(angle < 0.1 && angle < prev_angle) {
                check.common_tangent = false;
            }
            prev_angle = angle;
        }
        check
    }

    /// Fold points: `φ̇ = 0 ≠ ψ̇` and `ψ̇ = 0 ≠ φ̇`.
    ///
    /// Candidates are `2kπ/(ℓ+m)` and `(2k+1)π/(ℓ+m)`; which set belongs to
    /// which derivative depends on the sign of `m c₁ = ±ℓ c₂`. Candidates where
    /// both derivatives vanish are singular and are removed.
    pub fn fold_points(&self) -> Result<FoldSets, TwoChainError> {
        let case = self.singular_case().ok_or(TwoChainError::ConditionNotMet)?;
        let n = self.fold_order();
        let step = TAU / n as f64;
        let even: Vec<f64> = (0..n).map(|k| wrap_2pi(step * k as f64)).collect();
        let odd: Vec<f64> = (0..n).map(|k| wrap_2pi(step * (k as f64 + 0.5))).collect();
        let (phi_c, psi_c) = if case { (even, odd) } else { (odd, even) };
        let eps = 1e-9 * self.velocity_scale();
        let mut removed = Vec::new();
        let mut keep = |cands: Vec<f64>, vanishing: fn(Vec2) -> f64, other: fn(Vec2) -> f64| {
            let mut kept = Vec::new();
            for t in cands {
                let v = self.derivative(t);
                debug_assert!(vanishing(v).abs() <= eps.max(1e-12));
                if other(v).abs() <= eps {
                    removed.push(t);
                } else {
                    kept.push(t);
                }
            }
            kept
        };
        let phi = keep(phi_c, |v| v.x, |v| v.y);
        let psi = keep(psi_c, |v| v.y, |v| v.x);
        let mut removed_singular = removed;
        removed_singular.sort_by(f64::total_cmp);
        removed_singular.dedup_by(|a, b| circular_gap(*a, *b, TAU) < 1e-12);
        let to_class = |kind: ClassKind, ts: Vec<f64>| {
            let orbit = ts
                .into_iter()
                .map(|t| OrbitMember {
                    t,
                    s: None,
                    point: self.point(t),
                })
                .collect();
            ModuleClass::from_orbit(kind, orbit, n)
        };
        Ok(FoldSets {
            phi_dot: to_class(ClassKind::FoldPhiDot, phi),
            psi_dot: to_class(ClassKind::FoldPsiDot, psi),
            removed_singular,
        })
    }

    /// Self-intersection classes seeded from the symmetry axes, with oracle
    /// fallback for classes that never meet an axis.
    pub fn self_intersection_classes(&self) -> Result<Vec<ModuleClass>, TwoChainError> {
        self.self_intersection_classes_with(Some(&OracleConfig::default()))
    }

    /// As [`TwoChain::self_intersection_classes`]; `None` disables the oracle fallback.
    pub fn self_intersection_classes_with(
        &self,
        oracle_cfg: Option<&OracleConfig>,
    ) -> Result<Vec<ModuleClass>, TwoChainError> {
        let chain = self.to_chain();
        let scale = self.scale();
        let on_origin = |p: Vec2| p.hypot() <= 1e-9 * scale;
        let mut seeds: Vec<(f64, f64, Provenance)> = Vec::new();
        let mut axis = x_axis_points(&chain)?;
        if chain.all_odd() {
            axis.extend(y_axis_points(&chain)?);
        }
        for p in axis {
            if p.classification == AxisClass::SelfIntersection && !on_origin(p.location) {
                seeds.push((p.t1, p.t2, Provenance::Analytic));
            }
        }

        let q = self.q();
        let step = TAU / q as f64;
        let tol = 1e-6 * scale.max(1.0);
        let mut classes: Vec<ModuleClass> = Vec::new();
        let add = |classes: &mut Vec<ModuleClass>, t0: f64, s0: f64, prov: Provenance| {
            let p = self.point(t0);
            if classes
                .iter()
                .any(|c| c.orbit.iter().any(|m| m.point.distance(p) <= tol))
            {
                return;
            }
            let mut class = self.shifted_orbit(ClassKind::SelfIntersection, t0, Some(s0), q, step);
            class.provenance = prov;
            classes.push(class);
        };
        for (t0, s0, prov) in seeds {
            add(&mut classes, t0, s0, prov);
        }
        if let Some(cfg) = oracle_cfg {
            let (crossings, _) = oracle::find_self_intersections(&chain, cfg);
            for c in crossings {
                if on_origin(c.point) && self.zeros().is_some() {
                    continue;
                }
                let before = classes.len();
                add(&mut classes, c.t, c.s, Provenance::OracleSeeded);
                if classes.len() > before {
                    log::debug!("oracle seeded a class at ({}, {})", c.point.x, c.point.y);
                }
            }
        }

        for class in &mut classes {
            class.canonicalize();
            class.structure = Some(self.check_structure(class));
        }
        classes.sort_by(|a, b| {
            a.base_point
                .x
                .total_cmp(&b.base_point.x)
                .then(a.base_point.y.total_cmp(&b.base_point.y))
        });
        Ok(classes)
    }

    /// Axis membership counts of a class, checked against the expected
    /// structure: one real member for odd `Q`; for `Q = 2s` with `s` odd,
    /// exactly two members on one axis.
    fn check_structure(&self, class: &ModuleClass) -> ClassStructure {
        let tol = 1e-9 * self.scale();
        let on_x = class.orbit.iter().filter(|m| m.point.y.abs() <= tol).count();
        let on_y = class.orbit.iter().filter(|m| m.point.x.abs() <= tol).count();
        let q = self.q();
        let expected = if q % 2 == 1 {
            Some(on_x == 1)
        } else if (q / 2) % 2 == 1 {
            Some(on_x + on_y == 2 && (on_x == 2 || on_y == 2))
        } else {
            None
        };
        ClassStructure {
            on_x_axis: on_x,
            on_y_axis: on_y,
            expected,
        }
    }

    /// Every feature of the curve as a flat list, with orbit ids.
    pub fn features(&self) -> Result<Vec<CurveFeature>, TwoChainError> {
        self.features_with(Some(&OracleConfig::default()))
    }

    /// As [`TwoChain::features`]; `None` disables the oracle fallback.
    pub fn features_with(&self, oracle_cfg: Option<&OracleConfig>) -> Result<Vec<CurveFeature>, TwoChainError> {
        let mut classes = self.self_intersection_classes_with(oracle_cfg)?;
        classes.extend(self.zeros());
        classes.extend(self.singular_points());
        if let Ok(f) = self.fold_points() {
            classes.extend([f.phi_dot, f.psi_dot].into_iter().filter(|c| !c.orbit.is_empty()));
        }
        Ok(classes
            .iter()
            .enumerate()
            .flat_map(|(id, c)| c.features(id))
            .collect())
    }
}

impl fmt::Display for TwoChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.c1, self.c2, self.m, self.l)
    }
}

impl oracle::PlaneCurve for TwoChain {
    fn point(&self, t: f64) -> Vec2 {
        TwoChain::point(self, t)
    }
    fn velocity(&self, t: f64) -> Vec2 {
        self.derivative(t)
    }
    fn scale(&self) -> f64 {
        TwoChain::scale(self)
    }
    fn velocity_scale(&self) -> f64 {
        TwoChain::velocity_scale(self)
    }
}

const MIN_TANGENT_ANGLE: f64 = 1e-4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReturnPointCheck {
    /// Both chords approach the tangent direction.
    pub common_tangent: bool,
    /// Both branches lie on one side of the normal line.
    pub one_side_of_normal: bool,
    /// The branches lie on opposite sides of the tangent line.
    pub opposite_sides_of_tangent: bool,
}

impl ReturnPointCheck {
    pub fn passes(&self) -> bool {
        self.common_tangent && self.one_side_of_normal && self.opposite_sides_of_tangent
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassKind {
    SelfIntersection,
    Singular,
    FoldPhiDot,
    FoldPsiDot,
    Zero,
}

impl ClassKind {
    pub fn feature_kind(self) -> FeatureKind {
        match self {
            ClassKind::SelfIntersection => FeatureKind::SelfIntersection,
            ClassKind::Singular => FeatureKind::Singular,
            ClassKind::FoldPhiDot => FeatureKind::FoldPhiDot,
            ClassKind::FoldPsiDot => FeatureKind::FoldPsiDot,
            ClassKind::Zero => FeatureKind::Zero,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrbitMember {
    pub t: f64,
    /// Second preimage for self-intersections.
    pub s: Option<f64>,
    pub point: Vec2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassStructure {
    pub on_x_axis: usize,
    pub on_y_axis: usize,
    /// Whether the axis counts have the predicted form, when a prediction exists.
    pub expected: Option<bool>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModuleClass {
    pub kind: ClassKind,
    pub base_point: Vec2,
    pub base_params: (f64, Option<f64>),
    pub orbit: Vec<OrbitMember>,
    pub group_order: usize,
    pub tags: Vec<Tag>,
    pub provenance: Provenance,
    pub structure: Option<ClassStructure>,
}

impl ModuleClass {
    fn from_orbit(kind: ClassKind, orbit: Vec<OrbitMember>, group_order: usize) -> Self {
        let mut class = ModuleClass {
            kind,
            base_point: Vec2::ZERO,
            base_params: (0.0, None),
            orbit,
            group_order,
            tags: Vec::new(),
            provenance: Provenance::Analytic,
            structure: None,
        };
        class.canonicalize();
        class
    }

    /// Normalizes `t < s` in each member, sorts the orbit by `t` and takes the
    /// first member as the base.
    fn canonicalize(&mut self) {
        for m in &mut self.orbit {
            if let Some(s) = m.s {
                if s < m.t {
                    m.s = Some(m.t);
                    m.t = s;
                }
            }
        }
        self.orbit.sort_by(|a, b| a.t.total_cmp(&b.t));
        if let Some(first) = self.orbit.first() {
            self.base_point = first.point;
            self.base_params = (first.t, first.s);
        }
    }

    pub fn points(&self) -> Vec<Vec2> {
        self.orbit.iter().map(|m| m.point).collect()
    }

    pub fn features(&self, orbit_id: usize) -> Vec<CurveFeature> {
        self.orbit
            .iter()
            .map(|m| {
                let mut params = alloc::vec![m.t];
                params.extend(m.s);
                let mut f = CurveFeature::planar(self.kind.feature_kind(), m.point, params)
                    .in_orbit(orbit_id)
                    .with_tags(&self.tags);
                f.provenance = self.provenance;
                let tol = 1e-12 * (1.0 + m.point.hypot());
                if self.kind == ClassKind::SelfIntersection {
                    if m.point.y.abs() <= tol {
                        f = f.with_tags(&[Tag::OnXAxis]);
                    }
                    if m.point.x.abs() <= tol {
                        f = f.with_tags(&[Tag::OnYAxis]);
                    }
                }
                f
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FoldSets {
    pub phi_dot: ModuleClass,
    pub psi_dot: ModuleClass,
    /// Candidates dropped because both derivatives vanish there.
    pub removed_singular: Vec<f64>,
}

/// The cyclic group `{e^{2iπkm/n}}`.
#[derive(Clone, Debug, PartialEq)]
pub struct RotationGroup {
    pub order: usize,
    pub elements: Vec<Complex64>,
}

fn unit(angle: f64) -> Complex64 {
    let (s, c) = angle.sin_cos();
    Complex64::new(c, s)
}

/// The cyclic group of the given order generated by `e^{2iπm/order}`.
pub fn rotation_group(order: usize, m: i64) -> RotationGroup {
    let order = order.max(1);
    let elements = (0..order)
        .map(|k| {
            let e = (k as i64 * m).rem_euclid(order as i64);
            unit(TAU * e as f64 / order as f64)
        })
        .collect();
    RotationGroup { order, elements }
}

impl RotationGroup {
    /// Every product of two elements is an element (within `tol`).
    pub fn is_closed(&self, tol: f64) -> bool {
        self.elements.iter().all(|a| {
            self.elements
                .iter()
                .all(|b| self.elements.iter().any(|c| (a * b - c).norm_sqr().sqrt() <= tol))
        })
    }

    pub fn apply(g: Complex64, p: Vec2) -> Vec2 {
        let w = g * Complex64::new(p.x, p.y);
        Vec2::new(w.re, w.im)
    }

    /// Each element maps `points` onto itself as a set.
    pub fn preserves(&self, points: &[Vec2], tol: f64) -> bool {
        self.elements.iter().all(|&g| {
            points.iter().all(|&p| {
                let q = RotationGroup::apply(g, p);
                points.iter().any(|r| r.distance(q) <= tol)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tc(c1: Real, c2: Real, m: i64, l: i64) -> TwoChain {
        TwoChain::new(c1, c2, m, l).unwrap()
    }

    #[test]
    fn validation() {
        assert!(matches!(TwoChain::new(Real::int(1), Real::int(1), 3, 2), Err(TwoChainError::NotOrdered { .. })));
        assert!(matches!(TwoChain::new(Real::int(1), Real::int(1), 2, 4), Err(TwoChainError::NotCoprime { .. })));
        assert_eq!(TwoChain::new(Real::int(1), Real::int(1), -1, 1), Err(TwoChainError::OppositeExponents));
        assert_eq!(TwoChain::new(Real::int(0), Real::int(1), 1, 2), Err(TwoChainError::ZeroCoefficient));
        let ch = Chain::complex([(3, Real::int(2)), (2, Real::int(1))]).unwrap();
        assert_eq!(TwoChain::from_chain(&ch), Some(tc(Real::int(1), Real::int(2), 2, 3)));
    }

    #[test]
    fn radius_examples() {
        let a = tc(Real::int(1), Real::int(1), 2, 3);
        assert!(a.radius_squared(PI).abs() < 1e-15);
        let b = tc(Real::int(1), Real::int(2), 1, 3);
        for i in 0..100 {
            let t = i as f64 * 0.07;
            let r = b.radius_squared(t);
            assert!((1.0 - 1e-12..=9.0 + 1e-12).contains(&r));
            assert!((r - b.radius_squared(t + PI)).abs() < 1e-12);
            assert!((r - b.point(t).hypot2()).abs() < 1e-12);
        }
    }

    #[test]
    fn preimage_examples() {
        let five = tc(Real::int(1), Real::int(1), 1, 6);
        assert_eq!(five.equal_radius_preimages(0.3).len(), 10);
        let one = tc(Real::int(1), Real::int(1), 2, 3);
        assert_eq!(one.equal_radius_preimages(0.0), alloc::vec![0.0]);
        let two = tc(Real::int(1), Real::int(1), 1, 3);
        let p = two.equal_radius_preimages(PI / 2.0);
        assert_eq!(p.len(), 2);
        assert!((p[0] - PI / 2.0).abs() < 1e-12 && (p[1] - 1.5 * PI).abs() < 1e-12);
    }

    #[test]
    fn zero_examples() {
        let z = tc(Real::int(1), Real::int(-1), 2, 3).zeros().unwrap();
        assert_eq!(z.orbit.len(), 1);
        assert_eq!(z.base_params.0, 0.0);
        let z = tc(Real::int(1), Real::int(1), 1, 3).zeros().unwrap();
        let ts: Vec<f64> = z.orbit.iter().map(|m| m.t).collect();
        assert!((ts[0] - PI / 2.0).abs() < 1e-12 && (ts[1] - 1.5 * PI).abs() < 1e-12);
        assert!(tc(Real::int(1), Real::int(2), 2, 3).zeros().is_none());
    }

    #[test]
    fn singular_examples() {
        let s = tc(Real::int(1), Real::ratio(-2, 3), 2, 3).singular_points().unwrap();
        assert_eq!(s.orbit.len(), 1);
        assert!((s.base_point.x - 1.0 / 3.0).abs() < 1e-15);
        let neph = tc(Real::int(3), Real::int(-1), 1, 3);
        let s = neph.singular_points().unwrap();
        let xs: Vec<f64> = s.orbit.iter().map(|m| m.point.x).collect();
        assert!((xs[0] - 2.0).abs() < 1e-12 && (xs[1] + 2.0).abs() < 1e-12);
        assert!(s.tags.contains(&Tag::ReturnPointFirstKind));
        assert!(s.tags.contains(&Tag::DoubleSingularity));
        assert!(tc(Real::int(1), Real::int(1), 2, 3).singular_points().is_none());
    }

    #[test]
    fn fold_examples() {
        let cardioid = tc(Real::int(2), Real::int(-1), 1, 2);
        let f = cardioid.fold_points().unwrap();
        assert_eq!(f.removed_singular, alloc::vec![0.0]);
        assert_eq!(f.phi_dot.orbit.len() + f.psi_dot.orbit.len(), 5);
        for m in f.phi_dot.orbit.iter().chain(&f.psi_dot.orbit) {
            assert!(cardioid.derivative(m.t).hypot() > 1e-6);
        }
        let a = tc(Real::int(3), Real::int(2), 2, 3).fold_points().unwrap();
        assert_eq!(a.phi_dot.orbit.len(), 5);
        assert_eq!(a.psi_dot.orbit.len() + a.removed_singular.len(), 5);
        assert_eq!(
            tc(Real::int(1), Real::int(1), 2, 3).fold_points(),
            Err(TwoChainError::ConditionNotMet)
        );
    }

    #[test]
    fn groups() {
        assert_eq!(rotation_group(1, 5).elements, alloc::vec![Complex64::new(1.0, 0.0)]);
        let g5 = rotation_group(5, 1);
        assert!(g5.is_closed(1e-12));
        assert!(g5.elements.iter().all(|z| (z.powu(5) - 1.0).norm_sqr().sqrt() < 1e-12));
        let g6 = rotation_group(6, 1);
        assert_eq!(g6.elements.len(), 6);
        assert!(g6.is_closed(1e-12));
    }

    #[test]
    fn sign_flip_angles() {
        let (a, _) = tc(Real::int(1), Real::int(1), 2, 3).sign_flip_rotation();
        assert!((a - TAU).abs() < 1e-15);
        for (m, l, expected) in [(1, 3, PI / 2.0), (1, 2, PI)] {
            let f = tc(Real::int(1), Real::ratio(1, 2), m, l);
            let (angle, g) = f.sign_flip_rotation();
            assert!((angle - expected).abs() < 1e-15);
            for i in 0..100 {
                let t = i as f64 * 0.0628;
                let lhs = f.point(t + PI / f.q() as f64);
                let rhs = g.point(t).rotate(angle);
                assert!(lhs.distance(rhs) < 1e-12);
            }
        }
    }

    #[test]
    fn example_classes() {
        let c = tc(Real::int(1), Real::ratio(-2, 3), 2, 3).self_intersection_classes().unwrap();
        assert_eq!(c.len(), 1);
        assert!((c[0].base_point.x + 4.0 / 3.0).abs() < 1e-12);
        let c = tc(Real::int(1), Real::int(1), 2, 3).self_intersection_classes().unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|k| k.orbit.len() == 1 && k.base_point.y.abs() < 1e-12));
    }

    fn arb_two_chain() -> impl Strategy<Value = TwoChain> {
        (-4i64..4, 1i64..6, -9i64..=9, -9i64..=9).prop_filter_map("invalid", |(m, dq, a, b)| {
            TwoChain::new(Real::ratio(a, 3), Real::ratio(b, 3), m, m + dq).ok()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn orbits_are_group_invariant(tc in arb_two_chain()) {
            let g = tc.rotation_group();
            prop_assert!(g.is_closed(1e-12));
            let tol = 1e-9 * tc.scale().max(1.0);
            for class in tc.self_intersection_classes_with(None).unwrap() {
                let pts = class.points();
                prop_assert!(g.preserves(&pts, tol));
                prop_assert_eq!(pts.len(), tc.q());
                let mut ts: Vec<f64> = class.orbit.iter().map(|m| m.t).collect();
                ts.sort_by(f64::total_cmp);
                for w in ts.windows(2) {
                    prop_assert!(w[1] - w[0] > 1e-9);
                }
                for (k, m) in class.orbit.iter().enumerate() {
                    let _ = k;
                    // every member is the base rotated by a group element
                    prop_assert!(g.elements.iter().any(|&e| RotationGroup::apply(e, class.base_point).distance(m.point) < 1e-10 * tc.scale().max(1.0)));
                }
            }
            if let Some(z) = tc.zeros() {
                for m in &z.orbit {
                    prop_assert!(tc.radius_squared(m.t).abs() < 1e-12 * tc.scale().powi(2).max(1.0));
                }
            }
            if let Some(s) = tc.singular_points() {
                prop_assert!(g.preserves(&s.points(), tol));
                for m in &s.orbit {
                    prop_assert!(tc.derivative(m.t).hypot() < 1e-9 * tc.velocity_scale());
                    prop_assert!(tc.is_double_singularity(m.t));
                }
            }
        }
    }
}
