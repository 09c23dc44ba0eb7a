// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Brute-force detection of self-intersections and singular points.
//!
//! The oracle only evaluates points and velocities, so it shares no code path
//! with the polynomial analysis. The curve is sampled into a closed polyline;
//! pairs of non-adjacent segments that cross or nearly touch are refined with
//! a damped Newton iteration on `P(t) − P(s) = 0`. Singular points are local
//! minima of the speed driven to zero by golden-section search.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use crate::chain::Chain;
use crate::feature::{CurveFeature, FeatureKind, Tag};
use crate::geom::{circular_gap, wrap_2pi, Vec2};

// std, when linked, shadows these with its inherent float methods.
#[allow(unused_imports)]
use num_traits::Float;

/// A closed plane curve with an analytic first derivative.
pub trait PlaneCurve {
    fn point(&self, t: f64) -> Vec2;
    fn velocity(&self, t: f64) -> Vec2;
    fn period(&self) -> f64 {
        TAU
    }
    /// Typical coordinate size.
    fn scale(&self) -> f64;
    /// Typical speed.
    fn velocity_scale(&self) -> f64;
}

impl PlaneCurve for Chain {
    fn point(&self, t: f64) -> Vec2 {
        self.eval(t)
    }

    fn velocity(&self, t: f64) -> Vec2 {
        self.derivative(t)
    }

    fn scale(&self) -> f64 {
        self.amplitude()
    }

    fn velocity_scale(&self) -> f64 {
        self.derivative_scale()
    }
}

impl<C: PlaneCurve + ?Sized> PlaneCurve for &C {
    fn point(&self, t: f64) -> Vec2 {
        (**self).point(t)
    }
    fn velocity(&self, t: f64) -> Vec2 {
        (**self).velocity(t)
    }
    fn period(&self) -> f64 {
        (**self).period()
    }
    fn scale(&self) -> f64 {
        (**self).scale()
    }
    fn velocity_scale(&self) -> f64 {
        (**self).velocity_scale()
    }
}

/// A [`PlaneCurve`] built from closures.
pub struct FnCurve<P, V> {
    pub point: P,
    pub velocity: V,
    pub period: f64,
    pub scale: f64,
    pub velocity_scale: f64,
}

impl<P, V> core::fmt::Debug for FnCurve<P, V> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("FnCurve")
            .field("period", &self.period)
            .field("scale", &self.scale)
            .field("velocity_scale", &self.velocity_scale)
            .finish_non_exhaustive()
    }
}

impl<P: Fn(f64) -> Vec2, V: Fn(f64) -> Vec2> PlaneCurve for FnCurve<P, V> {
    fn point(&self, t: f64) -> Vec2 {
        (self.point)(t)
    }
    fn velocity(&self, t: f64) -> Vec2 {
        (self.velocity)(t)
    }
    fn period(&self) -> f64 {
        self.period
    }
    fn scale(&self) -> f64 {
        self.scale
    }
    fn velocity_scale(&self) -> f64 {
        self.velocity_scale
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleConfig {
    pub n_samples: usize,
    /// Candidate distance between segments, relative to the curve scale.
    pub pair_tol: f64,
    /// Accepted residual, relative to the curve (or speed) scale.
    pub refine_tol: f64,
    /// Points closer than this (relative to `max(1, scale)`) are merged.
    pub dedupe_radius: f64,
    /// Smallest parameter separation of a genuine pair.
    pub min_param_gap: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            n_samples: 4096,
            pair_tol: 1e-6,
            refine_tol: 1e-11,
            dedupe_radius: 1e-7,
            min_param_gap: 1e-4,
        }
    }
}

impl OracleConfig {
    pub fn with_samples(n_samples: usize) -> Self {
        OracleConfig {
            n_samples,
            ..Default::default()
        }
    }

    pub fn is_valid(&self) -> bool {
        self.n_samples >= 256
            && self.refine_tol > 0.0
            && self.pair_tol > self.refine_tol
            && self.dedupe_radius > 0.0
            && self.min_param_gap > 0.0
    }
}

/// A point reached from two or more parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct Crossing {
    pub t: f64,
    pub s: f64,
    pub point: Vec2,
    /// Angle between the two tangent lines, in `[0, π/2]`.
    pub tangent_angle: f64,
    /// Every parameter found to reach this point, sorted.
    pub params: Vec<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleSingular {
    pub t: f64,
    pub point: Vec2,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct OracleReport {
    pub intersections: Vec<Crossing>,
    /// Coincidences with a common tangent line.
    pub tangential: Vec<Crossing>,
    pub singular: Vec<OracleSingular>,
}

impl OracleReport {
    pub fn intersection_points(&self) -> Vec<Vec2> {
        self.intersections.iter().map(|c| c.point).collect()
    }

    pub fn singular_points(&self) -> Vec<Vec2> {
        self.singular.iter().map(|s| s.point).collect()
    }
}

const TANGENT_ANGLE_MIN: f64 = 1e-4;

/// Self-intersections and singular points of `curve`.
pub fn analyze<C: PlaneCurve>(curve: &C, cfg: &OracleConfig) -> OracleReport {
    let (intersections, tangential) = find_self_intersections(curve, cfg);
    OracleReport {
        intersections,
        tangential,
        singular: find_singular_points(curve, cfg),
    }
}

struct Segment {
    i: usize,
    lo: Vec2,
    hi: Vec2,
}

/// Returns `(intersections, tangential coincidences)`, both sorted by `(x, y, t)`.
pub fn find_self_intersections<C: PlaneCurve>(
    curve: &C,
    cfg: &OracleConfig,
) -> (Vec<Crossing>, Vec<Crossing>) {
    let n = cfg.n_samples.max(256);
    let period = curve.period();
    let scale = curve.scale().max(f64::MIN_POSITIVE);
    let h = period / n as f64;
    let pts: Vec<Vec2> = (0..=n).map(|i| curve.point(h * i as f64)).collect();
    let near = cfg.pair_tol * scale;

    let mut segs: Vec<Segment> = (0..n)
        .map(|i| {
            let (a, b) = (pts[i], pts[i + 1]);
            Segment {
                i,
                lo: Vec2::new(a.x.min(b.x) - near, a.y.min(b.y) - near),
                hi: Vec2::new(a.x.max(b.x) + near, a.y.max(b.y) + near),
            }
        })
        .collect();
    segs.sort_by(|a, b| a.lo.x.total_cmp(&b.lo.x).then(a.i.cmp(&b.i)));

    let mut seeds: Vec<(f64, f64)> = Vec::new();
    for (k, a) in segs.iter().enumerate() {
        for b in &segs[k + 1..] {
            if b.lo.x > a.hi.x {
                break;
            }
            if b.lo.y > a.hi.y || a.lo.y > b.hi.y {
                continue;
            }
            let (i, j) = if a.i < b.i { (a.i, b.i) } else { (b.i, a.i) };
            if j - i <= 1 || (i == 0 && j == n - 1) {
                continue;
            }
            if let Some((u, v)) = segment_contact(pts[i], pts[i + 1], pts[j], pts[j + 1], near) {
                seeds.push((h * (i as f64 + u), h * (j as f64 + v)));
            }
        }
    }
    seeds.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));

    let merge = cfg.dedupe_radius * scale.max(1.0);
    let mut crossings: Vec<Crossing> = Vec::new();
    let mut tangential: Vec<Crossing> = Vec::new();
    let vscale = curve.velocity_scale().max(f64::MIN_POSITIVE);
    for (t0, s0) in seeds {
        let Some((t, s)) = refine_pair(curve, t0, s0, cfg.refine_tol * scale) else {
            log::trace!("oracle: candidate ({t0}, {s0}) did not converge");
            continue;
        };
        let (t, s) = (wrap_2pi_period(t, period), wrap_2pi_period(s, period));
        if circular_gap(t, s, period) <= cfg.min_param_gap {
            continue;
        }
        let p = curve.point(t);
        let (vt, vs) = (curve.velocity(t), curve.velocity(s));
        let slow = 1e-6 * vscale;
        let angle = if vt.hypot() < slow || vs.hypot() < slow {
            0.0
        } else {
            vt.line_angle(vs)
        };
        let bucket = if angle > TANGENT_ANGLE_MIN {
            &mut crossings
        } else {
            &mut tangential
        };
        merge_into(bucket, t, s, p, angle, merge, period);
    }
    // a point with one transversal pair is an intersection even if other
    // branches through it are tangent
    tangential.retain(|c| !crossings.iter().any(|x| x.point.distance(c.point) <= merge));
    for list in [&mut crossings, &mut tangential] {
        list.sort_by(|a, b| {
            a.point
                .x
                .total_cmp(&b.point.x)
                .then(a.point.y.total_cmp(&b.point.y))
                .then(a.t.total_cmp(&b.t))
        });
    }
    (crossings, tangential)
}

fn wrap_2pi_period(t: f64, period: f64) -> f64 {
    if period == TAU {
        wrap_2pi(t)
    } else {
        let r = t % period;
        let r = if r < 0.0 { r + period } else { r };
        if r >= period {
            0.0
        } else {
            r
        }
    }
}

fn merge_into(list: &mut Vec<Crossing>, t: f64, s: f64, p: Vec2, angle: f64, merge: f64, period: f64) {
    let add = |params: &mut Vec<f64>, x: f64| {
        if !params.iter().any(|&q| circular_gap(q, x, period) < 1e-9) {
            params.push(x);
            params.sort_by(f64::total_cmp);
        }
    };
    if let Some(c) = list.iter_mut().find(|c| c.point.distance(p) <= merge) {
        add(&mut c.params, t);
        add(&mut c.params, s);
        c.tangent_angle = c.tangent_angle.max(angle);
        return;
    }
    let (t, s) = if t <= s { (t, s) } else { (s, t) };
    let mut params = alloc::vec![t];
    add(&mut params, s);
    list.push(Crossing {
        t,
        s,
        point: p,
        tangent_angle: angle,
        params,
    });
}

/// Local parameters `(u, v) ∈ [0, 1]²` of the closest approach of two
/// segments, if they cross or pass within `near`.
fn segment_contact(a0: Vec2, a1: Vec2, b0: Vec2, b1: Vec2, near: f64) -> Option<(f64, f64)> {
    let da = a1 - a0;
    let db = b1 - b0;
    let denom = da.cross(db);
    if denom != 0.0 {
        let w = b0 - a0;
        let u = w.cross(db) / denom;
        let v = w.cross(da) / denom;
        if (0.0..=1.0).contains(&u) && (0.0..=1.0).contains(&v) {
            return Some((u, v));
        }
    }
    // closest pair among endpoint projections
    let project = |p: Vec2, o: Vec2, d: Vec2| {
        let l = d.hypot2();
        if l == 0.0 {
            0.0
        } else {
            ((p - o).dot(d) / l).clamp(0.0, 1.0)
        }
    };
    let options = [
        (0.0, project(a0, b0, db)),
        (1.0, project(a1, b0, db)),
        (project(b0, a0, da), 0.0),
        (project(b1, a0, da), 1.0),
    ];
    let mut best: Option<(f64, f64, f64)> = None;
    for (u, v) in options {
        let d = (a0 + da * u).distance(b0 + db * v);
        if best.is_none_or(|b| d < b.2) {
            best = Some((u, v, d));
        }
    }
    best.filter(|b| b.2 <= near).map(|b| (b.0, b.1))
}

/// Levenberg–Marquardt on `F(t, s) = P(t) − P(s)`.
///
/// Iterates past the acceptance threshold until the residual stalls, so that
/// spurious pairs sliding towards the diagonal `t = s` (near a cusp) end up
/// inside the minimum parameter gap instead of being accepted early.
fn refine_pair<C: PlaneCurve>(curve: &C, mut t: f64, mut s: f64, accept: f64) -> Option<(f64, f64)> {
    let mut f = curve.point(t) - curve.point(s);
    let mut r = f.hypot();
    let mut lambda = 1e-3;
    let floor = accept * 1e-4;
    for _ in 0..100 {
        if r <= floor {
            return Some((t, s));
        }
        let jt = curve.velocity(t);
        let js = -curve.velocity(s);
        // normal equations (JᵀJ + λ diag) δ = −Jᵀ F
        let a11 = jt.hypot2();
        let a22 = js.hypot2();
        let a12 = jt.dot(js);
        let g1 = jt.dot(f);
        let g2 = js.dot(f);
        let mut improved = false;
        for _ in 0..30 {
            let b11 = a11 * (1.0 + lambda) + 1e-300;
            let b22 = a22 * (1.0 + lambda) + 1e-300;
            let det = b11 * b22 - a12 * a12;
            if det == 0.0 || !det.is_finite() {
                lambda *= 10.0;
                continue;
            }
            let dt = -(b22 * g1 - a12 * g2) / det;
            let ds = -(b11 * g2 - a12 * g1) / det;
            let (nt, ns) = (t + dt, s + ds);
            let nf = curve.point(nt) - curve.point(ns);
            let nr = nf.hypot();
            if nr < r {
                t = nt;
                s = ns;
                f = nf;
                r = nr;
                lambda = (lambda * 0.1).max(1e-12);
                improved = true;
                break;
            }
            lambda *= 10.0;
        }
        if !improved {
            break;
        }
    }
    (r <= accept).then_some((t, s))
}

/// Parameters where the velocity vanishes, sorted by `t`.
pub fn find_singular_points<C: PlaneCurve>(curve: &C, cfg: &OracleConfig) -> Vec<OracleSingular> {
    let n = cfg.n_samples.max(256);
    let period = curve.period();
    let h = period / n as f64;
    let threshold = cfg.refine_tol * curve.velocity_scale().max(f64::MIN_POSITIVE);
    let speed = |t: f64| curve.velocity(t).hypot();
    let sp: Vec<f64> = (0..n).map(|i| speed(h * i as f64)).collect();
    let mut out: Vec<OracleSingular> = Vec::new();
    for i in 0..n {
        let prev = sp[(i + n - 1) % n];
        let next = sp[(i + 1) % n];
        if !(sp[i] <= prev && sp[i] <= next) {
            continue;
        }
        let center = h * i as f64;
        let t = golden_min(&speed, center - h, center + h);
        if speed(t) > threshold {
            continue;
        }
        let t = wrap_2pi_period(t, period);
        if out.iter().any(|p| circular_gap(p.t, t, period) < cfg.min_param_gap) {
            continue;
        }
        out.push(OracleSingular {
            t,
            point: curve.point(t),
        });
    }
    out.sort_by(|a, b| a.t.total_cmp(&b.t));
    out
}

fn golden_min(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = b - g * (b - a);
    let mut x2 = a + g * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..200 {
        if b - a <= 1e-16 * a.abs().max(1.0) {
            break;
        }
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = f(x2);
        }
    }
    if f1 < f2 {
        x1
    } else {
        x2
    }
}

/// Unmatched items on either side of an analytic/numeric comparison.
#[derive(Clone, Debug, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub struct FeatureDiff {
    /// Analytic features with no oracle counterpart.
    pub analytic_only: Vec<CurveFeature>,
    /// Oracle points with no analytic counterpart, with their kind.
    pub oracle_only: Vec<(FeatureKind, [f64; 2])>,
}

impl FeatureDiff {
    pub fn is_empty(&self) -> bool {
        self.analytic_only.is_empty() && self.oracle_only.is_empty()
    }

    pub fn len(&self) -> usize {
        self.analytic_only.len() + self.oracle_only.len()
    }
}

/// True for analytic features the oracle reports as self-intersections.
pub fn counts_as_intersection(f: &CurveFeature) -> bool {
    f.kind == FeatureKind::SelfIntersection
        || (f.kind == FeatureKind::Zero && f.has_tag(Tag::MultiplePoint))
}

/// Bidirectional matching of analytic self-intersections and singular points
/// against an oracle report, within distance `tol`.
///
/// Other feature kinds (folds, plain zeros, tangential contacts) have no
/// oracle counterpart and are ignored.
pub fn verify_feature_set(analytic: &[CurveFeature], numeric: &OracleReport, tol: f64) -> FeatureDiff {
    let mut diff = FeatureDiff::default();
    let groups: [(FeatureKind, Vec<&CurveFeature>, Vec<Vec2>); 2] = [
        (
            FeatureKind::SelfIntersection,
            analytic.iter().filter(|f| counts_as_intersection(f)).collect(),
            numeric.intersection_points(),
        ),
        (
            FeatureKind::Singular,
            analytic.iter().filter(|f| f.kind == FeatureKind::Singular).collect(),
            numeric.singular_points(),
        ),
    ];
    for (kind, ours, theirs) in groups {
        for f in &ours {
            if !theirs.iter().any(|q| q.distance(f.xy()) <= tol) {
                diff.analytic_only.push((*f).clone());
            }
        }
        for q in theirs {
            if !ours.iter().any(|f| q.distance(f.xy()) <= tol) {
                diff.oracle_only.push((kind, [q.x, q.y]));
            }
        }
    }
    diff
}
