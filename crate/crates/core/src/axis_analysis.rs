// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Candidate points on the symmetry axes and the one-variable search for
//! local singular points.
//!
//! Every chain is symmetric about `y = 0`: `t` and `−t` map to mirror points,
//! so a point of the curve on the x-axis with `cos t = u₀` is reached from both
//! `t₁ = arccos u₀` and `t₂ = −t₁`. Substituting `sin²t = 1 − u₀²` into the
//! canonical form of `ψ` gives the polynomial condition
//!
//! ```text
//! S₁(1 − u₀²) + u₀·V₁(1 − u₀²) = 0.
//! ```
//!
//! Chains with only odd exponents are also symmetric about `x = 0`, with
//! `t ↦ π − t`, and the y-axis condition is `Q₁(1 − u₀²) = 0`.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};
use core::fmt;

use crate::chain::Chain;
use crate::geom::{circular_gap, wrap_2pi, Vec2};
use crate::rootfind::{real_roots, Multiplicity, RootError, DEFAULT_TOL};
use crate::trigpoly::{canonical_forms, CanonicalForms, Polynomial, TrigError};

// std, when linked, shadows these with its inherent float methods.
#[allow(unused_imports)]
use num_traits::Float;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxisClass {
    SelfIntersection,
    /// `φ̇ = 0 ≠ ψ̇`: both branches cross the axis vertically.
    SmoothVertical,
    /// `ψ̇ = 0 ≠ φ̇`: both branches cross the axis horizontally.
    SmoothHorizontal,
    Singular,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxisPoint {
    pub axis: Axis,
    /// `cos t₁`.
    pub u0: f64,
    pub t1: f64,
    pub t2: f64,
    pub location: Vec2,
    pub classification: AxisClass,
    /// Tangent slopes `dy/dx` of the two branches, when both are finite.
    pub slopes: Option<(f64, f64)>,
    /// `u₀` is a root on the boundary of `[−1, 1]`, where `t₁ ≡ t₂` on the x-axis.
    pub endpoint: bool,
    pub suspected_multiple: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum AxisError {
    /// The chain lies entirely on the axis being searched.
    DegenerateChain,
    NotAllOdd,
    Trig(TrigError),
    Root(RootError),
}

impl fmt::Display for AxisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxisError::DegenerateChain => f.write_str("the curve lies on the axis"),
            AxisError::NotAllOdd => f.write_str("y-axis analysis needs every exponent odd"),
            AxisError::Trig(e) => e.fmt(f),
            AxisError::Root(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for AxisError {}

impl From<TrigError> for AxisError {
    fn from(e: TrigError) -> Self {
        AxisError::Trig(e)
    }
}

impl From<RootError> for AxisError {
    fn from(e: RootError) -> Self {
        AxisError::Root(e)
    }
}

/// Threshold under which a derivative component counts as zero.
pub fn derivative_threshold(chain: &Chain) -> f64 {
    1e-9 * chain.derivative_scale()
}

fn classify(chain: &Chain, t: f64, parameters_coincide: bool) -> (AxisClass, Option<(f64, f64)>) {
    let eps = derivative_threshold(chain);
    let v = chain.derivative(t);
    let phi_zero = v.x.abs() <= eps;
    let psi_zero = v.y.abs() <= eps;
    match (phi_zero, psi_zero) {
        (true, true) => (AxisClass::Singular, None),
        (true, false) => (AxisClass::SmoothVertical, None),
        (false, true) => (AxisClass::SmoothHorizontal, Some((0.0, 0.0))),
        (false, false) => {
            let k = v.y / v.x;
            let class = if parameters_coincide {
                AxisClass::SmoothHorizontal
            } else {
                AxisClass::SelfIntersection
            };
            (class, Some((k, -k)))
        }
    }
}

/// The polynomial in `u₀ = cos t` whose roots put the curve on `y = 0`.
pub fn x_axis_polynomial(forms: &CanonicalForms) -> Polynomial {
    &forms.s1.compose_one_minus_square() + &forms.v1.compose_one_minus_square().shift_up()
}

/// The polynomial in `u₀ = cos t` whose roots put an all-odd chain on `x = 0`.
pub fn y_axis_polynomial(forms: &CanonicalForms) -> Polynomial {
    forms.q1.compose_one_minus_square()
}

/// Points where the curve meets `y = 0`, paired as `(t₁, −t₁)`.
pub fn x_axis_points(chain: &Chain) -> Result<Vec<AxisPoint>, AxisError> {
    if chain.psi_vanishes() {
        return Err(AxisError::DegenerateChain);
    }
    let forms = canonical_forms(chain)?;
    let poly = x_axis_polynomial(&forms);
    if poly.is_zero() {
        return Err(AxisError::DegenerateChain);
    }
    let roots = real_roots(&poly, -1.0, 1.0, DEFAULT_TOL)?;
    let mut out = Vec::with_capacity(roots.len());
    for r in roots.roots {
        let u0 = r.value.clamp(-1.0, 1.0);
        let t1 = u0.acos();
        let endpoint = u0.abs() == 1.0;
        let (classification, slopes) = classify(chain, t1, endpoint);
        let mut location = chain.eval(t1);
        location.y = 0.0;
        out.push(AxisPoint {
            axis: Axis::X,
            u0,
            t1,
            t2: -t1,
            location,
            classification,
            slopes,
            endpoint,
            suspected_multiple: r.multiplicity == Multiplicity::SuspectedMultiple,
        });
    }
    Ok(out)
}

/// Points where an all-odd chain meets `x = 0`, paired as `(t₁, π − t₁)`.
///
/// Each root `u₀ ≥ 0` yields the mirror points `(0, ±y₀)`.
pub fn y_axis_points(chain: &Chain) -> Result<Vec<AxisPoint>, AxisError> {
    if !chain.all_odd() {
        return Err(AxisError::NotAllOdd);
    }
    if chain.phi_vanishes() {
        return Err(AxisError::DegenerateChain);
    }
    let forms = canonical_forms(chain)?;
    let poly = y_axis_polynomial(&forms);
    if poly.is_zero() {
        return Err(AxisError::DegenerateChain);
    }
    let roots = real_roots(&poly, 0.0, 1.0, DEFAULT_TOL)?;
    let mut out: Vec<AxisPoint> = Vec::new();
    for r in roots.roots {
        let u0 = r.value.clamp(0.0, 1.0);
        let base = u0.acos();
        for t1 in [base, -base] {
            let t2 = PI - t1;
            let coincide = circular_gap(t1, t2, TAU) < 1e-12;
            let duplicate = out.iter().any(|p| {
                let same = circular_gap(p.t1, t1, TAU) < 1e-12 && circular_gap(p.t2, t2, TAU) < 1e-12;
                let swapped = circular_gap(p.t1, t2, TAU) < 1e-12 && circular_gap(p.t2, t1, TAU) < 1e-12;
                same || swapped
            });
            if duplicate {
                continue;
            }
            let (classification, slopes) = classify(chain, t1, coincide);
            let mut location = chain.eval(t1);
            location.x = 0.0;
            out.push(AxisPoint {
                axis: Axis::Y,
                u0,
                t1,
                t2,
                location,
                classification,
                slopes,
                endpoint: r.endpoint,
                suspected_multiple: r.multiplicity == Multiplicity::SuspectedMultiple,
            });
        }
    }
    Ok(out)
}

/// A parameter where both derivative components vanish.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SingularPoint {
    pub t: f64,
    pub point: Vec2,
}

/// The polynomials `A, B, C, D` in `v = sin t` with
/// `φ̇ = B(v) + cos t·A(v)` and `ψ̇ = cos t·C(v) + D(v)`.
pub fn singular_system(forms: &CanonicalForms) -> [Polynomial; 4] {
    [
        forms.u2.substitute_square().shift_up(),
        forms.q2.substitute_square().shift_up(),
        forms.s2.substitute_square(),
        forms.v2.substitute_square(),
    ]
}

/// Both-derivatives-vanish points from the elimination condition `AD − BC = 0`.
pub fn general_singular_points(chain: &Chain) -> Result<Vec<SingularPoint>, AxisError> {
    let forms = canonical_forms(chain)?;
    let [a, b, c, d] = singular_system(&forms);
    let one_minus_v2 = Polynomial::from_ints(&[1, 0, -1]);
    let candidates = [
        &(&a * &d) - &(&b * &c),
        &(&(&a * &a) * &one_minus_v2) - &(&b * &b),
        &(&(&c * &c) * &one_minus_v2) - &(&d * &d),
    ];
    let Some(eliminant) = candidates.iter().find(|p| !p.is_zero()) else {
        // both derivatives vanish identically only for a constant curve
        return Ok(Vec::new());
    };
    let eps = derivative_threshold(chain);
    let mut out: Vec<SingularPoint> = Vec::new();
    for r in real_roots(eliminant, -1.0, 1.0, DEFAULT_TOL)?.roots {
        let v = r.value.clamp(-1.0, 1.0);
        let w = (1.0 - v * v).max(0.0).sqrt();
        for cos_t in [w, -w] {
            let t = polish_singular(chain, v.atan2(cos_t));
            if chain.derivative(t).hypot() > eps {
                continue;
            }
            let t = wrap_2pi(t);
            if out.iter().any(|p| circular_gap(p.t, t, TAU) < 1e-9) {
                continue;
            }
            out.push(SingularPoint {
                t,
                point: chain.eval(t),
            });
        }
    }
    out.sort_by(|p, q| p.t.total_cmp(&q.t));
    Ok(out)
}

/// Golden-section minimization of the speed near `t`.
///
/// Root error in `sin t` becomes a larger error in `t` where `cos t ≈ 0`.
fn polish_singular(chain: &Chain, t: f64) -> f64 {
    let speed = |s: f64| chain.derivative(s).hypot();
    let (mut a, mut b) = (t - 1e-5, t + 1e-5);
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = b - g * (b - a);
    let mut x2 = a + g * (b - a);
    let (mut f1, mut f2) = (speed(x1), speed(x2));
    for _ in 0..80 {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = speed(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = speed(x2);
        }
    }
    let m = 0.5 * (a + b);
    if speed(m) < speed(t) {
        m
    } else {
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::Term;
    use crate::real::Real;
    use alloc::vec;
    use proptest::prelude::*;

    fn ex(c: Real) -> Chain {
        Chain::complex([(2, Real::int(1)), (3, c)]).unwrap()
    }

    fn intersections(points: &[AxisPoint]) -> Vec<&AxisPoint> {
        points
            .iter()
            .filter(|p| p.classification == AxisClass::SelfIntersection)
            .collect()
    }

    #[test]
    fn example_boundary_case() {
        let pts = x_axis_points(&ex(Real::ratio(-2, 3))).unwrap();
        assert_eq!(pts.len(), 2);
        assert!((pts[0].u0 + 0.25).abs() < 1e-14);
        assert_eq!(pts[0].classification, AxisClass::SelfIntersection);
        assert!((pts[0].location.x + 4.0 / 3.0).abs() < 1e-12);
        assert_eq!(pts[1].u0, 1.0);
        assert_eq!(pts[1].classification, AxisClass::Singular);
        assert!((pts[1].location.x - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn example_small_and_large_c() {
        assert_eq!(intersections(&x_axis_points(&ex(Real::ratio(1, 3))).unwrap()).len(), 1);
        assert_eq!(intersections(&x_axis_points(&ex(Real::int(1))).unwrap()).len(), 2);
    }

    #[test]
    fn circle_has_no_intersections() {
        let circle = Chain::complex([(1, Real::int(1))]).unwrap();
        let pts = x_axis_points(&circle).unwrap();
        assert!(intersections(&pts).is_empty());
        assert!(pts
            .iter()
            .all(|p| matches!(p.classification, AxisClass::SmoothVertical | AxisClass::SmoothHorizontal)));
        assert!(intersections(&y_axis_points(&circle).unwrap()).is_empty());
    }

    #[test]
    fn y_axis_requirements() {
        assert_eq!(y_axis_points(&ex(Real::int(1))), Err(AxisError::NotAllOdd));
        let flat = Chain::new(vec![Term::new(1, Real::int(1), Real::int(0))]).unwrap();
        assert_eq!(x_axis_points(&flat), Err(AxisError::DegenerateChain));
        let only_c1 = Chain::new(vec![
            Term::complex(1, Real::int(1)),
            Term::new(3, Real::int(0), Real::int(1)),
        ])
        .unwrap();
        assert!(intersections(&y_axis_points(&only_c1).unwrap()).is_empty());
    }

    #[test]
    fn odd_chain_has_mirror_pairs_on_y_axis() {
        let ch = Chain::complex([(1, Real::int(1)), (7, Real::int(1))]).unwrap();
        let pts = y_axis_points(&ch).unwrap();
        let hits = intersections(&pts);
        assert!(!hits.is_empty() && hits.len().is_multiple_of(2));
        for p in &hits {
            assert!(hits.iter().any(|q| (q.location.y + p.location.y).abs() < 1e-12));
        }
    }

    #[test]
    fn singular_points_of_examples() {
        let s = general_singular_points(&ex(Real::ratio(-2, 3))).unwrap();
        assert_eq!(s.len(), 1);
        assert!((s[0].point.x - 1.0 / 3.0).abs() < 1e-12 && s[0].point.y.abs() < 1e-12);
        assert!(general_singular_points(&ex(Real::int(1))).unwrap().is_empty());
        let cardioid = Chain::complex([(1, Real::int(2)), (2, Real::int(-1))]).unwrap();
        let s = general_singular_points(&cardioid).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s[0].t.abs() < 1e-9 && (s[0].point.x - 1.0).abs() < 1e-12);
    }

    #[test]
    fn nephroid_singular_points_are_found_with_float_coefficients() {
        let neph = Chain::complex([(1, Real::Approx(3.0)), (3, Real::Approx(-1.0))]).unwrap();
        let s = general_singular_points(&neph).unwrap();
        assert_eq!(s.len(), 2);
    }

    fn arb_odd_or_even_chain() -> impl Strategy<Value = Chain> {
        (1i64..6, 2i64..9, -20i64..=20, -20i64..=20).prop_filter_map("invalid", |(m, l, c, d)| {
            if c == 0 || l <= m {
                return None;
            }
            Chain::new(vec![
                Term::complex(m, Real::int(1)),
                Term::new(l, Real::ratio(c, 10), Real::ratio(d, 10)),
            ])
            .ok()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn axis_points_lie_on_the_axis(ch in arb_odd_or_even_chain()) {
            let scale = ch.amplitude();
            for p in x_axis_points(&ch).unwrap() {
                prop_assert!(ch.eval(p.t1).y.abs() < 1e-9 * scale);
                let a = ch.eval(p.t1);
                let b = ch.eval(p.t2);
                prop_assert!(a.distance(b) < 1e-9 * scale);
                let (class, _) = classify(&ch, p.t1, p.endpoint);
                if p.classification == AxisClass::SelfIntersection {
                    prop_assert_eq!(class, AxisClass::SelfIntersection);
                }
            }
            if ch.all_odd() {
                for p in y_axis_points(&ch).unwrap() {
                    prop_assert!(ch.eval(p.t1).x.abs() < 1e-9 * scale);
                    prop_assert!(ch.eval(p.t1).distance(ch.eval(p.t2)) < 1e-9 * scale);
                }
            }
        }

        #[test]
        fn singular_axis_points_are_general_singular_points(ch in arb_odd_or_even_chain()) {
            let general = general_singular_points(&ch).unwrap();
            for p in x_axis_points(&ch).unwrap() {
                if p.classification == AxisClass::Singular {
                    prop_assert!(general.iter().any(|s| s.point.distance(p.location) < 1e-9 * ch.amplitude().max(1.0)));
                }
            }
        }
    }
}
