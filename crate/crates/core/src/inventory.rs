// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! The full planar feature inventory of a chain.
//!
//! Two-member subclass chains go through [`TwoChain`] and get complete module
//! classes. Other chains combine the axis search, the singular-point
//! elimination and, optionally, oracle-seeded off-axis crossings.

use alloc::vec::Vec;
use core::fmt;

use crate::axis_analysis::{
    general_singular_points, x_axis_points, y_axis_points, Axis, AxisClass, AxisError, AxisPoint,
};
use crate::chain::Chain;
use crate::feature::{CurveFeature, FeatureKind, Provenance, Tag};
use crate::oracle::{self, OracleConfig, PlaneCurve};
use crate::two_chain::{TwoChain, TwoChainError};

#[derive(Clone, Debug, PartialEq)]
pub enum AnalysisError {
    Axis(AxisError),
    TwoChain(TwoChainError),
}

impl fmt::Display for AnalysisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalysisError::Axis(e) => e.fmt(f),
            AnalysisError::TwoChain(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for AnalysisError {}

impl From<AxisError> for AnalysisError {
    fn from(e: AxisError) -> Self {
        AnalysisError::Axis(e)
    }
}

impl From<TwoChainError> for AnalysisError {
    fn from(e: TwoChainError) -> Self {
        match e {
            TwoChainError::Axis(e) => AnalysisError::Axis(e),
            e => AnalysisError::TwoChain(e),
        }
    }
}

/// Every feature of `chain`, with oracle fallback for off-axis crossings.
pub fn analyze_chain(chain: &Chain) -> Result<Vec<CurveFeature>, AnalysisError> {
    analyze_chain_with(chain, Some(&OracleConfig::default()))
}

/// As [`analyze_chain`]; `None` restricts the result to analytic features.
pub fn analyze_chain_with(
    chain: &Chain,
    oracle_cfg: Option<&OracleConfig>,
) -> Result<Vec<CurveFeature>, AnalysisError> {
    if let Some(tc) = TwoChain::from_chain(chain) {
        return Ok(tc.features_with(oracle_cfg)?);
    }

    let scale = chain.scale().max(1.0);
    let tol = 1e-7 * scale;
    let mut out: Vec<CurveFeature> = Vec::new();
    let mut axis: Vec<AxisPoint> = Vec::new();
    match x_axis_points(chain) {
        Ok(p) => axis.extend(p),
        Err(AxisError::DegenerateChain) => {}
        Err(e) => return Err(e.into()),
    }
    if chain.all_odd() {
        match y_axis_points(chain) {
            Ok(p) => axis.extend(p),
            Err(AxisError::DegenerateChain) => {}
            Err(e) => return Err(e.into()),
        }
    }
    for p in axis.iter().filter(|p| p.classification == AxisClass::SelfIntersection) {
        if out.iter().any(|f| f.xy().distance(p.location) <= tol) {
            continue;
        }
        let tag = match p.axis {
            Axis::X => Tag::OnXAxis,
            Axis::Y => Tag::OnYAxis,
        };
        let mut f = CurveFeature::planar(FeatureKind::SelfIntersection, p.location, alloc::vec![p.t1, p.t2])
            .with_tags(&[tag]);
        if p.suspected_multiple {
            f = f.with_tags(&[Tag::SuspectedMultipleRoot]);
        }
        out.push(f);
    }
    for s in general_singular_points(chain)? {
        let dup = out
            .iter()
            .any(|f| f.kind == FeatureKind::Singular && f.xy().distance(s.point) <= tol);
        if !dup {
            out.push(CurveFeature::planar(FeatureKind::Singular, s.point, alloc::vec![s.t]));
        }
    }
    if let Some(cfg) = oracle_cfg {
        let (crossings, _) = oracle::find_self_intersections(chain, cfg);
        let near = 1e-6 * scale;
        for c in crossings {
            let known = out
                .iter()
                .any(|f| f.kind == FeatureKind::SelfIntersection && f.xy().distance(c.point) <= near);
            if !known {
                let mut f = CurveFeature::planar(FeatureKind::SelfIntersection, c.point, c.params.clone());
                f.provenance = Provenance::OracleSeeded;
                out.push(f);
            }
        }
    }
    out.sort_by(|a, b| {
        a.kind
            .cmp(&b.kind)
            .then(a.point[0].total_cmp(&b.point[0]))
            .then(a.point[1].total_cmp(&b.point[1]))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::Term;
    use crate::real::Real;

    #[test]
    fn two_chain_path() {
        let ch = Chain::complex([(2, Real::int(1)), (3, Real::ratio(-2, 3))]).unwrap();
        let f = analyze_chain(&ch).unwrap();
        let si: Vec<_> = f.iter().filter(|f| f.kind == FeatureKind::SelfIntersection).collect();
        assert_eq!(si.len(), 1);
        assert_eq!(f.iter().filter(|f| f.kind == FeatureKind::Singular).count(), 1);
    }

    #[test]
    fn general_path_matches_oracle() {
        // three members, not in the complex subclass
        let ch = Chain::new(alloc::vec![
            Term::new(1, Real::int(1), Real::int(1)),
            Term::new(3, Real::ratio(1, 2), Real::ratio(1, 3)),
            Term::new(5, Real::ratio(1, 4), Real::ratio(1, 4)),
        ])
        .unwrap();
        let f = analyze_chain(&ch).unwrap();
        let report = oracle::analyze(&ch, &OracleConfig::default());
        let diff = oracle::verify_feature_set(&f, &report, 1e-6);
        assert!(diff.is_empty(), "{diff:?}");
    }
}
