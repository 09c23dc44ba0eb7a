// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! The `CurveFeatureReport` JSON document.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use trigchain_core::oracle::{Crossing, FeatureDiff, OracleReport};
use trigchain_core::CurveFeature;

use crate::numfmt;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CurveFeatureReport {
    /// Whatever describes the curve: a chain, a two-chain, a knot.
    pub curve: Value,
    pub features: Vec<CurveFeature>,
    /// Subcommand-specific facts such as cusp counts or quadric residuals.
    #[serde(default, skip_serializing_if = "Map::is_empty")]
    pub details: Map<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_diff: Option<FeatureDiff>,
}

impl CurveFeatureReport {
    pub fn new(curve: Value, features: Vec<CurveFeature>) -> Self {
        CurveFeatureReport {
            curve,
            features,
            details: Map::new(),
            oracle: None,
            oracle_diff: None,
        }
    }

    pub fn detail(mut self, key: &str, value: impl Serialize) -> Self {
        self.details.insert(key.to_owned(), to_value(&value));
        self
    }

    pub fn verified(&self) -> bool {
        self.oracle_diff.as_ref().is_none_or(FeatureDiff::is_empty)
    }
}

/// Serializes with every float rounded to 15 significant digits.
pub fn to_value(v: &impl Serialize) -> Value {
    let mut value = serde_json::to_value(v).expect("report values serialize");
    numfmt::normalize(&mut value);
    value
}

pub fn to_json_pretty(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(&to_value(v)).expect("JSON values serialize")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleCrossing {
    pub t: f64,
    pub s: f64,
    pub point: [f64; 2],
    pub tangent_angle: f64,
}

impl From<&Crossing> for OracleCrossing {
    fn from(c: &Crossing) -> Self {
        OracleCrossing {
            t: c.t,
            s: c.s,
            point: [c.point.x, c.point.y],
            tangent_angle: c.tangent_angle,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleSingularPoint {
    pub t: f64,
    pub point: [f64; 2],
}

/// The raw numeric findings of an oracle run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleSummary {
    pub n_samples: usize,
    pub intersections: Vec<OracleCrossing>,
    /// Contacts with parallel tangents, which are not self-intersections.
    pub tangential: Vec<OracleCrossing>,
    pub singular: Vec<OracleSingularPoint>,
}

impl OracleSummary {
    pub fn new(report: &OracleReport, n_samples: usize) -> Self {
        OracleSummary {
            n_samples,
            intersections: report.intersections.iter().map(Into::into).collect(),
            tangential: report.tangential.iter().map(Into::into).collect(),
            singular: report
                .singular
                .iter()
                .map(|s| OracleSingularPoint { t: s.t, point: [s.point.x, s.point.y] })
                .collect(),
        }
    }
}
