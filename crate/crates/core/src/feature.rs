// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Classified feature points shared by every analysis.

use alloc::vec::Vec;

use crate::geom::{Vec2, Vec3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub enum FeatureKind {
    SelfIntersection,
    Singular,
    FoldPhiDot,
    FoldPsiDot,
    Zero,
    /// Two branches meeting with a common tangent line.
    TangentialContact,
    ProjectionSelfIntersection,
    SpaceSelfIntersection,
    SpaceSingular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub enum Tag {
    OnXAxis,
    OnYAxis,
    SmoothVertical,
    SmoothHorizontal,
    ReturnPointFirstKind,
    DoubleSingularity,
    /// A zero through which at least two branches pass with distinct tangents.
    MultiplePoint,
    SuspectedMultipleRoot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub enum Provenance {
    Analytic,
    OracleSeeded,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub struct CurveFeature {
    pub kind: FeatureKind,
    /// `[x, y]` or `[x, y, z]`.
    pub point: Vec<f64>,
    /// Parameter preimages in `[0, period)`.
    pub params: Vec<f64>,
    pub orbit_id: Option<usize>,
    pub classification: Vec<Tag>,
    pub provenance: Provenance,
}

impl CurveFeature {
    pub fn planar(kind: FeatureKind, p: Vec2, params: Vec<f64>) -> Self {
        CurveFeature {
            kind,
            point: alloc::vec![p.x, p.y],
            params,
            orbit_id: None,
            classification: Vec::new(),
            provenance: Provenance::Analytic,
        }
    }

    pub fn spatial(kind: FeatureKind, p: Vec3, params: Vec<f64>) -> Self {
        CurveFeature {
            point: alloc::vec![p.x, p.y, p.z],
            ..CurveFeature::planar(kind, p.xy(), params)
        }
    }

    pub fn with_tags(mut self, tags: &[Tag]) -> Self {
        for &t in tags {
            if !self.classification.contains(&t) {
                self.classification.push(t);
            }
        }
        self
    }

    pub fn in_orbit(mut self, id: usize) -> Self {
        self.orbit_id = Some(id);
        self
    }

    pub fn xy(&self) -> Vec2 {
        Vec2::new(self.point[0], self.point[1])
    }

    pub fn has_tag(&self, tag: Tag) -> bool {
        self.classification.contains(&tag)
    }
}
