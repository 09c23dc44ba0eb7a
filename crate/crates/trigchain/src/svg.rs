// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Deterministic SVG 1.1 plots of a sampled curve with its features.
//!
//! The view box is the bounding box of the curve and the features, padded by
//! 5% on every side, mapped onto an 800 px wide canvas with `y` pointing up.
//! Coordinates are printed with three decimals, so equal input gives equal
//! bytes.

use std::fmt::Write;

use trigchain_core::{CurveFeature, FeatureKind, Vec2};

const WIDTH: f64 = 800.0;
const PAD: f64 = 0.05;
const MARKER: f64 = 5.0;

struct Frame {
    x0: f64,
    y1: f64,
    k: f64,
    height: f64,
}

impl Frame {
    fn fit(points: impl Iterator<Item = Vec2>) -> Frame {
        let (mut lo, mut hi) = (Vec2::new(f64::INFINITY, f64::INFINITY), Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY));
        for p in points.filter(|p| p.x.is_finite() && p.y.is_finite()) {
            lo = Vec2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Vec2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        if lo.x > hi.x {
            lo = Vec2::new(-1.0, -1.0);
            hi = Vec2::new(1.0, 1.0);
        }
        let extent = (hi.x - lo.x).max(hi.y - lo.y).max(1e-12);
        let w = (hi.x - lo.x).max(extent * 1e-3);
        let h = (hi.y - lo.y).max(extent * 1e-3);
        let (px, py) = (PAD * w, PAD * h);
        let (w, h) = (w + 2.0 * px, h + 2.0 * py);
        let k = WIDTH / w;
        Frame {
            x0: lo.x - px,
            y1: hi.y + py,
            k,
            height: (h * k).ceil(),
        }
    }

    fn map(&self, p: Vec2) -> (String, String) {
        (num((p.x - self.x0) * self.k), num((self.y1 - p.y) * self.k))
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_owned()
    } else {
        s
    }
}

/// CSS class and color of the marker for `kind`.
fn style(kind: FeatureKind) -> (&'static str, &'static str) {
    match kind {
        FeatureKind::SelfIntersection => ("self-intersection", "#d62728"),
        FeatureKind::Singular => ("singular", "#1f77b4"),
        FeatureKind::FoldPhiDot => ("fold-phi-dot", "#2ca02c"),
        FeatureKind::FoldPsiDot => ("fold-psi-dot", "#9467bd"),
        FeatureKind::Zero => ("zero", "#000000"),
        FeatureKind::TangentialContact => ("tangential-contact", "#ff7f0e"),
        FeatureKind::ProjectionSelfIntersection => ("projection-self-intersection", "#d62728"),
        FeatureKind::SpaceSelfIntersection => ("space-self-intersection", "#8c564b"),
        FeatureKind::SpaceSingular => ("space-singular", "#17becf"),
    }
}

fn marker(out: &mut String, kind: FeatureKind, x: f64, y: f64) {
    let (class, color) = style(kind);
    let r = MARKER;
    let p = |dx: f64, dy: f64| format!("{},{}", num(x + dx), num(y + dy));
    let body = match kind {
        FeatureKind::SelfIntersection | FeatureKind::ProjectionSelfIntersection => {
            format!(r#"<circle cx="{}" cy="{}" r="{}""#, num(x), num(y), num(r))
        }
        FeatureKind::Singular | FeatureKind::SpaceSingular => {
            format!(r#"<polygon points="{} {} {}""#, p(0.0, -r), p(r, r), p(-r, r))
        }
        FeatureKind::FoldPhiDot => format!(
            r#"<rect x="{}" y="{}" width="{}" height="{}""#,
            num(x - r),
            num(y - r),
            num(2.0 * r),
            num(2.0 * r)
        ),
        FeatureKind::FoldPsiDot => {
            format!(r#"<polygon points="{} {} {} {}""#, p(0.0, -r), p(r, 0.0), p(0.0, r), p(-r, 0.0))
        }
        FeatureKind::Zero => format!(
            r#"<path d="M{} L{} M{} L{}""#,
            p(-r, -r),
            p(r, r),
            p(-r, r),
            p(r, -r)
        ),
        FeatureKind::TangentialContact => format!(
            r#"<circle cx="{}" cy="{}" r="{}" stroke-dasharray="2,2""#,
            num(x),
            num(y),
            num(r)
        ),
        FeatureKind::SpaceSelfIntersection => format!(
            r#"<polygon points="{} {} {} {}""#,
            p(-r, -r),
            p(r, r),
            p(r, -r),
            p(-r, r)
        ),
    };
    writeln!(out, r#"  {body} class="{class}" fill="none" stroke="{color}" stroke-width="1.5"/>"#).unwrap();
}

/// An SVG document showing the closed polyline through `samples` and one
/// marker per feature.
pub fn render(samples: &[Vec2], features: &[CurveFeature]) -> String {
    let frame = Frame::fit(samples.iter().copied().chain(features.iter().map(CurveFeature::xy)));
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = WIDTH,
        h = frame.height
    )
    .unwrap();
    writeln!(out, r##"  <rect width="100%" height="100%" fill="#ffffff"/>"##).unwrap();
    if !samples.is_empty() {
        out.push_str("  <path class=\"curve\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\" d=\"");
        for (i, p) in samples.iter().enumerate() {
            let (x, y) = frame.map(*p);
            let _ = write!(out, "{}{x},{y}", if i == 0 { "M" } else { " L" });
        }
        out.push_str("\"/>\n");
    }
    for f in features {
        let p = f.xy();
        marker(&mut out, f.kind, (p.x - frame.x0) * frame.k, (frame.y1 - p.y) * frame.k);
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle() -> Vec<Vec2> {
        (0..=64).map(|k| Vec2::from_angle(k as f64 * std::f64::consts::TAU / 64.0)).collect()
    }

    #[test]
    fn frame_is_padded() {
        let f = Frame::fit(circle().into_iter());
        assert!((f.x0 + 1.1).abs() < 1e-12 && (f.y1 - 1.1).abs() < 1e-12);
        assert_eq!(f.height, 800.0);
        assert_eq!(f.map(Vec2::new(-1.0, 1.0)), ("36.364".into(), "36.364".into()));
    }

    #[test]
    fn markers_by_kind() {
        let feats = vec![
            CurveFeature::planar(FeatureKind::SelfIntersection, Vec2::new(0.0, 0.0), vec![]),
            CurveFeature::planar(FeatureKind::Singular, Vec2::new(1.0, 0.0), vec![]),
            CurveFeature::planar(FeatureKind::FoldPsiDot, Vec2::new(0.0, 1.0), vec![]),
        ];
        let a = render(&circle(), &feats);
        assert_eq!(a, render(&circle(), &feats));
        assert!(a.contains("<circle") && a.contains("class=\"singular\"") && a.contains("class=\"fold-psi-dot\""));
        assert!(a.starts_with("<?xml") && a.ends_with("</svg>\n"));
    }
}
