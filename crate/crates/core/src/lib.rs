// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Analysis of periodic parametric curves of the form
//!
//! ```text
//! x = Σ cₖ cos(mₖ t),   y = Σ dₖ sin(mₖ t)
//! ```
//!
//! with coprime integer frequencies `mₖ` (the *n-member chains*).
//!
//! The crate reduces `sin(ℓt)` and `cos(ℓt)` to exact polynomials in `sin²t`,
//! assembles the canonical polynomial forms of a chain, and uses them to find
//! self-intersection points on the symmetry axes, local singular points and
//! (for 2-member chains) complete module classes of features under the
//! rotation group of the curve. Classical rolling-circle curves, periodic
//! helices, torus knots and spectral boundary curves are converted into the
//! same machinery.
//!
//! Every analytic result can be cross-checked with [`oracle`], an independent
//! brute-force detector that only needs point and velocity evaluation.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod axis_analysis;
pub mod chain;
pub mod classical;
pub mod feature;
pub mod geom;
pub mod inventory;
pub mod oracle;
pub mod real;
pub mod rootfind;
pub mod space_curves;
pub mod spectral;
pub mod trigpoly;
pub mod two_chain;

pub use chain::{Chain, ChainError, Term};
pub use geom::{Vec2, Vec3};
pub use real::Real;
pub use trigpoly::Polynomial;
pub use two_chain::TwoChain;
pub use feature::{CurveFeature, FeatureKind, Provenance, Tag};
