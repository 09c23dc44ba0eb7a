// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Boundary curves of the spectrum of `S = Σ cₖ J^{iαₖ}`.
//!
//! With `N` the least common denominator of the `αₖ` and `mₖ = αₖN`, the
//! spectrum is bounded by the two chains
//!
//! ```text
//! f₁(t) = Σ cₖ e^{mₖπ/(2N)} e^{imₖt},   f₂(t) = Σ cₖ e^{−mₖπ/(2N)} e^{imₖt}
//! ```
//!
//! which are then analyzed like any other chain.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::chain::{Chain, ChainError, Term};
use crate::feature::CurveFeature;
use crate::inventory::{analyze_chain_with, AnalysisError};
use crate::oracle::OracleConfig;
use crate::real::{parse_rational, Real};

// std, when linked, shadows these with its inherent float methods.
#[allow(unused_imports)]
use num_traits::Float;

#[derive(Clone, Debug, PartialEq)]
pub enum SpectralError {
    Empty,
    /// `α` must be an exact rational.
    NonRationalAlpha,
    DuplicateAlpha,
    /// Every `α` is zero, so `S` is a multiple of the identity.
    IdentityOperator,
    Parse,
    Chain(ChainError),
    Analysis(AnalysisError),
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::Empty => f.write_str("operator has no terms"),
            SpectralError::NonRationalAlpha => f.write_str("every alpha must be an exact rational"),
            SpectralError::DuplicateAlpha => f.write_str("alpha values must be distinct"),
            SpectralError::IdentityOperator => {
                f.write_str("all alpha are zero: the operator is a multiple of the identity")
            }
            SpectralError::Parse => f.write_str("expected terms of the form c:alpha separated by commas"),
            SpectralError::Chain(e) => e.fmt(f),
            SpectralError::Analysis(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for SpectralError {}

#[derive(Clone, Debug, PartialEq)]
pub struct OperatorSpec {
    terms: Vec<(Real, BigRational)>,
    denominator: u64,
    exponents: Vec<i64>,
}

impl OperatorSpec {
    pub fn new(terms: Vec<(Real, Real)>) -> Result<Self, SpectralError> {
        if terms.is_empty() {
            return Err(SpectralError::Empty);
        }
        let mut exact = Vec::with_capacity(terms.len());
        for (c, alpha) in terms {
            let Real::Exact(alpha) = alpha else {
                return Err(SpectralError::NonRationalAlpha);
            };
            if exact.iter().any(|(_, a)| *a == alpha) {
                return Err(SpectralError::DuplicateAlpha);
            }
            exact.push((c, alpha));
        }
        let n = exact
            .iter()
            .fold(BigInt::one(), |acc, (_, a)| acc.lcm(a.denom()));
        let denominator = n.to_u64().ok_or(SpectralError::NonRationalAlpha)?;
        let exponents = exact
            .iter()
            .map(|(_, a)| (a * BigRational::from_integer(n.clone())).to_integer().to_i64())
            .collect::<Option<Vec<_>>>()
            .ok_or(SpectralError::NonRationalAlpha)?;
        Ok(OperatorSpec { terms: exact, denominator, exponents })
    }

    /// Parses `"c:alpha,c:alpha,…"` with rational or decimal `c` and rational `alpha`.
    pub fn parse(s: &str) -> Result<Self, SpectralError> {
        let mut terms = Vec::new();
        for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            let (c, alpha) = item.split_once(':').ok_or(SpectralError::Parse)?;
            let c: Real = c.trim().parse().map_err(|_| SpectralError::Parse)?;
            let alpha = parse_rational(alpha.trim()).ok_or(SpectralError::NonRationalAlpha)?;
            terms.push((c, Real::Exact(alpha)));
        }
        OperatorSpec::new(terms)
    }

    pub fn terms(&self) -> &[(Real, BigRational)] {
        &self.terms
    }

    /// `N`, the least common denominator of the `αₖ`.
    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    /// `mₖ = αₖ N`.
    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryChains {
    pub f1: Chain,
    pub f2: Chain,
    /// Common factor divided out of the exponents; the chains are traced in
    /// `s = g·t`.
    pub exponent_gcd: u64,
}

pub fn boundary_chains(spec: &OperatorSpec) -> Result<BoundaryChains, SpectralError> {
    if spec.exponents.iter().all(|m| *m == 0) {
        return Err(SpectralError::IdentityOperator);
    }
    let n = spec.denominator as f64;
    let build = |sign: f64| {
        let terms = spec
            .terms
            .iter()
            .zip(&spec.exponents)
            .map(|((c, _), &m)| {
                let w = if m == 0 {
                    c.clone()
                } else {
                    Real::Approx(c.to_f64() * (sign * m as f64 * PI / (2.0 * n)).exp())
                };
                Term::complex(m, w)
            })
            .collect();
        Chain::normalized(terms).map_err(SpectralError::Chain)
    };
    let (f1, g) = build(1.0)?;
    let (f2, _) = build(-1.0)?;
    Ok(BoundaryChains { f1, f2, exponent_gcd: g })
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryAnalysis {
    pub chains: BoundaryChains,
    pub f1_features: Vec<CurveFeature>,
    pub f2_features: Vec<CurveFeature>,
}

pub fn boundary_analysis(
    spec: &OperatorSpec,
    oracle_cfg: Option<&OracleConfig>,
) -> Result<BoundaryAnalysis, SpectralError> {
    let chains = boundary_chains(spec)?;
    let analyze = |c: &Chain| analyze_chain_with(c, oracle_cfg).map_err(SpectralError::Analysis);
    Ok(BoundaryAnalysis {
        f1_features: analyze(&chains.f1)?,
        f2_features: analyze(&chains.f2)?,
        chains,
    })
}

/// Annulus radii `(e^{−π|α|/2}, e^{π|α|/2})` for a single term `J^{iα}`.
pub fn single_term_annulus(alpha: &BigRational) -> (f64, f64) {
    let a = crate::real::rational_to_f64(&alpha.abs()) * PI / 2.0;
    ((-a).exp(), a.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::feature::FeatureKind;
    use core::f64::consts::TAU;

    #[test]
    fn example_operator() {
        let spec = OperatorSpec::parse("2:1, 1:2").unwrap();
        assert_eq!(spec.denominator(), 1);
        let b = boundary_chains(&spec).unwrap();
        let t1 = b.f1.terms();
        assert_eq!((t1[0].m, t1[1].m), (1, 2));
        assert!((t1[0].c.to_f64() - 2.0 * (PI / 2.0).exp()).abs() < 1e-12);
        assert!((t1[1].c.to_f64() - PI.exp()).abs() < 1e-12);
        let t2 = b.f2.terms();
        assert!((t2[0].c.to_f64() - 2.0 * (-PI / 2.0).exp()).abs() < 1e-12);
        assert!((t2[1].c.to_f64() - (-PI).exp()).abs() < 1e-12);
        for c in [&b.f1, &b.f2] {
            assert!(c.eval(0.0).distance(c.eval(TAU)) < 1e-12);
        }
    }

    #[test]
    fn single_term_circles() {
        let spec = OperatorSpec::parse("1:1/2").unwrap();
        assert_eq!(spec.denominator(), 2);
        let b = boundary_chains(&spec).unwrap();
        for i in 0..100 {
            let t = i as f64 * 0.0628;
            assert!((b.f1.eval(t).hypot() - (PI / 4.0).exp()).abs() < 1e-12);
            assert!((b.f2.eval(t).hypot() - (-PI / 4.0).exp()).abs() < 1e-12);
        }
        let (lo, hi) = single_term_annulus(&BigRational::new(1.into(), 2.into()));
        assert!((hi - (PI / 4.0).exp()).abs() < 1e-15 && (lo * hi - 1.0).abs() < 1e-15);
        let a = boundary_analysis(&spec, None).unwrap();
        assert!(a.f1_features.iter().all(|f| f.kind != FeatureKind::SelfIntersection));
    }

    #[test]
    fn rejects() {
        let id = OperatorSpec::parse("3:0").unwrap();
        assert_eq!(boundary_chains(&id), Err(SpectralError::IdentityOperator));
        assert_eq!(OperatorSpec::parse("1:0.5"), OperatorSpec::parse("1:1/2"));
        assert_eq!(OperatorSpec::parse("1:pi"), Err(SpectralError::NonRationalAlpha));
        assert_eq!(OperatorSpec::parse("1:1,2:1"), Err(SpectralError::DuplicateAlpha));
        assert_eq!(OperatorSpec::parse("1"), Err(SpectralError::Parse));
        assert_eq!(OperatorSpec::new(alloc::vec![(Real::int(1), Real::Approx(0.5))]), Err(SpectralError::NonRationalAlpha));
    }

    #[test]
    fn exponents_are_normalized() {
        let spec = OperatorSpec::parse("1:2/3,1:4/3").unwrap();
        assert_eq!(spec.exponents(), &[2, 4]);
        let b = boundary_chains(&spec).unwrap();
        assert_eq!(b.exponent_gcd, 2);
        assert_eq!(b.f1.terms()[1].m, 2);
        assert!((b.f1.terms()[0].c.to_f64() - (PI / 3.0).exp()).abs() < 1e-12);
    }
}
