// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! The n-member chain `x = Σ cₖ cos(mₖ t)`, `y = Σ dₖ sin(mₖ t)`.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::geom::Vec2;
use crate::real::Real;

// std, when linked, shadows these with its inherent float methods.
#[allow(unused_imports)]
use num_traits::Float;

/// One member `(m, c, d)` contributing `c cos(mt)` to `x` and `d sin(mt)` to `y`.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Term {
    pub m: i64,
    pub c: Real,
    pub d: Real,
}

impl Term {
    pub fn new(m: i64, c: Real, d: Real) -> Self {
        Term { m, c, d }
    }

    /// `c = d`, i.e. the member `c·e^{imt}`.
    pub fn complex(m: i64, c: Real) -> Self {
        Term { m, d: c.clone(), c }
    }

    pub fn is_active(&self) -> bool {
        !(self.c.is_zero() && self.d.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainError {
    /// No term with a nonzero coefficient.
    Empty,
    DuplicateExponent(i64),
    /// The active exponents share the factor `g > 1` (or are all zero, `g = 0`).
    NotCoprime(u64),
    NonFinite,
}

impl fmt::Display for ChainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainError::Empty => f.write_str("chain has no term with a nonzero coefficient"),
            ChainError::DuplicateExponent(m) => write!(f, "exponent {m} appears more than once"),
            ChainError::NotCoprime(0) => f.write_str("all active exponents are zero"),
            ChainError::NotCoprime(g) => {
                write!(f, "active exponents share the common factor {g}")
            }
            ChainError::NonFinite => f.write_str("coefficients must be finite"),
        }
    }
}

impl core::error::Error for ChainError {}

/// Which symmetry axes a chain is guaranteed to have.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    /// Always true: `(x(−t), y(−t)) = (x(t), −y(t))`.
    pub about_x_axis: bool,
    /// True iff every active exponent is odd.
    pub about_y_axis: bool,
}

/// A validated n-member chain.
///
/// Active exponents are pairwise distinct and coprime.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(try_from = "ChainWire", into = "ChainWire")
)]
pub struct Chain {
    terms: Vec<Term>,
    numeric: Vec<(f64, f64, f64)>,
}

#[cfg(feature = "serde")]
#[derive(serde::Serialize, serde::Deserialize)]
struct ChainWire {
    terms: Vec<Term>,
}

#[cfg(feature = "serde")]
impl TryFrom<ChainWire> for Chain {
    type Error = ChainError;
    fn try_from(w: ChainWire) -> Result<Self, ChainError> {
        Chain::new(w.terms)
    }
}

#[cfg(feature = "serde")]
impl From<Chain> for ChainWire {
    fn from(c: Chain) -> Self {
        ChainWire { terms: c.terms }
    }
}

fn exponent_gcd<'a>(ms: impl Iterator<Item = &'a i64>) -> u64 {
    ms.fold(0u64, |g, m| g.gcd(&m.unsigned_abs()))
}

impl Chain {
    pub fn new(terms: Vec<Term>) -> Result<Self, ChainError> {
        if terms.iter().any(|t| !t.c.is_finite() || !t.d.is_finite()) {
            return Err(ChainError::NonFinite);
        }
        for (i, t) in terms.iter().enumerate() {
            if terms[..i].iter().any(|s| s.m == t.m) {
                return Err(ChainError::DuplicateExponent(t.m));
            }
        }
        if !terms.iter().any(Term::is_active) {
            return Err(ChainError::Empty);
        }
        let g = exponent_gcd(terms.iter().filter(|t| t.is_active()).map(|t| &t.m));
        if g != 1 {
            return Err(ChainError::NotCoprime(g));
        }
        let numeric = terms
            .iter()
            .filter(|t| t.is_active())
            .map(|t| (t.m as f64, t.c.to_f64(), t.d.to_f64()))
            .collect();
        Ok(Chain { terms, numeric })
    }

    /// Divides the exponents by their common factor `g` and returns `(chain, g)`.
    ///
    /// The result traces the same curve: its parameter `s` corresponds to `t = s/g`.
    pub fn normalized(terms: Vec<Term>) -> Result<(Self, u64), ChainError> {
        let g = exponent_gcd(terms.iter().filter(|t| t.is_active()).map(|t| &t.m));
        if g <= 1 {
            return Chain::new(terms).map(|c| (c, 1));
        }
        let scaled = terms
            .into_iter()
            .map(|t| Term { m: t.m / g as i64, ..t })
            .collect();
        Chain::new(scaled).map(|c| (c, g))
    }

    /// Subclass chain `Σ cₖ e^{i mₖ t}` from `(m, c)` pairs.
    pub fn complex(terms: impl IntoIterator<Item = (i64, Real)>) -> Result<Self, ChainError> {
        Chain::new(terms.into_iter().map(|(m, c)| Term::complex(m, c)).collect())
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn active_terms(&self) -> impl Iterator<Item = &Term> + '_ {
        self.terms.iter().filter(|t| t.is_active())
    }

    pub fn eval(&self, t: f64) -> Vec2 {
        let (mut x, mut y) = (0.0, 0.0);
        for &(m, c, d) in &self.numeric {
            let (s, co) = (m * t).sin_cos();
            x += c * co;
            y += d * s;
        }
        Vec2::new(x, y)
    }

    pub fn derivative(&self, t: f64) -> Vec2 {
        let (mut x, mut y) = (0.0, 0.0);
        for &(m, c, d) in &self.numeric {
            let (s, co) = (m * t).sin_cos();
            x -= m * c * s;
            y += m * d * co;
        }
        Vec2::new(x, y)
    }

    pub fn second_derivative(&self, t: f64) -> Vec2 {
        let (mut x, mut y) = (0.0, 0.0);
        for &(m, c, d) in &self.numeric {
            let (s, co) = (m * t).sin_cos();
            x -= m * m * c * co;
            y -= m * m * d * s;
        }
        Vec2::new(x, y)
    }

    pub fn symmetry(&self) -> SymmetryReport {
        SymmetryReport {
            about_x_axis: true,
            about_y_axis: self.all_odd(),
        }
    }

    pub fn all_odd(&self) -> bool {
        self.active_terms().all(|t| t.m % 2 != 0)
    }

    /// The coefficients `cₖ` if `cₖ = dₖ` for every term.
    pub fn as_subclass_1_1(&self) -> Option<Vec<Real>> {
        self.terms
            .iter()
            .map(|t| t.c.approx_eq(&t.d).then(|| t.c.clone()))
            .collect()
    }

    /// `Σ (|cₖ| + |dₖ|)`, a bound on the curve's extent.
    pub fn amplitude(&self) -> f64 {
        self.numeric.iter().map(|&(_, c, d)| c.abs() + d.abs()).sum()
    }

    /// `Σ |mₖ| (|cₖ| + |dₖ|)`, a bound on the speed.
    pub fn derivative_scale(&self) -> f64 {
        self.numeric
            .iter()
            .map(|&(m, c, d)| m.abs() * (c.abs() + d.abs()))
            .sum()
    }

    /// True if `ψ ≡ 0`.
    pub fn psi_vanishes(&self) -> bool {
        self.active_terms().all(|t| t.m == 0 || t.d.is_zero())
    }

    /// True if `φ ≡ 0`.
    pub fn phi_vanishes(&self) -> bool {
        self.active_terms().all(|t| t.c.is_zero())
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({}, {}, {})", t.m, t.c, t.d)?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use core::f64::consts::{FRAC_PI_2, PI, TAU};
    use proptest::prelude::*;

    fn example_11_1(c: Real) -> Chain {
        Chain::new(vec![Term::complex(2, Real::int(1)), Term::complex(3, c)]).unwrap()
    }

    #[test]
    fn eval_examples() {
        let ch = example_11_1(Real::ratio(-2, 3));
        let p = ch.eval(0.0);
        assert!((p.x - 1.0 / 3.0).abs() < 1e-15 && p.y == 0.0);
        let v = ch.derivative(0.0);
        assert!(v.hypot() < 1e-15);
        let circle = Chain::complex([(1, Real::int(1))]).unwrap();
        let p = circle.eval(FRAC_PI_2);
        assert!(p.x.abs() < 1e-15 && (p.y - 1.0).abs() < 1e-15);
        assert_eq!(circle.derivative(0.0), Vec2::new(0.0, 1.0));
        let two = Chain::complex([(2, Real::int(1)), (1, Real::int(0))]);
        assert!(two.is_err());
    }

    #[test]
    fn second_derivative_example() {
        let ch = Chain::new(vec![
            Term::complex(2, Real::int(1)),
            Term::complex(1, Real::int(0)),
            Term::complex(3, Real::int(0)),
        ]);
        assert_eq!(ch.unwrap_err(), ChainError::NotCoprime(2));
        let ch = Chain::new(vec![Term::complex(2, Real::int(1)), Term::new(3, Real::int(0), Real::int(1))])
            .unwrap();
        assert_eq!(ch.second_derivative(0.0), Vec2::new(-4.0, 0.0));
    }

    #[test]
    fn validation() {
        assert_eq!(Chain::new(vec![]), Err(ChainError::Empty));
        assert_eq!(
            Chain::new(vec![Term::complex(1, Real::int(1)), Term::complex(1, Real::int(2))]),
            Err(ChainError::DuplicateExponent(1))
        );
        assert_eq!(
            Chain::new(vec![Term::complex(2, Real::int(1)), Term::complex(4, Real::int(1))]),
            Err(ChainError::NotCoprime(2))
        );
        assert_eq!(Chain::new(vec![Term::complex(0, Real::int(1))]), Err(ChainError::NotCoprime(0)));
        let (ch, g) =
            Chain::normalized(vec![Term::complex(2, Real::int(1)), Term::complex(4, Real::int(1))])
                .unwrap();
        assert_eq!(g, 2);
        assert_eq!(ch.terms()[1].m, 2);
        // c = 0 with d ≠ 0 is allowed
        assert!(Chain::new(vec![Term::complex(1, Real::int(1)), Term::new(3, Real::int(0), Real::int(1))]).is_ok());
    }

    #[test]
    fn symmetry_and_subclass() {
        let m17 = Chain::complex([(1, Real::int(1)), (7, Real::int(1))]).unwrap();
        assert!(m17.symmetry().about_y_axis);
        let m23 = example_11_1(Real::int(1));
        assert!(!m23.symmetry().about_y_axis);
        let m16 = Chain::complex([(1, Real::int(1)), (6, Real::int(1))]).unwrap();
        assert!(!m16.symmetry().about_y_axis);
        assert_eq!(
            example_11_1(Real::ratio(1, 3)).as_subclass_1_1(),
            Some(vec![Real::int(1), Real::ratio(1, 3)])
        );
        let mixed = Chain::new(vec![
            Term::complex(1, Real::int(1)),
            Term::new(3, Real::int(2), Real::int(-2)),
        ])
        .unwrap();
        assert_eq!(mixed.as_subclass_1_1(), None);
        let single = Chain::complex([(1, Real::int(5))]).unwrap();
        assert_eq!(single.as_subclass_1_1(), Some(vec![Real::int(5)]));
    }

    fn arb_chain() -> impl Strategy<Value = Chain> {
        proptest::collection::vec((-9i64..=9, -3.0f64..3.0, -3.0f64..3.0), 1..5).prop_filter_map(
            "invalid chain",
            |raw| {
                let mut terms: Vec<Term> = Vec::new();
                for (m, c, d) in raw {
                    if terms.iter().all(|t| t.m != m) {
                        terms.push(Term::new(m, Real::Approx(c), Real::Approx(d)));
                    }
                }
                Chain::new(terms).ok()
            },
        )
    }

    proptest! {
        #[test]
        fn x_axis_symmetry(ch in arb_chain(), t in 0.0..TAU) {
            let a = ch.eval(t);
            let b = ch.eval(-t);
            prop_assert!((a.x - b.x).abs() < 1e-12 && (a.y + b.y).abs() < 1e-12);
            let c = ch.eval(t + TAU);
            prop_assert!(a.distance(c) < 1e-11);
        }

        #[test]
        fn y_axis_symmetry_for_odd_chains(ch in arb_chain(), t in 0.0..TAU) {
            if ch.all_odd() {
                let a = ch.eval(t);
                let b = ch.eval(PI - t);
                prop_assert!((a.x + b.x).abs() < 1e-11 && (a.y - b.y).abs() < 1e-11);
            }
        }

        #[test]
        fn derivatives_match_finite_differences(ch in arb_chain(), t in 0.0..TAU) {
            let h = 1e-6;
            let fd = (ch.eval(t + h) - ch.eval(t - h)) * (0.5 / h);
            let v = ch.derivative(t);
            let scale = ch.derivative_scale().max(1e-300);
            prop_assert!((fd - v).hypot() <= 1e-6 * scale);
            let fd2 = (ch.derivative(t + h) - ch.derivative(t - h)) * (0.5 / h);
            let a = ch.second_derivative(t);
            prop_assert!((fd2 - a).hypot() <= 1e-6 * scale * 10.0);
        }
    }
}
