// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Exact multiple-angle reduction.
//!
//! `sin(ℓx)` and `cos(ℓx)` are written as polynomials in `sin x` and `cos x`:
//!
//! ```text
//! sin((2n+1)x) = Pₙ(sin²x)·sin x        cos((2n+1)x) = (−1)ⁿ Pₙ(cos²x)·cos x
//! sin(2nx)     = Rₙ(sin²x)·sin x·cos x  cos(2nx)     = Gₙ(cos²x)
//! ```
//!
//! The polynomials are generated by exact integer recurrences, and
//! [`canonical_forms`] collects them into the eight polynomials that describe
//! a chain and its derivative in the single variable `u = sin²t`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::chain::Chain;
use crate::real::rational_to_f64;

// std, when linked, shadows these with its inherent float methods.
#[allow(unused_imports)]
use num_traits::Float;

/// Largest recurrence index accepted by [`odd_sin_poly`] and [`even_reduction`].
pub const MAX_INDEX: u32 = 64;

/// Errors from the multiple-angle reductions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrigError {
    /// Recurrence index beyond [`MAX_INDEX`].
    IndexTooLarge(u64),
    /// `even_reduction` needs `n ≥ 1`.
    IndexZero,
}

impl fmt::Display for TrigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrigError::IndexTooLarge(n) => {
                write!(f, "recurrence index {n} exceeds the supported maximum {MAX_INDEX}")
            }
            TrigError::IndexZero => f.write_str("even reduction is defined for n >= 1"),
        }
    }
}

impl core::error::Error for TrigError {}

/// Univariate polynomial with exact rational coefficients, lowest degree first.
///
/// The trailing coefficient is nonzero unless the polynomial is zero, in which
/// case the coefficient list is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

fn rat(i: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(i))
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The polynomial `u`.
    pub fn identity() -> Self {
        Polynomial::from_ints(&[0, 1])
    }

    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// True if every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }

    /// `max |coefficient|`, or `0` for the zero polynomial.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| rational_to_f64(c).abs())
            .fold(0.0, f64::max)
    }

    /// Compensated Horner evaluation: about as accurate as evaluating in
    /// twice the working precision and rounding once.
    pub fn eval_f64(&self, x: f64) -> f64 {
        compensated_horner(&self.to_f64_coeffs(), x)
    }

    pub fn eval_exact(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigRational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `u · p(u)`.
    pub fn shift_up(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigRational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// `p(1 − u)`, expanded exactly with binomial coefficients.
    pub fn compose_one_minus(&self) -> Polynomial {
        let n = self.coeffs.len();
        let mut out = vec![BigRational::zero(); n];
        // row of binomial coefficients C(k, j)
        let mut binom: Vec<BigInt> = Vec::with_capacity(n);
        for (k, a) in self.coeffs.iter().enumerate() {
            binom.push(BigInt::one());
            for j in (1..k).rev() {
                let prev = binom[j - 1].clone();
                binom[j] += prev;
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in binom.iter().enumerate() {
                let term = a * BigRational::from_integer(b.clone());
                if j % 2 == 0 {
                    out[j] += term;
                } else {
                    out[j] -= term;
                }
            }
        }
        Polynomial::new(out)
    }

    /// `p(u²)`.
    pub fn substitute_square(&self) -> Polynomial {
        let mut out = vec![BigRational::zero(); (2 * self.coeffs.len()).saturating_sub(1)];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[2 * k] = c.clone();
        }
        Polynomial::new(out)
    }

    /// `p(1 − u²)`.
    pub fn compose_one_minus_square(&self) -> Polynomial {
        self.compose_one_minus().substitute_square()
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    ///
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dlead = divisor.leading().expect("division by the zero polynomial");
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return (Polynomial::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + ddeg] / dlead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Polynomial::zero(),
        }
    }

    /// Positive rational multiple with coprime integer coefficients.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Polynomial::new(
            ints.into_iter()
                .map(|c| BigRational::from_integer(c / &content))
                .collect(),
        )
    }

    /// Squarefree part `p / gcd(p, p′)` (up to a positive constant).
    pub fn squarefree(&self) -> Polynomial {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            return self.primitive();
        }
        self.div_rem(&g).0.primitive()
    }

    /// Human-readable form in ascending powers, e.g. `3 − 4u + 16u²`.
    pub fn display_in(&self, var: &str) -> String {
        let mut out = String::new();
        if self.is_zero() {
            out.push('0');
            return out;
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    out.push('−');
                }
            } else {
                out.push_str(if neg { " − " } else { " + " });
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                if mag.is_integer() {
                    let _ = write!(out, "{}", mag.numer());
                } else {
                    let _ = write!(out, "({}/{})", mag.numer(), mag.denom());
                }
            }
            if k >= 1 {
                out.push_str(var);
            }
            if k >= 2 {
                push_superscript(&mut out, k);
            }
        }
        out
    }
}

fn push_superscript(out: &mut String, k: usize) {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut digits = Vec::new();
    let mut k = k;
    while k > 0 {
        digits.push(DIGITS[k % 10]);
        k /= 10;
    }
    out.extend(digits.iter().rev());
}

/// Horner evaluation of coefficients given lowest degree first.
#[inline]
pub fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Horner's scheme with error-free transformations of each step.
pub fn compensated_horner(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    let mut err = 0.0;
    for &c in coeffs.iter().rev() {
        let p = acc * x;
        let p_err = acc.mul_add(x, -p);
        let s = p + c;
        let z = s - p;
        let s_err = (p - (s - z)) + (c - z);
        acc = s;
        err = err * x + (p_err + s_err);
    }
    acc + err
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, o: Polynomial) -> Polynomial {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("u"))
    }
}

fn check_index(n: u32) -> Result<(), TrigError> {
    if n > MAX_INDEX {
        Err(TrigError::IndexTooLarge(n as u64))
    } else {
        Ok(())
    }
}

/// `Pₙ` with `sin((2n+1)x) = Pₙ(sin²x)·sin x`.
///
/// Iterates `Pₙ₊₁(u) = Pₙ(u)(1 − 2u) + 2(−1)ⁿ Pₙ(1 − u)(1 − u)` from `P₀ = 1`.
pub fn odd_sin_poly(n: u32) -> Result<Polynomial, TrigError> {
    check_index(n)?;
    let one_minus_2u = Polynomial::from_ints(&[1, -2]);
    let one_minus_u = Polynomial::from_ints(&[1, -1]);
    let mut p = Polynomial::one();
    for k in 0..n {
        let reflected = &p.compose_one_minus() * &one_minus_u;
        let reflected = reflected.scale(&rat(if k % 2 == 0 { 2 } else { -2 }));
        p = &(&p * &one_minus_2u) + &reflected;
    }
    Ok(p)
}

/// `(Rₙ, Gₙ)` with `sin(2nx) = Rₙ(sin²x)·sin x·cos x` and `cos(2nx) = Gₙ(cos²x)`.
///
/// Iterates from `R₁ = 2`, `G₁(u) = 2u − 1`:
///
/// ```text
/// Rₙ₊₁(u) = Rₙ(u)(1 − 2u) + 2Gₙ(1 − u)
/// Gₙ₊₁(u) = −Gₙ(u)(1 − 2u) − 2Rₙ(1 − u)(1 − u)u
/// ```
pub fn even_reduction(n: u32) -> Result<(Polynomial, Polynomial), TrigError> {
    if n == 0 {
        return Err(TrigError::IndexZero);
    }
    check_index(n)?;
    let one_minus_2u = Polynomial::from_ints(&[1, -2]);
    let u_one_minus_u = Polynomial::from_ints(&[0, 1, -1]);
    let mut r = Polynomial::from_ints(&[2]);
    let mut g = Polynomial::from_ints(&[-1, 2]);
    for _ in 1..n {
        let next_r = &(&r * &one_minus_2u) + &g.compose_one_minus().scale(&rat(2));
        let next_g = &(-&(&g * &one_minus_2u))
            - &(&r.compose_one_minus() * &u_one_minus_u).scale(&rat(2));
        r = next_r;
        g = next_g;
    }
    Ok((r, g))
}

/// `f(t) = constant(u) + sin t·sin(u) + cos t·cos(u) + sin t·cos t·sin_cos(u)`
/// with `u = sin²t`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TrigExpansion {
    pub constant: Polynomial,
    pub sin: Polynomial,
    pub cos: Polynomial,
    pub sin_cos: Polynomial,
}

impl TrigExpansion {
    pub fn eval(&self, t: f64) -> f64 {
        let (s, c) = t.sin_cos();
        let u = s * s;
        self.constant.eval_f64(u)
            + s * self.sin.eval_f64(u)
            + c * self.cos.eval_f64(u)
            + s * c * self.sin_cos.eval_f64(u)
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.sin.is_zero() && self.cos.is_zero() && self.sin_cos.is_zero()
    }

    fn negated(self) -> Self {
        TrigExpansion {
            constant: -&self.constant,
            sin: -&self.sin,
            cos: -&self.cos,
            sin_cos: -&self.sin_cos,
        }
    }
}

fn index_for(l: u64) -> Result<u32, TrigError> {
    let n = l / 2;
    if n > MAX_INDEX as u64 {
        Err(TrigError::IndexTooLarge(n))
    } else {
        Ok(n as u32)
    }
}

/// Expansion of `sin(ℓt)` in `u = sin²t`.
pub fn reduce_sin(l: i64) -> Result<TrigExpansion, TrigError> {
    let mag = l.unsigned_abs();
    if mag == 0 {
        return Ok(TrigExpansion::default());
    }
    let n = index_for(mag)?;
    let e = if mag % 2 == 1 {
        TrigExpansion {
            sin: odd_sin_poly(n)?,
            ..Default::default()
        }
    } else {
        TrigExpansion {
            sin_cos: even_reduction(n)?.0,
            ..Default::default()
        }
    };
    Ok(if l < 0 { e.negated() } else { e })
}

/// Expansion of `cos(ℓt)` in `u = sin²t` (`cos²t` is rewritten as `1 − u`).
pub fn reduce_cos(l: i64) -> Result<TrigExpansion, TrigError> {
    let mag = l.unsigned_abs();
    if mag == 0 {
        return Ok(TrigExpansion {
            constant: Polynomial::one(),
            ..Default::default()
        });
    }
    let n = index_for(mag)?;
    Ok(if mag % 2 == 1 {
        let p = odd_sin_poly(n)?.compose_one_minus();
        TrigExpansion {
            cos: if n % 2 == 0 { p } else { -&p },
            ..Default::default()
        }
    } else {
        TrigExpansion {
            constant: even_reduction(n)?.1.compose_one_minus(),
            ..Default::default()
        }
    })
}

/// Polynomial forms of a chain and its derivative, all in `u = sin²t`:
///
/// ```text
/// φ(t) = cos t·Q₁(u) + U₁(u)          φ̇(t) = sin t·[Q₂(u) + cos t·U₂(u)]
/// ψ(t) = sin t·[S₁(u) + cos t·V₁(u)]  ψ̇(t) = cos t·S₂(u) + V₂(u)
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForms {
    pub q1: Polynomial,
    pub u1: Polynomial,
    pub q2: Polynomial,
    pub u2: Polynomial,
    pub s1: Polynomial,
    pub v1: Polynomial,
    pub s2: Polynomial,
    pub v2: Polynomial,
    /// Present iff every active frequency is odd; then `U₁ = U₂ = V₁ = V₂ = 0`.
    pub all_odd: Option<AllOddForms>,
}

/// Reduced forms for chains with only odd frequencies:
/// `φ = cos t·Q₁`, `φ̇ = sin t·Q₂`, `ψ = sin t·S₁`, `ψ̇ = cos t·S₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AllOddForms {
    pub q1: Polynomial,
    pub s1: Polynomial,
    pub q2: Polynomial,
    pub s2: Polynomial,
}

impl CanonicalForms {
    fn parts(t: f64) -> (f64, f64, f64) {
        let (s, c) = t.sin_cos();
        (s, c, s * s)
    }

    pub fn phi(&self, t: f64) -> f64 {
        let (_, c, u) = Self::parts(t);
        c * self.q1.eval_f64(u) + self.u1.eval_f64(u)
    }

    pub fn phi_dot(&self, t: f64) -> f64 {
        let (s, c, u) = Self::parts(t);
        s * (self.q2.eval_f64(u) + c * self.u2.eval_f64(u))
    }

    pub fn psi(&self, t: f64) -> f64 {
        let (s, c, u) = Self::parts(t);
        s * (self.s1.eval_f64(u) + c * self.v1.eval_f64(u))
    }

    pub fn psi_dot(&self, t: f64) -> f64 {
        let (_, c, u) = Self::parts(t);
        c * self.s2.eval_f64(u) + self.v2.eval_f64(u)
    }
}

/// Assembles the canonical forms of `chain` from the multiple-angle reductions.
pub fn canonical_forms(chain: &Chain) -> Result<CanonicalForms, TrigError> {
    let mut f = CanonicalForms {
        q1: Polynomial::zero(),
        u1: Polynomial::zero(),
        q2: Polynomial::zero(),
        u2: Polynomial::zero(),
        s1: Polynomial::zero(),
        v1: Polynomial::zero(),
        s2: Polynomial::zero(),
        v2: Polynomial::zero(),
        all_odd: None,
    };
    for term in chain.active_terms() {
        let m = term.m;
        let c = term.c.to_rational();
        let d = term.d.to_rational();
        let mag = m.abs();
        let cos_m = reduce_cos(mag)?;
        // sin(mt) = sign(m)·sin(|m|t)
        let sin_m = reduce_sin(mag)?;
        let mc = &c * rat(-mag); // φ̇ = Σ −|m| c sin(|m|t)
        let sd = if m < 0 { -d.clone() } else { d.clone() }; // ψ = Σ sign(m) d sin(|m|t)
        let md = &d * rat(m); // ψ̇ = Σ m d cos(|m|t)
        if mag % 2 == 1 {
            f.q1 = &f.q1 + &cos_m.cos.scale(&c);
            f.q2 = &f.q2 + &sin_m.sin.scale(&mc);
            f.s1 = &f.s1 + &sin_m.sin.scale(&sd);
            f.s2 = &f.s2 + &cos_m.cos.scale(&md);
        } else {
            f.u1 = &f.u1 + &cos_m.constant.scale(&c);
            f.u2 = &f.u2 + &sin_m.sin_cos.scale(&mc);
            f.v1 = &f.v1 + &sin_m.sin_cos.scale(&sd);
            f.v2 = &f.v2 + &cos_m.constant.scale(&md);
        }
    }
    if chain.active_terms().all(|t| t.m % 2 != 0) {
        f.all_odd = Some(AllOddForms {
            q1: f.q1.clone(),
            s1: f.s1.clone(),
            q2: f.q2.clone(),
            s2: f.s2.clone(),
        });
    }
    Ok(f)
}

#[cfg(feature = "serde")]
mod serde_impl {
    use super::*;
    use alloc::string::ToString;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Wire {
        coeffs: Vec<String>,
    }

    impl Serialize for Polynomial {
        fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
            Wire {
                coeffs: self
                    .coeffs
                    .iter()
                    .map(|c| {
                        if c.is_integer() {
                            c.numer().to_string()
                        } else {
                            alloc::format!("{}/{}", c.numer(), c.denom())
                        }
                    })
                    .collect(),
            }
            .serialize(serializer)
        }
    }

    impl<'de> Deserialize<'de> for Polynomial {
        fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
            let wire = Wire::deserialize(deserializer)?;
            let coeffs = wire
                .coeffs
                .iter()
                .map(|s| {
                    crate::real::parse_rational(s)
                        .ok_or_else(|| D::Error::custom(alloc::format!("bad coefficient `{s}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Polynomial::new(coeffs))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{Chain, Term};
    use crate::real::Real;
    use alloc::string::ToString;
    use core::f64::consts::TAU;

    #[test]
    fn odd_sin_poly_small_cases() {
        assert_eq!(odd_sin_poly(0).unwrap(), Polynomial::from_ints(&[1]));
        assert_eq!(odd_sin_poly(1).unwrap(), Polynomial::from_ints(&[3, -4]));
        assert_eq!(odd_sin_poly(2).unwrap(), Polynomial::from_ints(&[5, -20, 16]));
    }

    #[test]
    fn even_reduction_small_cases() {
        let (r1, g1) = even_reduction(1).unwrap();
        assert_eq!(r1, Polynomial::from_ints(&[2]));
        assert_eq!(g1, Polynomial::from_ints(&[-1, 2]));
        // sin 4x = 2 sin2x cos2x = 4 sin x cos x (1 − 2 sin²x), cos 4x = 2cos²2x − 1 = 8c⁴ − 8c² + 1
        let (r2, g2) = even_reduction(2).unwrap();
        assert_eq!(r2, Polynomial::from_ints(&[4, -8]));
        assert_eq!(g2, Polynomial::from_ints(&[1, -8, 8]));
        let (r3, g3) = even_reduction(3).unwrap();
        assert_eq!(r3.degree(), Some(2));
        assert_eq!(g3.degree(), Some(3));
    }

    #[test]
    fn degrees_follow_the_index() {
        for n in 0..=20 {
            assert_eq!(odd_sin_poly(n).unwrap().degree(), Some(n as usize));
        }
        for n in 1..=20 {
            let (r, g) = even_reduction(n).unwrap();
            assert_eq!(r.degree(), Some(n as usize - 1));
            assert_eq!(g.degree(), Some(n as usize));
        }
    }

    #[test]
    fn index_cap() {
        assert!(odd_sin_poly(MAX_INDEX).is_ok());
        assert_eq!(odd_sin_poly(65), Err(TrigError::IndexTooLarge(65)));
        assert_eq!(even_reduction(0), Err(TrigError::IndexZero));
        assert!(reduce_sin(129).is_ok());
        assert!(reduce_sin(130).is_err());
    }

    #[test]
    fn reduce_sin_examples() {
        assert_eq!(reduce_sin(3).unwrap().sin, Polynomial::from_ints(&[3, -4]));
        assert_eq!(reduce_sin(5).unwrap().sin, Polynomial::from_ints(&[5, -20, 16]));
        assert_eq!(reduce_sin(-3).unwrap().sin, Polynomial::from_ints(&[-3, 4]));
        assert!(reduce_sin(0).unwrap().is_zero());
        // cos 3t = cos t (1 − 4 sin²t)
        assert_eq!(reduce_cos(3).unwrap().cos, Polynomial::from_ints(&[1, -4]));
        assert_eq!(reduce_cos(0).unwrap().constant, Polynomial::one());
    }

    #[test]
    fn expansions_match_direct_evaluation() {
        for l in -20i64..=20 {
            let s = reduce_sin(l).unwrap();
            let c = reduce_cos(l).unwrap();
            for i in 0..500 {
                let t = TAU * i as f64 / 500.0 + 0.01;
                assert!((s.eval(t) - (l as f64 * t).sin()).abs() < 1e-9, "sin {l}");
                assert!((c.eval(t) - (l as f64 * t).cos()).abs() < 1e-9, "cos {l}");
            }
        }
    }

    #[test]
    fn compose_and_gcd() {
        // (1 − u)² evaluated at u → 1 − u gives u²
        let p = Polynomial::from_ints(&[1, -2, 1]);
        assert_eq!(p.compose_one_minus(), Polynomial::from_ints(&[0, 0, 1]));
        let a = Polynomial::from_ints(&[-1, 0, 4]); // (2u−1)(2u+1)
        let b = Polynomial::from_ints(&[1, -4, 4]); // (2u−1)²
        let g = a.gcd(&b);
        assert_eq!(g, Polynomial::new(vec![BigRational::new((-1).into(), 2.into()), rat(1)]));
        assert_eq!(b.squarefree(), Polynomial::from_ints(&[-1, 2]));
        let (q, r) = a.div_rem(&Polynomial::from_ints(&[1, 2]));
        assert_eq!(q, Polynomial::from_ints(&[-1, 2]));
        assert!(r.is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(Polynomial::from_ints(&[3, -4]).to_string(), "3 − 4u");
        assert_eq!(Polynomial::from_ints(&[5, -20, 16]).to_string(), "5 − 20u + 16u²");
        assert_eq!(Polynomial::from_ints(&[0, -1]).to_string(), "−u");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn unit_circle_forms() {
        let chain = Chain::new(vec![Term::new(1, Real::int(1), Real::int(1))]).unwrap();
        let f = canonical_forms(&chain).unwrap();
        assert_eq!(f.q1, Polynomial::one());
        assert!(f.u1.is_zero());
        assert_eq!(f.s1, Polynomial::one());
        assert!(f.v1.is_zero());
        assert!(f.all_odd.is_some());
    }

    #[test]
    fn example_chain_psi_bracket() {
        // x = cos 2t + c cos 3t, y = sin 2t + c sin 3t with c = 2/3:
        // ψ = sin t·[2 cos t − c + 4c cos²t], so S₁(u) = 3c − 4cu and V₁ = 2.
        let c = Real::ratio(2, 3);
        let chain = Chain::new(vec![
            Term::new(2, Real::int(1), Real::int(1)),
            Term::new(3, c.clone(), c.clone()),
        ])
        .unwrap();
        let f = canonical_forms(&chain).unwrap();
        let expected_s1 = Polynomial::new(vec![rat(2), BigRational::new((-8).into(), 3.into())]);
        assert_eq!(f.s1, expected_s1);
        assert_eq!(f.v1, Polynomial::from_ints(&[2]));
        assert!(f.all_odd.is_none());
        let m17 = Chain::new(vec![
            Term::new(1, Real::int(1), Real::int(1)),
            Term::new(7, Real::int(1), Real::int(1)),
        ])
        .unwrap();
        assert!(canonical_forms(&m17).unwrap().all_odd.is_some());
    }
}
