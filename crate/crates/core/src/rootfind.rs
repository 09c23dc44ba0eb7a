// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Real roots of exact polynomials on a closed interval.
//!
//! The polynomial is first reduced to its squarefree part with exact
//! arithmetic. Roots are bracketed by sign changes on a uniform grid, bisected
//! and polished with Newton steps. For moderate degrees a Sturm sequence
//! confirms the count, and if the grid missed a close pair the roots are
//! isolated with exact Sturm bisection instead.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::real::rational_from_f64;
use crate::trigpoly::{horner, Polynomial};

pub const DEFAULT_TOL: f64 = 1e-12;

const MAX_ITER: usize = 200;
const STURM_MAX_DEGREE: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Multiplicity {
    Simple,
    SuspectedMultiple,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub value: f64,
    pub multiplicity: Multiplicity,
    /// The root sits on `lo` or `hi`.
    pub endpoint: bool,
}

/// Sorted roots of a polynomial on `[lo, hi]`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Root>,
    pub interval: (f64, f64),
    pub tolerance: f64,
}

impl RootSet {
    pub fn values(&self) -> Vec<f64> {
        self.roots.iter().map(|r| r.value).collect()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum RootError {
    ZeroPolynomial,
    InvalidInterval,
    InvalidTolerance,
    NoConvergence { near: f64 },
}

impl fmt::Display for RootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootError::ZeroPolynomial => f.write_str("the zero polynomial has no isolated roots"),
            RootError::InvalidInterval => f.write_str("root interval must satisfy lo < hi"),
            RootError::InvalidTolerance => f.write_str("tolerance must be positive"),
            RootError::NoConvergence { near } => {
                write!(f, "root refinement did not converge near {near}")
            }
        }
    }
}

impl core::error::Error for RootError {}

/// Double-precision view of a squarefree polynomial, scaled so `max |aₖ| = 1`.
struct Numeric {
    exact: Polynomial,
    p: Vec<f64>,
    dp: Vec<f64>,
}

impl Numeric {
    fn new(sf: &Polynomial) -> Self {
        let scale = sf.max_abs_coeff();
        let p: Vec<f64> = sf.to_f64_coeffs().into_iter().map(|c| c / scale).collect();
        let dp = p
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * k as f64)
            .collect();
        Numeric {
            exact: sf.clone(),
            p,
            dp,
        }
    }

    fn eval(&self, x: f64) -> f64 {
        horner(&self.p, x)
    }

    fn sign_exact(&self, x: f64) -> i8 {
        let v = self.exact.eval_exact(&rational_from_f64(x));
        if v.is_zero() {
            0
        } else if v.is_negative() {
            -1
        } else {
            1
        }
    }

    /// `Σ |aₖ| |x|ᵏ`, the natural size of rounding error in `eval`.
    fn magnitude(&self, x: f64) -> f64 {
        let ax = x.abs();
        self.p.iter().rev().fold(0.0, |acc, c| acc * ax + c.abs())
    }
}

/// All real roots of `p` in `[lo, hi]` to absolute accuracy `tol`.
pub fn real_roots(p: &Polynomial, lo: f64, hi: f64, tol: f64) -> Result<RootSet, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(RootError::InvalidInterval);
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(RootError::InvalidTolerance);
    }
    let empty = RootSet {
        roots: Vec::new(),
        interval: (lo, hi),
        tolerance: tol,
    };
    if p.degree() == Some(0) {
        return Ok(empty);
    }
    let mut sf = p.squarefree();
    if sf.leading().is_some_and(|l| l.is_negative()) {
        sf = -&sf;
    }
    let common = p.gcd(&p.derivative());
    let num = Numeric::new(&sf);

    let mut values = simple_roots(&sf, &num, lo, hi, tol)?;
    let deg = sf.degree().unwrap_or(0);
    if deg <= STURM_MAX_DEGREE {
        let seq = sturm_sequence(&sf);
        let expected = count_closed(&sf, &seq, lo, hi);
        if values.len() != expected {
            log::debug!(
                "grid found {} roots, Sturm count {}; isolating exactly",
                values.len(),
                expected
            );
            values = sturm_roots(&sf, &seq, &num, lo, hi, tol)?;
        }
    }

    let mut roots: Vec<Root> = values
        .into_iter()
        .map(|v| Root {
            value: v,
            multiplicity: Multiplicity::Simple,
            endpoint: false,
        })
        .collect();

    // Near-double roots of a perturbed polynomial show up as critical points
    // where |p| nearly touches zero without a sign change.
    if deg >= 2 {
        let dsf = sf.derivative().squarefree();
        let dnum = Numeric::new(&dsf);
        if let Ok(crit) = simple_roots(&dsf, &dnum, lo, hi, tol) {
            for c in crit {
                let touching = num.eval(c).abs() <= tol * num.magnitude(c).max(1.0);
                let covered = roots.iter().any(|r| (r.value - c).abs() <= 1e-6);
                if touching && !covered {
                    roots.push(Root {
                        value: c,
                        multiplicity: Multiplicity::SuspectedMultiple,
                        endpoint: false,
                    });
                }
            }
        }
    }

    // Endpoints that are roots of the (possibly perturbed) polynomial.
    for e in [lo, hi] {
        if num.eval(e).abs() <= tol * num.magnitude(e).max(1.0)
            && !roots.iter().any(|r| (r.value - e).abs() <= tol.max(1e-14))
        {
            roots.push(Root {
                value: e,
                multiplicity: Multiplicity::Simple,
                endpoint: true,
            });
        }
    }

    roots.sort_by(|a, b| a.value.total_cmp(&b.value));
    roots.dedup_by(|b, a| {
        if (b.value - a.value).abs() <= tol {
            a.endpoint |= b.endpoint;
            true
        } else {
            false
        }
    });

    let common_num = (common.degree().unwrap_or(0) > 0).then(|| Numeric::new(&common));
    let width = hi - lo;
    for r in &mut roots {
        if (r.value - lo).abs() <= tol.max(width * 1e-15) {
            r.value = lo;
            r.endpoint = true;
        } else if (r.value - hi).abs() <= tol.max(width * 1e-15) {
            r.value = hi;
            r.endpoint = true;
        }
        if let Some(g) = &common_num {
            if g.eval(r.value).abs() <= 1e-8 * g.magnitude(r.value).max(1.0) {
                r.multiplicity = Multiplicity::SuspectedMultiple;
            }
        }
    }
    Ok(RootSet { roots, ..empty })
}

/// Grid bracketing plus bisection for a squarefree polynomial.
fn simple_roots(
    sf: &Polynomial,
    num: &Numeric,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<Vec<f64>, RootError> {
    let deg = sf.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(Vec::new());
    }
    let n = (64 * deg).max(1024);
    let node = |i: usize| {
        if i == n {
            hi
        } else {
            lo + (hi - lo) * (i as f64 / n as f64)
        }
    };
    let mut out = Vec::new();
    let mut prev_x = lo;
    let mut prev_v = num.eval(lo);
    if prev_v == 0.0 {
        out.push(lo);
    }
    for i in 1..=n {
        let x = node(i);
        let v = num.eval(x);
        if v == 0.0 {
            out.push(x);
        } else if prev_v != 0.0 && (prev_v < 0.0) != (v < 0.0) {
            out.push(refine(num, prev_x, x, prev_v, tol)?);
        }
        prev_x = x;
        prev_v = v;
    }
    Ok(out)
}

/// Bisection to `1e-3·tol` followed by a bracketed Newton polish.
fn refine(num: &Numeric, mut a: f64, mut b: f64, fa: f64, tol: f64) -> Result<f64, RootError> {
    let (a0, b0) = (a, b);
    let target = 1e-3 * tol;
    let neg_a = fa < 0.0;
    let mut iter = 0;
    while b - a > target {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = num.eval(mid);
        if fm == 0.0 {
            a = mid;
            b = mid;
            break;
        }
        if (fm < 0.0) == neg_a {
            a = mid;
        } else {
            b = mid;
        }
        iter += 1;
        if iter > MAX_ITER {
            return Err(RootError::NoConvergence { near: mid });
        }
    }
    let mut x = 0.5 * (a + b);
    for _ in 0..4 {
        let d = horner(&num.dp, x);
        if d == 0.0 {
            break;
        }
        let next = x - num.eval(x) / d;
        if !(next >= a - target && next <= b + target) || next == x {
            break;
        }
        x = next;
    }
    Ok(certify(num, x, a0, b0, tol))
}

/// Confirms `x` to within `tol` with exact sign evaluations, falling back to
/// exact bisection of `[a, b]` when double-precision rounding misplaced it.
fn certify(num: &Numeric, x: f64, a: f64, b: f64, tol: f64) -> f64 {
    let half = 0.5 * tol;
    let (l, r) = ((x - half).max(a), (x + half).min(b));
    let (sl, sr) = (num.sign_exact(l), num.sign_exact(r));
    if sl == 0 {
        return l;
    }
    if sr == 0 {
        return r;
    }
    if sl != sr {
        return x;
    }
    let (mut a, mut b) = (a, b);
    let sa = num.sign_exact(a);
    if sa == 0 {
        return a;
    }
    if num.sign_exact(b) == sa {
        // no exact bracket; keep the numeric estimate
        return x;
    }
    while b - a > 1e-3 * tol {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        match num.sign_exact(mid) {
            0 => return mid,
            s if s == sa => a = mid,
            _ => b = mid,
        }
    }
    0.5 * (a + b)
}

fn sturm_sequence(p: &Polynomial) -> Vec<Polynomial> {
    let mut seq = alloc::vec![p.primitive(), p.derivative().primitive()];
    loop {
        let n = seq.len();
        if seq[n - 1].degree().unwrap_or(0) == 0 {
            break;
        }
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push((-&r).primitive());
    }
    seq
}

fn variations(seq: &[Polynomial], x: &BigRational) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for q in seq {
        let v = q.eval_exact(x);
        let s = if v.is_zero() {
            0
        } else if v.is_negative() {
            -1
        } else {
            1
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct roots in `[lo, hi]`.
fn count_closed(p: &Polynomial, seq: &[Polynomial], lo: f64, hi: f64) -> usize {
    let a = rational_from_f64(lo);
    let b = rational_from_f64(hi);
    let open = variations(seq, &a).saturating_sub(variations(seq, &b));
    open + usize::from(p.eval_exact(&a).is_zero())
}

/// Exact isolation by Sturm bisection, then numeric refinement.
fn sturm_roots(
    p: &Polynomial,
    seq: &[Polynomial],
    num: &Numeric,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<Vec<f64>, RootError> {
    let two = BigRational::from_integer(BigInt::from(2));
    let a0 = rational_from_f64(lo);
    let b0 = rational_from_f64(hi);
    let mut out = Vec::new();
    if p.eval_exact(&a0).is_zero() {
        out.push(lo);
    }
    // intervals (a, b] with their Sturm counts
    let mut stack = alloc::vec![(a0.clone(), b0, variations(seq, &a0), 0usize)];
    while let Some((a, b, va, depth)) = stack.pop() {
        let vb = variations(seq, &b);
        let count = va.saturating_sub(vb);
        if count == 0 {
            continue;
        }
        let fb = p.eval_exact(&b);
        if count == 1 {
            let fa = p.eval_exact(&a);
            if fb.is_zero() {
                out.push(crate::real::rational_to_f64(&b));
                continue;
            }
            if !fa.is_zero() && fa.is_negative() != fb.is_negative() {
                let af = crate::real::rational_to_f64(&a);
                let bf = crate::real::rational_to_f64(&b);
                let fa_num = num.eval(af);
                if fa_num != 0.0 && (fa_num < 0.0) != (num.eval(bf) < 0.0) {
                    out.push(refine(num, af, bf, fa_num, tol)?);
                } else {
                    out.push(0.5 * (af + bf));
                }
                continue;
            }
        }
        if depth > MAX_ITER {
            return Err(RootError::NoConvergence {
                near: crate::real::rational_to_f64(&a),
            });
        }
        let mid = (&a + &b) / &two;
        let vm = variations(seq, &mid);
        stack.push((a, mid.clone(), va, depth + 1));
        stack.push((mid, b, vm, depth + 1));
    }
    out.sort_by(f64::total_cmp);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_traits::One;
    use proptest::prelude::*;

    #[test]
    fn quarter_circle_example() {
        let p = Polynomial::from_ints(&[-1, 0, 4]);
        let r = real_roots(&p, 0.0, 1.0, DEFAULT_TOL).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r.roots[0].value - 0.5).abs() < 1e-14);
        assert_eq!(r.roots[0].multiplicity, Multiplicity::Simple);
    }

    #[test]
    fn example_quadratic_with_endpoint_root() {
        // 8u² + 6u − 2 = 2(4u − 1)(u + 1)
        let p = Polynomial::from_ints(&[-2, 6, 8]);
        let r = real_roots(&p, -1.0, 1.0, DEFAULT_TOL).unwrap();
        assert_eq!(r.values(), vec![-1.0, 0.25]);
        assert!(r.roots[0].endpoint);
        assert!(!r.roots[1].endpoint);
    }

    #[test]
    fn constants_and_errors() {
        let r = real_roots(&Polynomial::from_ints(&[3]), -1.0, 1.0, DEFAULT_TOL).unwrap();
        assert!(r.is_empty());
        assert_eq!(
            real_roots(&Polynomial::zero(), -1.0, 1.0, DEFAULT_TOL),
            Err(RootError::ZeroPolynomial)
        );
        assert_eq!(
            real_roots(&Polynomial::identity(), 1.0, 1.0, DEFAULT_TOL),
            Err(RootError::InvalidInterval)
        );
    }

    #[test]
    fn double_root_is_flagged() {
        let p = Polynomial::from_ints(&[1, -4, 4]);
        let r = real_roots(&p, -1.0, 1.0, DEFAULT_TOL).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r.roots[0].value - 0.5).abs() < 1e-14);
        assert_eq!(r.roots[0].multiplicity, Multiplicity::SuspectedMultiple);
    }

    #[test]
    fn perturbed_double_root_is_reported() {
        // (u − 0.3)² + 1e-16
        let shift = rational_from_f64(0.3);
        let lin = Polynomial::new(vec![-shift, BigRational::one()]);
        let p = &(&lin * &lin) + &Polynomial::constant(rational_from_f64(1e-16));
        let r = real_roots(&p, -1.0, 1.0, DEFAULT_TOL).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r.roots[0].value - 0.3).abs() < 1e-9);
        assert_eq!(r.roots[0].multiplicity, Multiplicity::SuspectedMultiple);
    }

    #[test]
    fn close_pair_found_by_sturm() {
        // roots 0.5 and 0.5 + 1e-6 sit inside one grid cell
        let a = Polynomial::from_ints(&[-1, 2]);
        let b = Polynomial::new(vec![
            BigRational::new(BigInt::from(-500_001), BigInt::from(1_000_000)),
            BigRational::one(),
        ]);
        let p = &a * &b;
        let r = real_roots(&p, 0.0, 1.0, DEFAULT_TOL).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r.roots[0].value - 0.5).abs() < 1e-12);
        assert!((r.roots[1].value - 0.500001).abs() < 1e-12);
    }

    fn planted(roots: &[i64]) -> Polynomial {
        // roots given in thousandths
        roots.iter().fold(Polynomial::one(), |acc, &r| {
            &acc * &Polynomial::from_ints(&[-r, 1000])
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn recovers_planted_roots(mut rs in proptest::collection::vec(-999i64..=999, 1..=8)) {
            rs.sort();
            rs.dedup();
            let p = planted(&rs);
            let found = real_roots(&p, -1.0, 1.0, DEFAULT_TOL).unwrap();
            prop_assert_eq!(found.len(), rs.len());
            for (got, want) in found.roots.iter().zip(&rs) {
                prop_assert!((got.value - *want as f64 / 1000.0).abs() < 1e-10);
            }
        }

        #[test]
        fn invariant_under_integer_scaling(
            rs in proptest::collection::vec(-999i64..=999, 1..=6),
            k in prop_oneof![-50i64..=-1, 1i64..=50],
        ) {
            let p = planted(&rs);
            let kp = p.scale(&BigRational::from_integer(BigInt::from(k)));
            let a = real_roots(&p, -1.0, 1.0, DEFAULT_TOL).unwrap();
            let b = real_roots(&kp, -1.0, 1.0, DEFAULT_TOL).unwrap();
            prop_assert_eq!(a.len(), b.len());
            for (x, y) in a.roots.iter().zip(&b.roots) {
                prop_assert!((x.value - y.value).abs() <= 1e-12);
            }
        }
    }
}
