// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

use trigchain_core::trigpoly::{odd_sin_poly, reduce_cos, reduce_sin};
use trigchain_core::Polynomial;

#[test]
fn first_odd_polynomials() {
    assert_eq!(odd_sin_poly(0).unwrap(), Polynomial::from_ints(&[1]));
    assert_eq!(odd_sin_poly(1).unwrap(), Polynomial::from_ints(&[3, -4]));
    assert_eq!(odd_sin_poly(2).unwrap(), Polynomial::from_ints(&[5, -20, 16]));
}

#[test]
fn identities_up_to_index_twelve() {
    let mut worst: f64 = 0.0;
    for l in 1..=25i64 {
        let (s, c) = (reduce_sin(l).unwrap(), reduce_cos(l).unwrap());
        for i in 0..10_000 {
            let t = -7.0 + 14.0 * i as f64 / 10_000.0;
            let lt = l as f64 * t;
            worst = worst.max((s.eval(t) - lt.sin()).abs());
            worst = worst.max((c.eval(t) - lt.cos()).abs());
        }
    }
    assert!(worst < 1e-11, "worst deviation {worst:e}");
}
