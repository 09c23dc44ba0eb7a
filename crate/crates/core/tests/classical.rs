// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

use std::f64::consts::TAU;

use num_rational::BigRational;
use trigchain_core::classical::{cusp_count, to_two_chain, RollingKind, RollingSpec};
use trigchain_core::oracle::{find_singular_points, OracleConfig};
use trigchain_core::{Real, TwoChain};

fn rat(s: &str) -> BigRational {
    trigchain_core::real::parse_rational(s).unwrap()
}

fn spec(kind: RollingKind, big_r: &str, r: &str, d: Option<&str>) -> RollingSpec {
    RollingSpec::new(kind, rat(big_r), rat(r), d.map(rat)).unwrap()
}

fn equivalence_gap(s: &RollingSpec) -> f64 {
    let conv = to_two_chain(s).unwrap();
    (0..1000)
        .map(|i| {
            let p = TAU * i as f64 / 1000.0;
            s.point(conv.original_parameter(p)).distance(conv.two_chain.point(p))
        })
        .fold(0.0, f64::max)
}

#[test]
fn cardioid_and_astroid() {
    let cardioid = spec(RollingKind::Epicycloid, "1", "1", None);
    let astroid = spec(RollingKind::Hypocycloid, "4", "1", None);
    assert_eq!(
        to_two_chain(&cardioid).unwrap().two_chain,
        TwoChain::new(Real::int(2), Real::int(-1), 1, 2).unwrap()
    );
    assert_eq!(
        to_two_chain(&astroid).unwrap().two_chain,
        TwoChain::new(Real::int(3), Real::int(1), -1, 3).unwrap()
    );
    for s in [&cardioid, &astroid] {
        assert!(equivalence_gap(s) < 1e-10);
    }
}

#[test]
fn cusps_agree_with_oracle() {
    for (kind, big_r, r, n) in [
        (RollingKind::Epicycloid, "1", "1", 1),
        (RollingKind::Epicycloid, "2", "1", 2),
        (RollingKind::Hypocycloid, "4", "1", 4),
        (RollingKind::Hypocycloid, "3", "1", 3),
        (RollingKind::Epicycloid, "5/2", "1", 5),
    ] {
        let s = spec(kind, big_r, r, None);
        assert_eq!(cusp_count(&s).unwrap(), n);
        let chain = to_two_chain(&s).unwrap().two_chain.to_chain();
        assert_eq!(find_singular_points(&chain, &OracleConfig::default()).len(), n, "{kind} {big_r}/{r}");
    }
}

#[test]
fn trochoids_are_smooth_unless_cycloids() {
    let epi = spec(RollingKind::Epitrochoid, "3", "1", Some("1/2"));
    let hypo = spec(RollingKind::Hypotrochoid, "5", "3", Some("5"));
    for s in [&epi, &hypo] {
        assert!(equivalence_gap(s) < 1e-10);
        assert!(to_two_chain(s).unwrap().two_chain.singular_points().is_none());
    }
    let same = spec(RollingKind::Epitrochoid, "7/3", "1", Some("1"));
    assert_eq!(
        to_two_chain(&same).unwrap().two_chain,
        to_two_chain(&spec(RollingKind::Epicycloid, "7/3", "1", None)).unwrap().two_chain
    );
}
