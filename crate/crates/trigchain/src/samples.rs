// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Uniform parameter samples and their CSV form.

use std::io::Write;

use trigchain_core::{Vec2, Vec3};

use crate::numfmt::fmt_num;

/// Number of samples used for plots and CSV exports.
pub const DEFAULT_SAMPLES: usize = 4096;

/// `n` points at `t = k·period/n`, `k = 0..=n`, so the polyline closes.
pub fn sample_planar(n: usize, period: f64, f: impl Fn(f64) -> Vec2) -> Vec<(f64, Vec2)> {
    (0..=n)
        .map(|k| {
            let t = period * k as f64 / n as f64;
            (t, f(t))
        })
        .collect()
}

pub fn sample_space(n: usize, period: f64, f: impl Fn(f64) -> Vec3) -> Vec<(f64, Vec3)> {
    (0..=n)
        .map(|k| {
            let t = period * k as f64 / n as f64;
            (t, f(t))
        })
        .collect()
}

pub fn write_planar_csv<W: Write>(out: W, rows: &[(f64, Vec2)]) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t", "x", "y"])?;
    for (t, p) in rows {
        w.write_record([fmt_num(*t), fmt_num(p.x), fmt_num(p.y)])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_space_csv<W: Write>(out: W, rows: &[(f64, Vec3)]) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t", "x", "y", "z"])?;
    for (t, p) in rows {
        w.write_record([fmt_num(*t), fmt_num(p.x), fmt_num(p.y), fmt_num(p.z)])?;
    }
    w.flush()?;
    Ok(())
}
