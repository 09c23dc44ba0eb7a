// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! The `trigchain` command line.
//!
//! Exit codes: 0 on success, 1 when output cannot be written, 2 for usage and
//! validation errors, 3 when `--verify` finds a disagreement with the oracle.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use trigchain_core::classical::{self, RollingKind, RollingSpec};
use trigchain_core::inventory::analyze_chain_with;
use trigchain_core::oracle::{self, verify_feature_set, FnCurve, OracleConfig, PlaneCurve};
use trigchain_core::real::parse_rational;
use trigchain_core::space_curves::{HelixClass, PeriodicHelix, TorusKnot};
use trigchain_core::spectral::{boundary_chains, OperatorSpec};
use trigchain_core::trigpoly::{reduce_cos, reduce_sin, Polynomial, TrigExpansion};
use trigchain_core::{Chain, CurveFeature, FeatureKind, Real, TwoChain, Vec2};

use crate::report::{to_json_pretty, to_value, CurveFeatureReport, OracleSummary};
use crate::samples::{self, DEFAULT_SAMPLES};
use crate::{io, svg, Error};

pub const EXIT_SUCCESS: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "trigchain", version, about = "Feature analysis of n-member chain curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand sin(lt) or cos(lt) as polynomials in u = sin²t.
    Reduce {
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
        #[arg(long, conflicts_with = "cos")]
        sin: bool,
        #[arg(long)]
        cos: bool,
        /// Print the coefficient lists as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Self-intersections, singular points, folds and zeros of a chain.
    Analyze {
        #[arg(long)]
        chain: PathBuf,
        /// Compare with the numeric oracle; exit 3 on disagreement.
        #[arg(long)]
        verify: bool,
    },
    /// Epicycloids, hypocycloids and trochoids as two-member chains.
    Classical {
        #[arg(long)]
        kind: String,
        #[arg(long = "R")]
        big_r: String,
        #[arg(long = "r")]
        r: String,
        #[arg(long)]
        d: Option<String>,
        #[arg(long)]
        verify: bool,
    },
    /// Torus knots and their projection crossings.
    Torus {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long = "R")]
        big_r: String,
        #[arg(long = "r")]
        r: String,
        /// Vertical amplitude; defaults to r, which puts the knot on the torus.
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        verify: bool,
        /// Also write t,x,y,z samples.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// A two-member chain lifted by z = a sin(theta + Qt).
    Helix {
        #[arg(long)]
        chain: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        theta: String,
        #[arg(long = "Q", allow_hyphen_values = true)]
        big_q: String,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Boundary curves of the spectrum of a sum of imaginary powers.
    Spectrum {
        /// Comma-separated c:alpha pairs, e.g. "2:1,1:2".
        #[arg(long, allow_hyphen_values = true)]
        terms: String,
        #[arg(long)]
        verify: bool,
    },
    /// Compare the purely analytic inventory, without oracle seeds, with the
    /// numeric oracle; exit 3 on disagreement.
    OracleCheck {
        #[arg(long)]
        chain: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Plot a chain with its features.
    Plot {
        #[arg(long)]
        chain: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Also write the t,x,y samples.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

/// Text for standard output and whether every requested check passed.
struct Outcome {
    text: String,
    verified: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, verified: true }
    }

    fn report(report: &CurveFeatureReport) -> Self {
        Outcome {
            text: to_json_pretty(report),
            verified: report.verified(),
        }
    }
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return if code == 0 { EXIT_SUCCESS } else { EXIT_INVALID };
        }
    };
    match execute(cli.command) {
        Ok(outcome) => {
            if writeln!(out, "{}", outcome.text).is_err() {
                return EXIT_FAILURE;
            }
            if outcome.verified {
                EXIT_SUCCESS
            } else {
                let _ = writeln!(err, "error: analysis and oracle disagree");
                EXIT_MISMATCH
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Reduce { l, sin, cos, json } => reduce(l, sin, cos, json),
        Command::Analyze { chain, verify } => {
            let chain = io::read_chain(&chain)?;
            Ok(Outcome::report(&analyze(&chain, verify)?))
        }
        Command::Classical { kind, big_r, r, d, verify } => classical(&kind, &big_r, &r, d.as_deref(), verify),
        Command::Torus { p, q, big_r, r, a, verify, csv } => {
            torus(p, q, &big_r, &r, a.as_deref(), verify, csv.as_deref())
        }
        Command::Helix { chain, a, theta, big_q, csv } => {
            let chain = io::read_chain(&chain)?;
            helix(&chain, &a, &theta, &big_q, csv.as_deref())
        }
        Command::Spectrum { terms, verify } => spectrum(&terms, verify),
        Command::OracleCheck { chain, samples } => {
            let chain = io::read_chain(&chain)?;
            Ok(Outcome::report(&oracle_check(&chain, samples)?))
        }
        Command::Plot { chain, out, samples, csv } => {
            let chain = io::read_chain(&chain)?;
            plot(&chain, &out, samples, csv.as_deref())
        }
    }
}

fn real_arg(name: &str, s: &str) -> Result<Real, Error> {
    s.trim()
        .parse::<Real>()
        .map_err(|_| Error::Validation(format!("--{name}: expected a number or a rational such as 7/3, got {s:?}")))
}

fn rational_arg(name: &str, s: &str) -> Result<num_rational::BigRational, Error> {
    parse_rational(s.trim())
        .ok_or_else(|| Error::Validation(format!("--{name}: expected an exact rational such as 7/3, got {s:?}")))
}

fn oracle_config(n_samples: usize) -> Result<OracleConfig, Error> {
    let cfg = OracleConfig::with_samples(n_samples);
    if cfg.is_valid() {
        Ok(cfg)
    } else {
        Err(Error::Validation(format!("--samples: need at least 256, got {n_samples}")))
    }
}

fn verify_tolerance(scale: f64) -> f64 {
    1e-6 * scale.max(1.0)
}

// reduce

fn reduce(l: i64, sin: bool, cos: bool, json: bool) -> Result<Outcome, Error> {
    let mut parts = Vec::new();
    if sin || !cos {
        parts.push(("sin", reduce_sin(l).map_err(Error::validation)?));
    }
    if cos || !sin {
        parts.push(("cos", reduce_cos(l).map_err(Error::validation)?));
    }
    if json {
        let items: Vec<Value> = parts
            .iter()
            .map(|(f, e)| {
                json!({
                    "function": format!("{f}({l}t)"),
                    "variable": "u = sin²t",
                    "constant": e.constant,
                    "sin": e.sin,
                    "cos": e.cos,
                    "sinCos": e.sin_cos,
                })
            })
            .collect();
        return Ok(Outcome::ok(to_json_pretty(&items)));
    }
    let lines: Vec<String> = parts
        .iter()
        .map(|(f, e)| format!("{f}({l}t) = {}, u = sin²t", expansion_text(e)))
        .collect();
    Ok(Outcome::ok(lines.join("\n")))
}

/// `"(3 − 4u)·sin t"` style rendering of an expansion.
pub fn expansion_text(e: &TrigExpansion) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (p, basis) in [(&e.constant, ""), (&e.sin, "sin t"), (&e.cos, "cos t"), (&e.sin_cos, "sin t·cos t")] {
        if p.is_zero() {
            continue;
        }
        terms.push(term_text(p, basis));
    }
    if terms.is_empty() {
        return "0".to_owned();
    }
    let mut out = terms[0].clone();
    for t in &terms[1..] {
        match t.strip_prefix('−') {
            Some(rest) => out.push_str(&format!(" − {rest}")),
            None => out.push_str(&format!(" + {t}")),
        }
    }
    out
}

fn term_text(p: &Polynomial, basis: &str) -> String {
    let body = p.display_in("u");
    if basis.is_empty() {
        return body;
    }
    if p.degree() == Some(0) {
        match body.as_str() {
            "1" => basis.to_owned(),
            "−1" => format!("−{basis}"),
            _ => format!("{body}·{basis}"),
        }
    } else {
        format!("({body})·{basis}")
    }
}

// analyze

fn chain_value(chain: &Chain) -> Value {
    to_value(chain)
}

/// Orbit sizes by id, for reports on two-member chains.
fn orbit_summary(features: &[CurveFeature]) -> Vec<Value> {
    let mut orbits: BTreeMap<usize, (FeatureKind, usize)> = BTreeMap::new();
    for f in features {
        if let Some(id) = f.orbit_id {
            orbits.entry(id).or_insert((f.kind, 0)).1 += 1;
        }
    }
    orbits
        .into_iter()
        .map(|(id, (kind, n))| json!({"orbitId": id, "kind": kind, "members": n}))
        .collect()
}

fn inventory(chain: &Chain) -> Result<Vec<CurveFeature>, Error> {
    analyze_chain_with(chain, Some(&OracleConfig::default())).map_err(Error::validation)
}

fn attach_oracle_diff(report: &mut CurveFeatureReport, curve: &impl PlaneCurve, cfg: &OracleConfig) {
    let numeric = oracle::analyze(curve, cfg);
    report.oracle_diff = Some(verify_feature_set(&report.features, &numeric, verify_tolerance(curve.scale())));
}

pub fn analyze(chain: &Chain, verify: bool) -> Result<CurveFeatureReport, Error> {
    analyze_with(chain, Some(&OracleConfig::default()), verify)
}

fn analyze_with(chain: &Chain, seeds: Option<&OracleConfig>, verify: bool) -> Result<CurveFeatureReport, Error> {
    let features = analyze_chain_with(chain, seeds).map_err(Error::validation)?;
    let mut report = CurveFeatureReport::new(chain_value(chain), Vec::new());
    if let Some(tc) = TwoChain::from_chain(chain) {
        report = report
            .detail("twoChain", &tc)
            .detail("rotationOrder", tc.q())
            .detail("orbits", orbit_summary(&features));
    }
    report.features = features;
    if verify {
        attach_oracle_diff(&mut report, chain, &OracleConfig::default());
    }
    Ok(report)
}

// classical

fn classical(kind: &str, big_r: &str, r: &str, d: Option<&str>, verify: bool) -> Result<Outcome, Error> {
    let kind: RollingKind = kind.parse().map_err(Error::validation)?;
    let spec = RollingSpec::new(
        kind,
        rational_arg("R", big_r)?,
        rational_arg("r", r)?,
        d.map(|d| rational_arg("d", d)).transpose()?,
    )
    .map_err(Error::validation)?;
    let conv = classical::to_two_chain(&spec).map_err(Error::validation)?;
    let tc = &conv.two_chain;
    let features = tc.features().map_err(Error::validation)?;
    let cusps = features
        .iter()
        .filter(|f| f.kind == FeatureKind::Singular)
        .count();
    let mut curve = json!({
        "kind": kind,
        "R": Real::Exact(spec.big_r.clone()),
        "r": Real::Exact(spec.r.clone()),
    });
    if let Some(d) = &spec.d {
        curve["d"] = to_value(&Real::Exact(d.clone()));
    }
    let mut report = CurveFeatureReport::new(curve, Vec::new())
        .detail("twoChain", tc)
        .detail("parameterScale", conv.q)
        .detail("cuspCount", cusps)
        .detail("orbits", orbit_summary(&features));
    report.features = features;
    if verify {
        attach_oracle_diff(&mut report, tc, &OracleConfig::default());
    }
    Ok(Outcome::report(&report))
}

// torus

fn positive_f64(name: &str, s: &str) -> Result<f64, Error> {
    let x = real_arg(name, s)?.to_f64();
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::Validation(format!("--{name} must be finite")))
    }
}

#[allow(clippy::too_many_arguments)]
fn torus(
    p: u32,
    q: u32,
    big_r: &str,
    r: &str,
    a: Option<&str>,
    verify: bool,
    csv: Option<&Path>,
) -> Result<Outcome, Error> {
    let (big_r_v, r_v) = (positive_f64("R", big_r)?, positive_f64("r", r)?);
    let a_v = a.map(|a| positive_f64("a", a)).transpose()?;
    let knot = TorusKnot::new(p, q, big_r_v, r_v, a_v).map_err(Error::validation)?;
    let crossings = knot.projection_self_intersections().map_err(Error::validation)?;
    let lifted = knot.lift_planar_features().map_err(Error::validation)?;
    let mut features: Vec<CurveFeature> = crossings.iter().map(|c| c.to_feature()).collect();
    features.extend(
        lifted
            .iter()
            .filter(|l| l.kind != FeatureKind::ProjectionSelfIntersection)
            .map(|l| l.to_feature()),
    );
    let margin = crossings
        .iter()
        .map(|c| knot.slope_margin(c.t, c.s.unwrap_or(c.t)))
        .fold(f64::INFINITY, f64::min);
    let grid = 4096;
    let residual = (0..grid)
        .map(|i| knot.torus_residual(TAU * i as f64 / grid as f64).abs())
        .fold(0.0, f64::max);
    let curve = json!({
        "p": p,
        "q": q,
        "R": real_arg("R", big_r)?,
        "r": real_arg("r", r)?,
        "a": knot.amplitude(),
    });
    let mut report = CurveFeatureReport::new(curve, features)
        .detail("expectedCrossings", q as usize * (p as usize).saturating_sub(1))
        .detail("fourierChain", knot.fourier_chain())
        .detail("minSlopeMargin", if margin.is_finite() { Some(margin) } else { None })
        .detail("torusResidual", residual)
        .detail("minSpeed", knot.min_speed(grid));
    if verify {
        let planar = FnCurve {
            point: |t| knot.planar_point(t),
            velocity: |t| knot.planar_velocity(t),
            period: TAU,
            scale: knot.scale(),
            velocity_scale: knot.scale() * (p + q) as f64,
        };
        let numeric = oracle::analyze(&planar, &OracleConfig::default());
        let as_planar: Vec<CurveFeature> = report
            .features
            .iter()
            .filter(|f| f.kind == FeatureKind::ProjectionSelfIntersection)
            .map(|f| CurveFeature::planar(FeatureKind::SelfIntersection, f.xy(), f.params.clone()))
            .collect();
        report.oracle_diff = Some(verify_feature_set(&as_planar, &numeric, verify_tolerance(knot.scale())));
    }
    if let Some(path) = csv {
        let rows = samples::sample_space(DEFAULT_SAMPLES, TAU, |t| knot.point(t));
        samples::write_space_csv(create(path)?, &rows)?;
    }
    Ok(Outcome::report(&report))
}

fn create(path: &Path) -> Result<BufWriter<File>, Error> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|source| Error::Write { path: path.into(), source })
}

// helix

fn helix(chain: &Chain, a: &str, theta: &str, big_q: &str, csv: Option<&Path>) -> Result<Outcome, Error> {
    let planar = TwoChain::from_chain(chain)
        .ok_or_else(|| Error::Validation("helix needs a two-member chain with c = d".to_owned()))?;
    let (a_v, theta_v) = (positive_f64("a", a)?, positive_f64("theta", theta)?);
    let q = Real::Exact(rational_arg("Q", big_q)?);
    let h = PeriodicHelix::new(planar, a_v, theta_v, q.clone()).map_err(Error::validation)?;
    let class = h.classify();
    let features: Vec<CurveFeature> = h
        .lift_planar_features()
        .map_err(Error::validation)?
        .iter()
        .map(|p| p.to_feature())
        .collect();
    let curve = json!({
        "chain": chain_value(chain),
        "a": real_arg("a", a)?,
        "theta": real_arg("theta", theta)?,
        "Q": q,
    });
    let mut report = CurveFeatureReport::new(curve, features)
        .detail("class", class)
        .detail("period", h.period());
    if matches!(class, HelixClass::Capareda | HelixClass::ConstantPrecession) {
        report = report.detail("quadricResidual", h.quadric_residual(class, 1000));
    }
    if let Ok(env) = h.s_envelope() {
        report = report.detail("envelope", env);
    }
    if let Some(path) = csv {
        let rows = samples::sample_space(DEFAULT_SAMPLES, h.period(), |t| h.point(t));
        samples::write_space_csv(create(path)?, &rows)?;
    }
    Ok(Outcome::report(&report))
}

// spectrum

fn spectrum(terms: &str, verify: bool) -> Result<Outcome, Error> {
    let spec = OperatorSpec::parse(terms).map_err(Error::validation)?;
    let chains = boundary_chains(&spec).map_err(Error::validation)?;
    let spec_value: Vec<Value> = spec
        .terms()
        .iter()
        .map(|(c, alpha)| json!({"c": c, "alpha": Real::Exact(alpha.clone())}))
        .collect();
    let mut verified = true;
    let mut boundary = |chain: &Chain| -> Result<Value, Error> {
        let r = analyze(chain, verify)?;
        verified &= r.verified();
        Ok(to_value(&r))
    };
    let f1 = boundary(&chains.f1)?;
    let f2 = boundary(&chains.f2)?;
    let doc = json!({
        "curve": {"terms": spec_value, "denominator": spec.denominator(), "exponents": spec.exponents()},
        "exponentGcd": chains.exponent_gcd,
        "f1": f1,
        "f2": f2,
    });
    Ok(Outcome {
        text: to_json_pretty(&doc),
        verified,
    })
}

// oracle-check

pub fn oracle_check(chain: &Chain, n_samples: usize) -> Result<CurveFeatureReport, Error> {
    let cfg = oracle_config(n_samples)?;
    let mut report = analyze_with(chain, None, false)?;
    let numeric = oracle::analyze(chain, &cfg);
    report.oracle = Some(OracleSummary::new(&numeric, cfg.n_samples));
    report.oracle_diff = Some(verify_feature_set(&report.features, &numeric, verify_tolerance(chain.scale())));
    Ok(report)
}

// plot

fn plot(chain: &Chain, out: &Path, n: usize, csv: Option<&Path>) -> Result<Outcome, Error> {
    if n < 16 {
        return Err(Error::Validation(format!("--samples: need at least 16, got {n}")));
    }
    let rows = samples::sample_planar(n, TAU, |t| chain.eval(t));
    let features = inventory(chain)?;
    let points: Vec<Vec2> = rows.iter().map(|(_, p)| *p).collect();
    let doc = svg::render(&points, &features);
    let mut w = create(out)?;
    w.write_all(doc.as_bytes())
        .and_then(|_| w.flush())
        .map_err(|source| Error::Write { path: out.into(), source })?;
    if let Some(path) = csv {
        samples::write_planar_csv(create(path)?, &rows)?;
    }
    Ok(Outcome::ok(format!("wrote {} ({} features)", out.display(), features.len())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion_rendering() {
        assert_eq!(expansion_text(&reduce_sin(3).unwrap()), "(3 − 4u)·sin t");
        assert_eq!(expansion_text(&reduce_sin(1).unwrap()), "sin t");
        assert_eq!(expansion_text(&reduce_sin(-1).unwrap()), "−sin t");
        assert_eq!(expansion_text(&reduce_sin(2).unwrap()), "2·sin t·cos t");
        assert_eq!(expansion_text(&reduce_sin(0).unwrap()), "0");
        assert_eq!(expansion_text(&reduce_cos(0).unwrap()), "1");
    }
}
