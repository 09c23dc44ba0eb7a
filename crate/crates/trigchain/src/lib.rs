// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! File formats, reports, plots and the command-line front end for
//! [`trigchain_core`].

pub mod cli;
pub mod error;
pub mod io;
pub mod numfmt;
pub mod report;
pub mod samples;
pub mod svg;

pub use error::Error;
pub use report::CurveFeatureReport;
