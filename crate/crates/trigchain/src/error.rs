// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

use std::path::PathBuf;

/// Everything that stops a subcommand from producing its output.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0}")]
    Validation(String),
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn validation(e: impl std::fmt::Display) -> Self {
        Error::Validation(e.to_string())
    }

    /// 2 for bad input, 1 for environment failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Validation(_) | Error::Json { .. } => 2,
            Error::Read { .. } => 2,
            Error::Write { .. } | Error::Csv(_) | Error::Io(_) => 1,
        }
    }
}
