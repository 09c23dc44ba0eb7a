// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Chain and polynomial JSON.
//!
//! A chain file looks like
//!
//! ```json
//! {"terms": [{"m": 2, "c": 1, "d": 1}, {"m": 3, "c": "-2/3", "d": "-2/3"}]}
//! ```
//!
//! where each coefficient is a JSON number or an exact rational string.

use std::fs;
use std::path::Path;

use trigchain_core::trigpoly::Polynomial;
use trigchain_core::Chain;

use crate::Error;

pub fn parse_chain(text: &str) -> Result<Chain, serde_json::Error> {
    serde_json::from_str(text)
}

pub fn read_chain(path: &Path) -> Result<Chain, Error> {
    let text = fs::read_to_string(path).map_err(|source| Error::Read { path: path.into(), source })?;
    parse_chain(&text).map_err(|source| Error::Json { path: path.into(), source })
}

pub fn chain_to_json(chain: &Chain) -> String {
    serde_json::to_string(chain).expect("chains always serialize")
}

pub fn parse_polynomial(text: &str) -> Result<Polynomial, serde_json::Error> {
    serde_json::from_str(text)
}

pub fn polynomial_to_json(p: &Polynomial) -> String {
    serde_json::to_string(p).expect("polynomials always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use trigchain_core::Real;

    #[test]
    fn chain_round_trip() {
        let text = r#"{"terms":[{"m":2,"c":1,"d":1},{"m":3,"c":"-2/3","d":"-2/3"}]}"#;
        let c = parse_chain(text).unwrap();
        assert_eq!(c.terms()[1].c, Real::ratio(-2, 3));
        assert_eq!(chain_to_json(&c), text);
        assert_eq!(parse_chain(&chain_to_json(&c)).unwrap(), c);
    }

    #[test]
    fn chain_validation_surfaces() {
        let e = parse_chain(r#"{"terms":[{"m":2,"c":1,"d":1},{"m":4,"c":1,"d":1}]}"#).unwrap_err();
        assert!(e.to_string().contains("common factor 2"), "{e}");
    }

    #[test]
    fn polynomial_strings() {
        let p = Polynomial::from_ints(&[5, -20, 16]);
        let s = polynomial_to_json(&p);
        assert_eq!(s, r#"{"coeffs":["5","-20","16"]}"#);
        assert_eq!(parse_polynomial(&s).unwrap(), p);
    }
}
