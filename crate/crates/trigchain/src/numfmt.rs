// Copyright 2026 the Trigchain Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Fixed-precision number output.
//!
//! Every float that leaves the program is first rounded to 15 significant
//! digits, so reports compare equal across platforms and libm versions.

use serde_json::{Number, Value};

pub const SIGNIFICANT_DIGITS: usize = 15;

/// `x` rounded to [`SIGNIFICANT_DIGITS`] significant decimal digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        // normalizes -0.0 as well
        return if x == 0.0 { 0.0 } else { x };
    }
    let s = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let r: f64 = s.parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Shortest decimal form of `round_sig(x)`.
pub fn fmt_num(x: f64) -> String {
    let r = round_sig(x);
    if r.is_finite() && r != 0.0 && (r.abs() < 1e-6 || r.abs() >= 1e16) {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

/// Rounds every non-integer number inside a JSON value in place.
pub fn normalize(value: &mut Value) {
    match value {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("f64 number");
            if let Some(r) = Number::from_f64(round_sig(x)) {
                *n = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(normalize),
        Value::Object(map) => map.values_mut().for_each(normalize),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round_sig(1.0 / 3.0), 0.333333333333333);
        assert_eq!(round_sig(-0.0), 0.0);
        assert_eq!(round_sig(2.0), 2.0);
        assert_eq!(round_sig(round_sig(std::f64::consts::PI)), round_sig(std::f64::consts::PI));
        assert_eq!(fmt_num(1.0 / 3.0), "0.333333333333333");
        assert_eq!(fmt_num(4.440892098500626e-16), "4.44089209850063e-16");
        assert_eq!(fmt_num(-4.0), "-4");
    }

    #[test]
    fn json_numbers() {
        let mut v = serde_json::json!({"a": [0.1 + 0.2, 3], "b": {"c": -1e-17}});
        normalize(&mut v);
        assert_eq!(v.to_string(), r#"{"a":[0.3,3],"b":{"c":-1e-17}}"#);
    }
}
