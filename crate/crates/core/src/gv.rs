//! The asymptotic rate `R(δ) = 1 - 2δ log₂3 - H₂(2δ)` of stabilizer codes
//! correcting a fraction `δ` of qubit errors.

use crate::error::{Error, Result};

/// Binary entropy in bits, with `H₂(0) = H₂(1) = 0`.
pub fn binary_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// `1 - 2δ log₂3 - H₂(2δ)` for `0 <= δ < 1/4`.
pub fn gv_rate(delta: f64) -> Result<f64> {
    if !(0.0..0.25).contains(&delta) {
        return Err(Error::OutOfRange(format!("delta = {delta} not in [0, 1/4)")));
    }
    Ok(1.0 - 2.0 * delta * 3f64.log2() - binary_entropy(2.0 * delta))
}

/// The `δ` at which the rate reaches zero, by bisection to within `tol`.
pub fn gv_rate_root(tol: f64) -> f64 {
    // R is decreasing on [0, 1/4): R(0) = 1 and R(0.2) < 0.
    let (mut lo, mut hi) = (0.0f64, 0.2f64);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if gv_rate(mid).expect("in range") > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rate_at_zero_is_one() {
        assert_eq!(gv_rate(0.0).unwrap(), 1.0);
    }

    #[test]
    fn rate_at_five_percent() {
        // mpmath at 40 digits: 0.37250815633860316060...
        assert!((gv_rate(0.05).unwrap() - 0.372_508_156_338_603_2).abs() < 1e-12);
    }

    #[test]
    fn root_location() {
        let root = gv_rate_root(1e-9);
        // mpmath findroot: 0.094644812457615881...
        assert!((root - 0.094_644_812_457_615_88).abs() < 1e-8);
        assert!(gv_rate(root - 1e-6).unwrap() > 0.0);
        assert!(gv_rate(root + 1e-6).unwrap() < 0.0);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(gv_rate(-0.01).is_err());
        assert!(gv_rate(0.25).is_err());
        assert!(gv_rate(f64::NAN).is_err());
    }

    #[test]
    fn entropy_edges() {
        assert_eq!(binary_entropy(0.0), 0.0);
        assert!((binary_entropy(0.5) - 1.0).abs() < 1e-15);
    }
}
