//! Statistical feature extraction around Euler characteristic curves.
//!
//! Covariance and precision estimation turn multivariate time series into
//! partial correlation graphs; kernel density estimation turns point
//! clouds into fields; spectral projection and a linear classifier turn
//! collections of curves into low-dimensional scores and labels. The
//! [`baseline`] module holds the non-topological reference summaries used
//! for comparison.

pub mod baseline;
pub mod kde;
pub mod matrix;
pub mod project;
pub mod svm;

use crate::error::{Error, Result};
use crate::types::ECCurve;

/// Euclidean distance between two EC curves sampled at identical
/// thresholds: `sqrt(sum_i (chi_a[i] - chi_b[i])^2)`.
///
/// The threshold sequences must match exactly, value for value.
pub fn ec_distance(a: &ECCurve, b: &ECCurve) -> Result<f64> {
    if a.thresholds() != b.thresholds() {
        return Err(Error::ThresholdMismatch);
    }
    let sum: f64 = a
        .chi()
        .iter()
        .zip(b.chi())
        .map(|(&x, &y)| {
            let d = (x - y) as f64;
            d * d
        })
        .sum();
    Ok(sum.sqrt())
}
