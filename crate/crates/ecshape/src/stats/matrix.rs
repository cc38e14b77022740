//! Covariance, precision matrices, and partial correlation graphs.

use crate::error::{Error, Result};
use crate::linalg;
use crate::types::{TimeSeriesMatrix, WeightedGraph};

/// A dense square matrix of finite reals, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    values: Vec<f64>,
}

impl SquareMatrix {
    pub fn new(n: usize, values: Vec<f64>) -> Result<Self> {
        if values.len() != n * n {
            return Err(Error::LengthMismatch {
                what: "square matrix",
                expected: n * n,
                actual: values.len(),
            });
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFiniteValue("square matrix"));
        }
        Ok(Self { n, values })
    }

    pub fn identity(n: usize) -> Self {
        let mut values = vec![0.0; n * n];
        for i in 0..n {
            values[i * n + i] = 1.0;
        }
        Self { n, values }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n + j]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// True when `|a_ij - a_ji| <= rel_tol * max|a|` for all pairs.
    pub fn is_symmetric(&self, rel_tol: f64) -> bool {
        let scale = self.values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        let tol = rel_tol * scale;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if (self.get(i, j) - self.get(j, i)).abs() > tol {
                    return false;
                }
            }
        }
        true
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }
}

/// Unbiased sample covariance of the columns of `ts` (divisor `m - 1`).
pub fn covariance(ts: &TimeSeriesMatrix) -> SquareMatrix {
    let m = ts.rows();
    let n = ts.cols();
    let means: Vec<f64> = (0..n).map(|j| ts.column(j).sum::<f64>() / m as f64).collect();
    let mut values = vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            let mut s = 0.0;
            for r in 0..m {
                s += (ts.get(r, i) - means[i]) * (ts.get(r, j) - means[j]);
            }
            let c = s / (m - 1) as f64;
            values[i * n + j] = c;
            values[j * n + i] = c;
        }
    }
    SquareMatrix { n, values }
}

/// Default ridge added before inversion: `1e-8 * trace / n`.
pub fn default_ridge(cov: &SquareMatrix) -> f64 {
    1e-8 * cov.trace() / cov.order() as f64
}

/// Inverse of `cov + ridge * I` via Cholesky, symmetrized exactly.
///
/// Fails with `NotSymmetric` when `cov` is not symmetric to a relative
/// `1e-9`, and with `SingularMatrix` when the ridged matrix is still not
/// positive definite.
pub fn precision_matrix(cov: &SquareMatrix, ridge: f64) -> Result<SquareMatrix> {
    if !ridge.is_finite() || ridge < 0.0 {
        return Err(Error::InvalidParameter("ridge must be finite and >= 0".into()));
    }
    if !cov.is_symmetric(1e-9) {
        return Err(Error::NotSymmetric);
    }
    let n = cov.order();
    let mut a = cov.values().to_vec();
    for i in 0..n {
        a[i * n + i] += ridge;
    }
    let inv = linalg::spd_inverse(n, &a)?;
    Ok(SquareMatrix { n, values: inv })
}

/// Complete graph whose edge weights are absolute partial correlations,
/// `|p_ij| / sqrt(p_ii * p_jj)` clamped to `[0, 1]`, read off a precision
/// matrix. Edges are listed in lexicographic `(i, j)` order with `i < j`.
pub fn partial_correlation_graph(prec: &SquareMatrix) -> Result<WeightedGraph> {
    let n = prec.order();
    for i in 0..n {
        if prec.get(i, i) <= 0.0 {
            return Err(Error::NonpositiveDiagonal(i));
        }
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    let mut weights = Vec::with_capacity(edges.capacity());
    for i in 0..n {
        for j in (i + 1)..n {
            let w = (-prec.get(i, j) / (prec.get(i, i) * prec.get(j, j)).sqrt()).abs();
            edges.push((i, j));
            weights.push(w.clamp(0.0, 1.0));
        }
    }
    WeightedGraph::new(n, edges, Some(weights), None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covariance_of_anticorrelated_columns() {
        let ts = TimeSeriesMatrix::new(3, 2, vec![1.0, 3.0, 2.0, 2.0, 3.0, 1.0]).unwrap();
        let cov = covariance(&ts);
        assert!((cov.get(0, 0) - 1.0).abs() < 1e-15);
        assert!((cov.get(1, 1) - 1.0).abs() < 1e-15);
        assert!((cov.get(0, 1) + 1.0).abs() < 1e-15);
        assert_eq!(cov.get(0, 1), cov.get(1, 0));
    }

    #[test]
    fn precision_of_diagonal_covariance() {
        let cov = SquareMatrix::new(2, vec![1.0, 0.0, 0.0, 4.0]).unwrap();
        let prec = precision_matrix(&cov, 0.0).unwrap();
        assert!((prec.get(0, 0) - 1.0).abs() < 1e-12);
        assert!((prec.get(1, 1) - 0.25).abs() < 1e-12);
        assert_eq!(prec.get(0, 1), 0.0);
    }

    #[test]
    fn ridge_rescues_a_singular_covariance() {
        let cov = SquareMatrix::new(2, vec![1.0, 1.0, 1.0, 1.0]).unwrap();
        assert_eq!(precision_matrix(&cov, 0.0).unwrap_err(), Error::SingularMatrix);
        assert!(precision_matrix(&cov, 1e-6).is_ok());
    }

    #[test]
    fn asymmetry_is_rejected() {
        let cov = SquareMatrix::new(2, vec![1.0, 0.5, 0.3, 1.0]).unwrap();
        assert_eq!(precision_matrix(&cov, 0.0).unwrap_err(), Error::NotSymmetric);
    }

    #[test]
    fn partial_correlations_from_known_precision() {
        let prec = SquareMatrix::new(2, vec![2.0, -1.0, -1.0, 2.0]).unwrap();
        let g = partial_correlation_graph(&prec).unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert!((g.edge_weights().unwrap()[0] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn partial_correlation_weights_stay_in_unit_interval() {
        // An extreme off-diagonal entry would give a ratio above 1 before
        // clamping.
        let prec = SquareMatrix::new(2, vec![1.0, -1.5, -1.5, 1.0]).unwrap();
        let g = partial_correlation_graph(&prec).unwrap();
        assert_eq!(g.edge_weights().unwrap()[0], 1.0);
    }

    #[test]
    fn nonpositive_diagonal_is_reported_with_index() {
        let prec = SquareMatrix::new(2, vec![1.0, 0.0, 0.0, -2.0]).unwrap();
        assert_eq!(
            partial_correlation_graph(&prec).unwrap_err(),
            Error::NonpositiveDiagonal(1)
        );
    }

    #[test]
    fn default_ridge_scales_with_trace() {
        let cov = SquareMatrix::new(2, vec![2.0, 0.0, 0.0, 4.0]).unwrap();
        assert!((default_ridge(&cov) - 1e-8 * 3.0).abs() < 1e-20);
    }

    #[test]
    fn complete_graph_shape() {
        let prec = SquareMatrix::identity(4);
        let g = partial_correlation_graph(&prec).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(g.edge_weights().unwrap().iter().all(|&w| w == 0.0));
    }
}
