//! Feature matrices and spectral projection of curve collections.

use crate::error::{Error, Result};
use crate::linalg;
use crate::types::ECCurve;

/// Samples as rows of `f64` features, all the same width.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureMatrix {
    rows: usize,
    cols: usize,
    values: Vec<f64>,
}

impl FeatureMatrix {
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidParameter("feature matrix needs rows".into()));
        }
        let cols = rows[0].len();
        if cols == 0 {
            return Err(Error::InvalidParameter("feature rows must be nonempty".into()));
        }
        let mut values = Vec::with_capacity(rows.len() * cols);
        for row in &rows {
            if row.len() != cols {
                return Err(Error::DimMismatch {
                    expected: cols,
                    actual: row.len(),
                });
            }
            values.extend_from_slice(row);
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFiniteValue("feature matrix"));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            values,
        })
    }

    /// Stacks EC curves as rows; all curves must share the exact same
    /// threshold sequence.
    pub fn from_curves(curves: &[ECCurve]) -> Result<Self> {
        if curves.is_empty() {
            return Err(Error::InvalidParameter("feature matrix needs rows".into()));
        }
        let reference = curves[0].thresholds();
        for c in curves {
            if c.thresholds() != reference {
                return Err(Error::ThresholdMismatch);
            }
        }
        Self::from_rows(
            curves
                .iter()
                .map(|c| c.chi().iter().map(|&x| x as f64).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.values[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.values[row * self.cols..(row + 1) * self.cols]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Result of projecting samples onto their top principal directions.
#[derive(Debug, Clone, PartialEq)]
pub struct Projection {
    rows: usize,
    k: usize,
    scores: Vec<f64>,
    singular_values: Vec<f64>,
}

impl Projection {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Score of sample `row` along component `comp`.
    pub fn score(&self, row: usize, comp: usize) -> f64 {
        self.scores[row * self.k + comp]
    }

    pub fn score_row(&self, row: usize) -> &[f64] {
        &self.scores[row * self.k..(row + 1) * self.k]
    }

    /// Singular values of the centered feature matrix, largest first.
    pub fn singular_values(&self) -> &[f64] {
        &self.singular_values
    }
}

/// Projects the rows of `x` onto the top `k` principal directions of the
/// column-centered matrix, `1 <= k <= min(rows, cols)`.
///
/// The decomposition goes through a Jacobi eigensolve of whichever Gram
/// matrix is smaller, `X X^T` or `X^T X`. Each right singular vector is
/// oriented so its largest-magnitude entry (first such index on ties) is
/// positive, which pins the sign of every score. Directions whose
/// singular value underflows the numerical rank cutoff get zero scores.
pub fn svd_project(x: &FeatureMatrix, k: usize) -> Result<Projection> {
    let n = x.rows();
    let m = x.cols();
    if k == 0 || k > n.min(m) {
        return Err(Error::InvalidParameter(format!(
            "k = {k} must be in 1..=min(rows, cols) = {}",
            n.min(m)
        )));
    }
    let means: Vec<f64> = (0..m)
        .map(|j| (0..n).map(|i| x.get(i, j)).sum::<f64>() / n as f64)
        .collect();
    let mut centered = Vec::with_capacity(n * m);
    for i in 0..n {
        for (j, mean) in means.iter().enumerate() {
            centered.push(x.get(i, j) - mean);
        }
    }
    let at = |i: usize, j: usize| centered[i * m + j];

    let mut scores = vec![0.0; n * k];
    let mut singular_values = vec![0.0; k];

    if n <= m {
        // Gram matrix of rows: eigenvectors are the left singular vectors.
        let mut g = vec![0.0; n * n];
        for a in 0..n {
            for b in a..n {
                let s: f64 = (0..m).map(|j| at(a, j) * at(b, j)).sum();
                g[a * n + b] = s;
                g[b * n + a] = s;
            }
        }
        let (eig, u) = linalg::jacobi_eigen(n, &g);
        let sigma: Vec<f64> = eig.iter().map(|&l| l.max(0.0).sqrt()).collect();
        let cutoff = rank_cutoff(&sigma, n.max(m));
        for j in 0..k {
            singular_values[j] = sigma[j];
            if sigma[j] <= cutoff {
                continue;
            }
            // Right singular vector v_j = X^T u_j / sigma_j decides the sign.
            let mut v = vec![0.0; m];
            for (col, value) in v.iter_mut().enumerate() {
                *value = (0..n).map(|i| at(i, col) * u[i * n + j]).sum::<f64>() / sigma[j];
            }
            let flip = orientation(&v);
            for i in 0..n {
                scores[i * k + j] = flip * sigma[j] * u[i * n + j];
            }
        }
    } else {
        let mut g = vec![0.0; m * m];
        for a in 0..m {
            for b in a..m {
                let s: f64 = (0..n).map(|i| at(i, a) * at(i, b)).sum();
                g[a * m + b] = s;
                g[b * m + a] = s;
            }
        }
        let (eig, v) = linalg::jacobi_eigen(m, &g);
        let sigma: Vec<f64> = eig.iter().map(|&l| l.max(0.0).sqrt()).collect();
        let cutoff = rank_cutoff(&sigma, n.max(m));
        for j in 0..k {
            singular_values[j] = sigma[j];
            if sigma[j] <= cutoff {
                continue;
            }
            let vj: Vec<f64> = (0..m).map(|row| v[row * m + j]).collect();
            let flip = orientation(&vj);
            for i in 0..n {
                let s: f64 = (0..m).map(|col| at(i, col) * vj[col]).sum();
                scores[i * k + j] = flip * s;
            }
        }
    }

    Ok(Projection {
        rows: n,
        k,
        scores,
        singular_values,
    })
}

fn rank_cutoff(sigma: &[f64], dim: usize) -> f64 {
    sigma.first().copied().unwrap_or(0.0) * dim as f64 * f64::EPSILON
}

/// `+1` or `-1` so that the largest-magnitude entry (first on ties) of
/// `v` becomes positive.
fn orientation(v: &[f64]) -> f64 {
    let mut best = 0usize;
    for (i, value) in v.iter().enumerate() {
        if value.abs() > v[best].abs() {
            best = i;
        }
    }
    if v[best] < 0.0 {
        -1.0
    } else {
        1.0
    }
}
