//! Dense symmetric linear algebra on row-major `f64` buffers.
//!
//! Only what the statistics layer needs: Cholesky factorization with
//! solves, SPD inversion, and a cyclic Jacobi eigendecomposition. Matrices
//! here are small (tens to a few hundred rows), so the simple O(n^3)
//! routines are plenty and keep the crate dependency-free.

use crate::error::{Error, Result};

/// Lower-triangular Cholesky factor of a symmetric matrix, row-major with
/// zeros above the diagonal. Fails with `SingularMatrix` when a pivot is
/// not safely positive.
pub(crate) fn cholesky(n: usize, a: &[f64]) -> Result<Vec<f64>> {
    debug_assert_eq!(a.len(), n * n);
    let max_diag = (0..n).map(|i| a[i * n + i].abs()).fold(0.0_f64, f64::max);
    let tol = n as f64 * f64::EPSILON * max_diag;
    let mut l = vec![0.0; n * n];
    for j in 0..n {
        let mut d = a[j * n + j];
        for k in 0..j {
            d -= l[j * n + k] * l[j * n + k];
        }
        if !d.is_finite() || d <= tol {
            return Err(Error::SingularMatrix);
        }
        let root = d.sqrt();
        l[j * n + j] = root;
        for i in (j + 1)..n {
            let mut s = a[i * n + j];
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = s / root;
        }
    }
    Ok(l)
}

/// Solves `L L^T x = b` given the Cholesky factor `L`.
pub(crate) fn cholesky_solve(n: usize, l: &[f64], b: &[f64]) -> Vec<f64> {
    debug_assert_eq!(b.len(), n);
    let mut y = vec![0.0; n];
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s -= l[i * n + k] * y[k];
        }
        y[i] = s / l[i * n + i];
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = y[i];
        for k in (i + 1)..n {
            s -= l[k * n + i] * x[k];
        }
        x[i] = s / l[i * n + i];
    }
    x
}

/// Inverse of a symmetric positive definite matrix via Cholesky, with the
/// result symmetrized exactly.
pub(crate) fn spd_inverse(n: usize, a: &[f64]) -> Result<Vec<f64>> {
    let l = cholesky(n, a)?;
    let mut inv = vec![0.0; n * n];
    let mut e = vec![0.0; n];
    for j in 0..n {
        e[j] = 1.0;
        let col = cholesky_solve(n, &l, &e);
        e[j] = 0.0;
        for i in 0..n {
            inv[i * n + j] = col[i];
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let m = 0.5 * (inv[i * n + j] + inv[j * n + i]);
            inv[i * n + j] = m;
            inv[j * n + i] = m;
        }
    }
    Ok(inv)
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in descending order and the matching orthonormal
/// eigenvectors as the columns of a row-major `n x n` matrix.
pub(crate) fn jacobi_eigen(n: usize, a_in: &[f64]) -> (Vec<f64>, Vec<f64>) {
    debug_assert_eq!(a_in.len(), n * n);
    let mut a = a_in.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let scale = a.iter().map(|x| x * x).sum::<f64>().sqrt().max(1e-300);
    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p * n + q] * a[p * n + q];
            }
        }
        if off.sqrt() <= 1e-14 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let eigvals: Vec<f64> = order.iter().map(|&j| a[j * n + j]).collect();
    let mut vecs = vec![0.0; n * n];
    for (col, &j) in order.iter().enumerate() {
        for i in 0..n {
            vecs[i * n + col] = v[i * n + j];
        }
    }
    (eigvals, vecs)
}
