//! Seeded synthetic data: reaction-diffusion fields, Gaussian time
//! series with a prescribed precision structure, and textured noise.
//!
//! Everything here draws from [`crate::rng::Rng`], so a seed pins the
//! output bit for bit.

use crate::error::{Error, Result};
use crate::linalg;
use crate::rng::Rng;
use crate::stats::matrix::SquareMatrix;
use crate::types::{GridField, TimeSeriesMatrix};

/// Parameters of the two-species reaction-diffusion system
/// `du/dt = D lap(u) + R (v - u)`, `dv/dt = D lap(v) + R (u - v)`
/// integrated by explicit Euler on an `n x n` periodic grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RdParams {
    /// Diffusion coefficient `D`, shared by both species.
    pub diffusion: f64,
    /// Coupling rate `R` pulling the species toward each other.
    pub reaction: f64,
    /// Grid side length `n`.
    pub grid: usize,
    /// Number of recorded snapshots `T`.
    pub snapshots: usize,
    /// Euler steps integrated between consecutive snapshots.
    pub stride: usize,
    /// Time step; must satisfy `dt <= dx^2 / (4 D)`.
    pub dt: f64,
    /// Grid spacing.
    pub dx: f64,
    /// Seed for the uniform initial conditions.
    pub seed: u64,
}

impl RdParams {
    /// Defaults: `dt = 0.04`, `dx = 1`, 4 steps per snapshot. The step
    /// size clears the stability bound for diffusion up to `6.25`.
    pub fn new(diffusion: f64, reaction: f64, grid: usize, snapshots: usize, seed: u64) -> Self {
        RdParams {
            diffusion,
            reaction,
            grid,
            snapshots,
            stride: 4,
            dt: 0.04,
            dx: 1.0,
            seed,
        }
    }

    /// Largest stable explicit Euler step, `dx^2 / (4 D)`.
    pub fn stability_bound(&self) -> f64 {
        self.dx * self.dx / (4.0 * self.diffusion)
    }

    fn validate(&self) -> Result<()> {
        if !self.diffusion.is_finite() || self.diffusion <= 0.0 {
            return Err(Error::InvalidParameter("diffusion must be positive".into()));
        }
        if !self.reaction.is_finite() || self.reaction < 0.0 {
            return Err(Error::InvalidParameter(
                "reaction must be finite and >= 0".into(),
            ));
        }
        if self.grid < 4 {
            return Err(Error::InvalidParameter("grid must be at least 4".into()));
        }
        if self.snapshots < 2 {
            return Err(Error::InvalidParameter(
                "at least 2 snapshots are required".into(),
            ));
        }
        if self.stride == 0 {
            return Err(Error::InvalidParameter("stride must be at least 1".into()));
        }
        if !self.dt.is_finite() || self.dt <= 0.0 || !self.dx.is_finite() || self.dx <= 0.0 {
            return Err(Error::InvalidParameter("dt and dx must be positive".into()));
        }
        let bound = self.stability_bound();
        if self.dt > bound {
            return Err(Error::UnstableStep { dt: self.dt, bound });
        }
        Ok(())
    }
}

/// Integrates the reaction-diffusion system from i.i.d. uniform `[0, 1)`
/// initial conditions (all of `u` drawn first, then `v`) and records a
/// snapshot after every `stride` steps.
///
/// Returns the `u` and `v` histories as fields with dims `[n, n, T]`
/// (time varies fastest). The periodic 5-point Laplacian conserves the
/// spatial mean of `u + v` exactly, and of `u` alone when `R = 0`, up to
/// roundoff.
pub fn rd_simulate(params: &RdParams) -> Result<(GridField, GridField)> {
    params.validate()?;
    let n = params.grid;
    let t_count = params.snapshots;
    let mut rng = Rng::new(params.seed);
    let mut u: Vec<f64> = (0..n * n).map(|_| rng.next_f64()).collect();
    let mut v: Vec<f64> = (0..n * n).map(|_| rng.next_f64()).collect();
    let mut next_u = vec![0.0; n * n];
    let mut next_v = vec![0.0; n * n];

    let d = params.diffusion;
    let r = params.reaction;
    let dt = params.dt;
    let inv_dx2 = 1.0 / (params.dx * params.dx);

    let mut u_out = vec![0.0; n * n * t_count];
    let mut v_out = vec![0.0; n * n * t_count];
    for t in 0..t_count {
        for _ in 0..params.stride {
            for i in 0..n {
                let up = if i == 0 { n - 1 } else { i - 1 };
                let dn = if i + 1 == n { 0 } else { i + 1 };
                for j in 0..n {
                    let lf = if j == 0 { n - 1 } else { j - 1 };
                    let rt = if j + 1 == n { 0 } else { j + 1 };
                    let idx = i * n + j;
                    let uc = u[idx];
                    let vc = v[idx];
                    let lap_u =
                        (u[up * n + j] + u[dn * n + j] + u[i * n + lf] + u[i * n + rt] - 4.0 * uc)
                            * inv_dx2;
                    let lap_v =
                        (v[up * n + j] + v[dn * n + j] + v[i * n + lf] + v[i * n + rt] - 4.0 * vc)
                            * inv_dx2;
                    next_u[idx] = uc + dt * (d * lap_u + r * (vc - uc));
                    next_v[idx] = vc + dt * (d * lap_v + r * (uc - vc));
                }
            }
            std::mem::swap(&mut u, &mut next_u);
            std::mem::swap(&mut v, &mut next_v);
        }
        for idx in 0..n * n {
            u_out[idx * t_count + t] = u[idx];
            v_out[idx * t_count + t] = v[idx];
        }
    }
    Ok((
        GridField::new(vec![n, n, t_count], u_out)?,
        GridField::new(vec![n, n, t_count], v_out)?,
    ))
}

/// Draws `m >= 2` i.i.d. samples from the zero-mean Gaussian whose
/// precision (inverse covariance) matrix is given: each row is `L z` for
/// standard normal `z`, where `L L^T` is the Cholesky factor of the
/// covariance. Fails with `NotSpd` unless the precision matrix is
/// symmetric positive definite.
pub fn sample_gaussian_timeseries(
    precision: &SquareMatrix,
    m: usize,
    seed: u64,
) -> Result<TimeSeriesMatrix> {
    if m < 2 {
        return Err(Error::InvalidParameter(
            "at least 2 samples are required".into(),
        ));
    }
    if !precision.is_symmetric(1e-9) {
        return Err(Error::NotSpd);
    }
    let n = precision.order();
    let cov = linalg::spd_inverse(n, precision.values()).map_err(|_| Error::NotSpd)?;
    let l = linalg::cholesky(n, &cov).map_err(|_| Error::NotSpd)?;
    let mut rng = Rng::new(seed);
    let mut values = Vec::with_capacity(m * n);
    let mut z = vec![0.0; n];
    for _ in 0..m {
        for zi in z.iter_mut() {
            *zi = rng.next_gaussian();
        }
        for i in 0..n {
            let mut s = 0.0;
            for k in 0..=i {
                s += l[i * n + k] * z[k];
            }
            values.push(s);
        }
    }
    TimeSeriesMatrix::new(m, n, values)
}

/// The two texture families: both are Gaussian white noise smoothed by a
/// periodic Gaussian kernel, differing only in kernel width.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TextureKind {
    /// Kernel sigma 4: long-range correlations, few large blobs.
    Smooth,
    /// Kernel sigma 1: short-range correlations, many small blobs.
    Rough,
}

impl TextureKind {
    pub fn sigma(self) -> f64 {
        match self {
            TextureKind::Smooth => 4.0,
            TextureKind::Rough => 1.0,
        }
    }
}

/// An `n x n` textured noise field: white Gaussian noise convolved with a
/// Gaussian kernel of the kind's sigma (truncated at radius `3 sigma`,
/// wrapping periodically), then standardized to mean 0 and population
/// variance 1. Needs `n >= 16` so a field fits several kernel widths.
pub fn texture_field(kind: TextureKind, n: usize, seed: u64) -> Result<GridField> {
    if n < 16 {
        return Err(Error::InvalidParameter(
            "texture fields need n >= 16".into(),
        ));
    }
    let sigma = kind.sigma();
    let radius = (3.0 * sigma).ceil() as usize;
    let kernel: Vec<f64> = (0..=2 * radius)
        .map(|i| {
            let d = i as f64 - radius as f64;
            (-d * d / (2.0 * sigma * sigma)).exp()
        })
        .collect();
    let ksum: f64 = kernel.iter().sum();
    let kernel: Vec<f64> = kernel.iter().map(|k| k / ksum).collect();

    let mut rng = Rng::new(seed);
    let noise: Vec<f64> = (0..n * n).map(|_| rng.next_gaussian()).collect();

    // The square-truncated 2D Gaussian kernel separates exactly into two
    // 1D passes. n >= 16 > radius keeps the wrapped index non-negative.
    let mut rows_done = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0.0;
            for (o, k) in kernel.iter().enumerate() {
                let col = (j + o + n - radius) % n;
                s += k * noise[i * n + col];
            }
            rows_done[i * n + j] = s;
        }
    }
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0.0;
            for (o, k) in kernel.iter().enumerate() {
                let row = (i + o + n - radius) % n;
                s += k * rows_done[row * n + j];
            }
            out[i * n + j] = s;
        }
    }

    let count = (n * n) as f64;
    let mean = out.iter().sum::<f64>() / count;
    let var = out.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / count;
    let sd = var.sqrt();
    let values: Vec<f64> = out.iter().map(|x| (x - mean) / sd).collect();
    GridField::new(vec![n, n], values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snapshot_mean(field: &GridField, t: usize) -> f64 {
        let dims = field.dims();
        let (n2, t_count) = (dims[0] * dims[1], dims[2]);
        let mut s = 0.0;
        for idx in 0..n2 {
            s += field.values()[idx * t_count + t];
        }
        s / n2 as f64
    }

    #[test]
    fn unstable_step_is_rejected() {
        let mut p = RdParams::new(3.0, 0.8, 16, 5, 1);
        p.dt = 0.1;
        let err = rd_simulate(&p).unwrap_err();
        assert!(matches!(err, Error::UnstableStep { .. }));
        // Equality with the bound is allowed.
        p.dt = p.stability_bound();
        assert!(rd_simulate(&p).is_ok());
    }

    #[test]
    fn simulation_is_deterministic_and_shaped() {
        let p = RdParams::new(3.0, 0.8, 8, 4, 7);
        let (u1, v1) = rd_simulate(&p).unwrap();
        let (u2, _) = rd_simulate(&p).unwrap();
        assert_eq!(u1, u2);
        assert_eq!(u1.dims(), &[8, 8, 4]);
        assert_eq!(v1.dims(), &[8, 8, 4]);
    }

    #[test]
    fn mean_of_u_is_conserved_without_reaction() {
        let p = RdParams::new(3.0, 0.0, 16, 6, 3);
        let (u, _) = rd_simulate(&p).unwrap();
        let m0 = snapshot_mean(&u, 0);
        for t in 1..6 {
            assert!(
                (snapshot_mean(&u, t) - m0).abs() <= 1e-10,
                "drift at t = {t}"
            );
        }
    }

    #[test]
    fn mean_of_u_plus_v_is_always_conserved() {
        let p = RdParams::new(6.0, 0.8, 16, 6, 9);
        let (u, v) = rd_simulate(&p).unwrap();
        let m0 = snapshot_mean(&u, 0) + snapshot_mean(&v, 0);
        for t in 1..6 {
            let m = snapshot_mean(&u, t) + snapshot_mean(&v, t);
            assert!((m - m0).abs() <= 1e-10, "drift at t = {t}");
        }
    }

    #[test]
    fn values_stay_in_the_unit_interval() {
        let p = RdParams::new(3.0, 0.8, 12, 8, 11);
        let (u, v) = rd_simulate(&p).unwrap();
        for &x in u.values().iter().chain(v.values()) {
            assert!((0.0..=1.0).contains(&x));
        }
    }

    #[test]
    fn gaussian_samples_recover_the_covariance() {
        let prec = SquareMatrix::new(2, vec![2.0, -1.0, -1.0, 2.0]).unwrap();
        let ts = sample_gaussian_timeseries(&prec, 40_000, 5).unwrap();
        let cov = crate::stats::matrix::covariance(&ts);
        // Target covariance is the inverse: [[2/3, 1/3], [1/3, 2/3]].
        assert!((cov.get(0, 0) - 2.0 / 3.0).abs() < 0.02, "{}", cov.get(0, 0));
        assert!((cov.get(0, 1) - 1.0 / 3.0).abs() < 0.02, "{}", cov.get(0, 1));
        assert!((cov.get(1, 1) - 2.0 / 3.0).abs() < 0.02, "{}", cov.get(1, 1));
    }

    #[test]
    fn non_spd_precision_is_rejected() {
        let asym = SquareMatrix::new(2, vec![1.0, 0.5, 0.0, 1.0]).unwrap();
        assert_eq!(
            sample_gaussian_timeseries(&asym, 10, 0).unwrap_err(),
            Error::NotSpd
        );
        let indef = SquareMatrix::new(2, vec![1.0, 2.0, 2.0, 1.0]).unwrap();
        assert_eq!(
            sample_gaussian_timeseries(&indef, 10, 0).unwrap_err(),
            Error::NotSpd
        );
    }

    #[test]
    fn textures_are_standardized_and_deterministic() {
        for kind in [TextureKind::Smooth, TextureKind::Rough] {
            let a = texture_field(kind, 32, 13).unwrap();
            let b = texture_field(kind, 32, 13).unwrap();
            assert_eq!(a, b);
            let n = a.len() as f64;
            let mean = a.values().iter().sum::<f64>() / n;
            let var = a.values().iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n;
            assert!(mean.abs() < 1e-12, "mean {mean}");
            assert!((var - 1.0).abs() < 1e-12, "var {var}");
        }
    }

    #[test]
    fn smooth_textures_correlate_longer_than_rough() {
        let n = 48;
        let lag_corr = |f: &GridField, lag: usize| {
            let v = f.values();
            let mut s = 0.0;
            for i in 0..n {
                for j in 0..n {
                    s += v[i * n + j] * v[i * n + (j + lag) % n];
                }
            }
            s / (n * n) as f64
        };
        let smooth = texture_field(TextureKind::Smooth, n, 3).unwrap();
        let rough = texture_field(TextureKind::Rough, n, 3).unwrap();
        assert!(lag_corr(&smooth, 3) > lag_corr(&rough, 3) + 0.2);
    }

    #[test]
    fn texture_size_is_validated() {
        assert!(texture_field(TextureKind::Rough, 8, 0).is_err());
    }
}
