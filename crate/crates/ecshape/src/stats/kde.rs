//! Gaussian kernel density estimation on a regular grid.

use crate::error::{Error, Result};
use crate::types::{GridField, PointCloud2D};

/// A rectangular grid of `nx * ny` cells over `[x0, x1] x [y0, y1]`;
/// densities are evaluated at cell centers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec2D {
    nx: usize,
    ny: usize,
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl GridSpec2D {
    pub fn new(nx: usize, ny: usize, x0: f64, x1: f64, y0: f64, y1: f64) -> Result<Self> {
        if nx == 0 || ny == 0 {
            return Err(Error::InvalidParameter("grid needs at least one cell".into()));
        }
        if ![x0, x1, y0, y1].iter().all(|v| v.is_finite()) {
            return Err(Error::NonFiniteValue("grid bounds"));
        }
        if x0 >= x1 || y0 >= y1 {
            return Err(Error::DegenerateRange);
        }
        Ok(Self { nx, ny, x0, x1, y0, y1 })
    }

    /// The grid of `nx * ny` cells that covers the cloud's bounding box
    /// padded by exactly three bandwidths on every side.
    pub fn covering(cloud: &PointCloud2D, bandwidth: f64, nx: usize, ny: usize) -> Result<Self> {
        if !bandwidth.is_finite() || bandwidth <= 0.0 {
            return Err(Error::InvalidParameter("bandwidth must be positive".into()));
        }
        let (xmin, xmax, ymin, ymax) = cloud.bounding_box();
        let pad = 3.0 * bandwidth;
        Self::new(nx, ny, xmin - pad, xmax + pad, ymin - pad, ymax + pad)
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn bounds(&self) -> (f64, f64, f64, f64) {
        (self.x0, self.x1, self.y0, self.y1)
    }

    pub fn cell_size(&self) -> (f64, f64) {
        (
            (self.x1 - self.x0) / self.nx as f64,
            (self.y1 - self.y0) / self.ny as f64,
        )
    }

    pub fn cell_center(&self, ix: usize, iy: usize) -> (f64, f64) {
        let (cw, ch) = self.cell_size();
        (
            self.x0 + (ix as f64 + 0.5) * cw,
            self.y0 + (iy as f64 + 0.5) * ch,
        )
    }
}

/// Gaussian kernel density of the cloud sampled at the cell centers of
/// `grid`, as a field with dims `[nx, ny]` (x varies along the first
/// axis).
///
/// The density is `1 / (N 2 pi h^2) * sum_p exp(-|c - p|^2 / (2 h^2))`.
/// The grid must cover the cloud's bounding box padded by three
/// bandwidths on every side; with that margin, and cell sizes no larger
/// than the bandwidth, the total mass `sum f * cell_area` lands within
/// `1e-2` of one.
pub fn gaussian_kde_grid(
    cloud: &PointCloud2D,
    bandwidth: f64,
    grid: &GridSpec2D,
) -> Result<GridField> {
    if !bandwidth.is_finite() || bandwidth <= 0.0 {
        return Err(Error::InvalidParameter("bandwidth must be positive".into()));
    }
    let (xmin, xmax, ymin, ymax) = cloud.bounding_box();
    let pad = 3.0 * bandwidth;
    if grid.x0 > xmin - pad || grid.x1 < xmax + pad || grid.y0 > ymin - pad || grid.y1 < ymax + pad
    {
        return Err(Error::GridTooSmall);
    }
    let norm = 1.0 / (cloud.len() as f64 * std::f64::consts::TAU * bandwidth * bandwidth);
    let inv_two_h2 = 1.0 / (2.0 * bandwidth * bandwidth);
    let mut values = Vec::with_capacity(grid.nx * grid.ny);
    for ix in 0..grid.nx {
        for iy in 0..grid.ny {
            let (cx, cy) = grid.cell_center(ix, iy);
            let mut sum = 0.0;
            for &(px, py) in cloud.points() {
                let dx = cx - px;
                let dy = cy - py;
                sum += (-(dx * dx + dy * dy) * inv_two_h2).exp();
            }
            values.push(norm * sum);
        }
    }
    GridField::new(vec![grid.nx, grid.ny], values)
}
