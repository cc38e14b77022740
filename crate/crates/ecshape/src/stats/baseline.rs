//! Non-topological field summaries used as comparison baselines.

use crate::error::{Error, Result};
use crate::types::GridField;

/// Moran's I spatial autocorrelation of a 2D field with rook-adjacency
/// weights (up/down/left/right, weight 1, no wraparound):
/// `I = (N / W) * sum_ij w_ij z_i z_j / sum_i z_i^2` with `z = v - mean`.
///
/// A 4x4 checkerboard is perfectly anti-correlated and evaluates to
/// exactly -1.
pub fn morans_i(field: &GridField) -> Result<f64> {
    if field.ndim() != 2 {
        return Err(Error::UnsupportedDims(field.ndim()));
    }
    let (lo, hi) = field.value_range();
    if lo == hi {
        return Err(Error::ConstantField);
    }
    let rows = field.dims()[0];
    let cols = field.dims()[1];
    let v = field.values();
    let n = v.len() as f64;
    let mean = v.iter().sum::<f64>() / n;
    let z: Vec<f64> = v.iter().map(|x| x - mean).collect();
    let ss: f64 = z.iter().map(|x| x * x).sum();

    let mut cross = 0.0;
    let mut pairs = 0usize;
    for i in 0..rows {
        for j in 0..cols {
            let a = z[i * cols + j];
            if i + 1 < rows {
                cross += 2.0 * a * z[(i + 1) * cols + j];
                pairs += 1;
            }
            if j + 1 < cols {
                cross += 2.0 * a * z[i * cols + j + 1];
                pairs += 1;
            }
        }
    }
    let w = 2.0 * pairs as f64;
    Ok((n / w) * (cross / ss))
}

/// Magnitude spectrum of the unnormalized discrete Fourier transform of a
/// 1D or 2D field; the DC component sits at index 0 along each axis.
///
/// This is a direct O(N^2)-per-axis evaluation, so the total size is
/// capped at 2^18 values. Parseval's identity,
/// `sum |F|^2 / N == sum |f|^2`, holds to roundoff.
pub fn dft_magnitude(field: &GridField) -> Result<GridField> {
    if field.ndim() > 2 {
        return Err(Error::UnsupportedDims(field.ndim()));
    }
    const LIMIT: usize = 1 << 18;
    if field.len() > LIMIT {
        return Err(Error::TooLarge {
            size: field.len(),
            limit: LIMIT,
        });
    }
    let (rows, cols) = match field.dims() {
        [n] => (1usize, *n),
        [r, c] => (*r, *c),
        _ => unreachable!("rank checked above"),
    };
    let mut re: Vec<f64> = field.values().to_vec();
    let mut im = vec![0.0; re.len()];
    transform_axis(&mut re, &mut im, rows, cols, true);
    if rows > 1 {
        transform_axis(&mut re, &mut im, rows, cols, false);
    }
    let magnitude: Vec<f64> = re
        .iter()
        .zip(&im)
        .map(|(r, i)| (r * r + i * i).sqrt())
        .collect();
    GridField::new(field.dims().to_vec(), magnitude)
}

/// Naive DFT along rows (`along_cols = true` transforms each row of
/// length `cols`) or down columns.
fn transform_axis(re: &mut [f64], im: &mut [f64], rows: usize, cols: usize, along_cols: bool) {
    let (outer, inner) = if along_cols { (rows, cols) } else { (cols, rows) };
    let idx = |o: usize, i: usize| if along_cols { o * cols + i } else { i * cols + o };
    let mut out_re = vec![0.0; inner];
    let mut out_im = vec![0.0; inner];
    for o in 0..outer {
        for (k, (our, oui)) in out_re.iter_mut().zip(out_im.iter_mut()).enumerate() {
            let mut sr = 0.0;
            let mut si = 0.0;
            for n in 0..inner {
                let angle = -std::f64::consts::TAU * (k as f64 * n as f64) / inner as f64;
                let (s, c) = angle.sin_cos();
                let x = re[idx(o, n)];
                let y = im[idx(o, n)];
                sr += x * c - y * s;
                si += x * s + y * c;
            }
            *our = sr;
            *oui = si;
        }
        for n in 0..inner {
            re[idx(o, n)] = out_re[n];
            im[idx(o, n)] = out_im[n];
        }
    }
}
