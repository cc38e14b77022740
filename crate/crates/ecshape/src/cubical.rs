//! Filtrations of gridded scalar fields via cubical complexes.
//!
//! A thresholded field yields a set of active grid vertices; the complex
//! contains every axis-aligned unit cell (edge, square, cube) whose corner
//! vertices are all active. The Euler characteristic is then the
//! alternating sum of cell counts, and `beta_0` counts components under
//! face connectivity (2 neighbors per axis).
//!
//! Superlevel filtrations keep values `>= t` and sweep decreasing
//! thresholds; sublevel filtrations keep `<= t` with increasing ones. Both
//! comparisons are inclusive, so a value exactly at the threshold is kept.

use crate::error::{Error, Result};
use crate::graph::UnionFind;
use crate::types::{BettiCurve, Direction, ECCurve, FiltrationSpec, GridField};

/// Number of cells of each dimension in a cubical complex; entry `k`
/// counts the `k`-cells, so a 2D complex has `[vertices, edges, squares]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCounts {
    counts: Vec<usize>,
}

impl CellCounts {
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Alternating sum `sum_k (-1)^k counts[k]`.
    pub fn chi(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

fn check_mask(mask: &[bool], dims: &[usize]) -> Result<[usize; 3]> {
    if dims.is_empty() || dims.len() > 3 {
        return Err(Error::UnsupportedDims(dims.len()));
    }
    if dims.contains(&0) {
        return Err(Error::InvalidParameter(
            "grid dimensions must be positive".into(),
        ));
    }
    let len: usize = dims.iter().product();
    if mask.len() != len {
        return Err(Error::LengthMismatch {
            what: "vertex mask",
            expected: len,
            actual: mask.len(),
        });
    }
    let mut d3 = [1usize; 3];
    d3[..dims.len()].copy_from_slice(dims);
    Ok(d3)
}

/// Runs `f` over the anchor coordinates of every cell spanning the axes in
/// `subset` (bit 0 = first axis, bit 1 = second, bit 2 = third).
fn for_each_anchor(d3: [usize; 3], subset: u8, mut f: impl FnMut(usize, usize, usize)) {
    let lim = |d: usize, bit: u8| if subset & bit != 0 { d - 1 } else { d };
    for i in 0..lim(d3[0], 1) {
        for j in 0..lim(d3[1], 2) {
            for k in 0..lim(d3[2], 4) {
                f(i, j, k);
            }
        }
    }
}

fn corner_index(d3: [usize; 3], i: usize, j: usize, k: usize, corner: u8) -> usize {
    let ci = i + (corner & 1 != 0) as usize;
    let cj = j + (corner & 2 != 0) as usize;
    let ck = k + (corner & 4 != 0) as usize;
    (ci * d3[1] + cj) * d3[2] + ck
}

/// Vertices passing the threshold: `value >= level` for superlevel,
/// `value <= level` for sublevel, both inclusive.
pub fn threshold_mask(field: &GridField, level: f64, direction: Direction) -> Vec<bool> {
    field
        .values()
        .iter()
        .map(|&v| match direction {
            Direction::Superlevel => v >= level,
            Direction::Sublevel => v <= level,
        })
        .collect()
}

/// Counts the cells of every dimension in the cubical complex on the
/// active vertices: a cell is present exactly when all its corners are.
pub fn cell_counts(mask: &[bool], dims: &[usize]) -> Result<CellCounts> {
    let d3 = check_mask(mask, dims)?;
    let mut counts = vec![0usize; dims.len() + 1];
    for subset in 0u8..8 {
        let k = subset.count_ones() as usize;
        if k > dims.len() {
            continue;
        }
        let mut total = 0usize;
        for_each_anchor(d3, subset, |i, j, kk| {
            let mut corner = subset;
            loop {
                if !mask[corner_index(d3, i, j, kk, corner)] {
                    return;
                }
                if corner == 0 {
                    break;
                }
                corner = (corner - 1) & subset;
            }
            total += 1;
        });
        counts[k] += total;
    }
    Ok(CellCounts { counts })
}

/// Number of connected components of the active vertices under face
/// connectivity (2 neighbors per axis).
pub fn mask_betti0(mask: &[bool], dims: &[usize]) -> Result<usize> {
    let d3 = check_mask(mask, dims)?;
    let mut uf = UnionFind::new(mask.len());
    let mut active = 0usize;
    let mut merges = 0usize;
    for i in 0..d3[0] {
        for j in 0..d3[1] {
            for k in 0..d3[2] {
                let v = (i * d3[1] + j) * d3[2] + k;
                if !mask[v] {
                    continue;
                }
                active += 1;
                if i + 1 < d3[0] {
                    let w = ((i + 1) * d3[1] + j) * d3[2] + k;
                    if mask[w] && uf.union(v, w) {
                        merges += 1;
                    }
                }
                if j + 1 < d3[1] {
                    let w = (i * d3[1] + j + 1) * d3[2] + k;
                    if mask[w] && uf.union(v, w) {
                        merges += 1;
                    }
                }
                if k + 1 < d3[2] {
                    let w = (i * d3[1] + j) * d3[2] + k + 1;
                    if mask[w] && uf.union(v, w) {
                        merges += 1;
                    }
                }
            }
        }
    }
    Ok(active - merges)
}

/// Euler characteristic curve of a field, recomputing the cell counts of
/// each thresholded complex from scratch.
pub fn ec_curve_field(field: &GridField, spec: &FiltrationSpec) -> ECCurve {
    let mut chi = Vec::with_capacity(spec.len());
    for &t in spec.thresholds() {
        let mask = threshold_mask(field, t, spec.direction());
        let counts = cell_counts(&mask, field.dims()).expect("mask matches field dims");
        chi.push(counts.chi());
    }
    ECCurve::new(spec.thresholds().to_vec(), chi).expect("lengths match by construction")
}

/// Betti curve of a field: `beta_0` at every rank, plus `beta_1` for 1D
/// and 2D grids where it is determined by `beta_0 - chi` (such complexes
/// have no higher homology).
pub fn betti_curve_field(field: &GridField, spec: &FiltrationSpec) -> BettiCurve {
    let with_beta1 = field.ndim() <= 2;
    let mut beta0 = Vec::with_capacity(spec.len());
    let mut beta1 = Vec::with_capacity(if with_beta1 { spec.len() } else { 0 });
    for &t in spec.thresholds() {
        let mask = threshold_mask(field, t, spec.direction());
        let b0 = mask_betti0(&mask, field.dims()).expect("mask matches field dims");
        beta0.push(b0);
        if with_beta1 {
            let chi = cell_counts(&mask, field.dims())
                .expect("mask matches field dims")
                .chi();
            let b1 = usize::try_from(b0 as i64 - chi).expect("beta_1 must be non-negative");
            beta1.push(b1);
        }
    }
    BettiCurve::new(
        spec.thresholds().to_vec(),
        beta0,
        if with_beta1 { Some(beta1) } else { None },
    )
    .expect("lengths match by construction")
}

/// Euler characteristic curve in one sweep. Each cell activates at the
/// min (superlevel) or max (sublevel) of its corner values, so sorting the
/// activation values once and advancing a pointer per cell dimension
/// reproduces the per-threshold counts exactly.
pub fn ec_curve_incremental(field: &GridField, spec: &FiltrationSpec) -> ECCurve {
    let dims = field.dims();
    let mut d3 = [1usize; 3];
    d3[..dims.len()].copy_from_slice(dims);
    let values = field.values();
    let superlevel = spec.direction() == Direction::Superlevel;

    let mut activations: Vec<Vec<f64>> = vec![Vec::new(); dims.len() + 1];
    for subset in 0u8..8 {
        let k = subset.count_ones() as usize;
        if k > dims.len() {
            continue;
        }
        let acts = &mut activations[k];
        for_each_anchor(d3, subset, |i, j, kk| {
            let mut corner = subset;
            let mut act = values[corner_index(d3, i, j, kk, corner)];
            while corner != 0 {
                corner = (corner - 1) & subset;
                let v = values[corner_index(d3, i, j, kk, corner)];
                act = if superlevel { act.min(v) } else { act.max(v) };
            }
            acts.push(act);
        });
    }
    for acts in &mut activations {
        if superlevel {
            acts.sort_unstable_by(|a, b| b.total_cmp(a));
        } else {
            acts.sort_unstable_by(f64::total_cmp);
        }
    }

    let mut next = vec![0usize; activations.len()];
    let mut chi = Vec::with_capacity(spec.len());
    for &t in spec.thresholds() {
        let mut sum = 0i64;
        for (k, acts) in activations.iter().enumerate() {
            let ptr = &mut next[k];
            while *ptr < acts.len() {
                let passes = if superlevel {
                    acts[*ptr] >= t
                } else {
                    acts[*ptr] <= t
                };
                if !passes {
                    break;
                }
                *ptr += 1;
            }
            let count = *ptr as i64;
            sum += if k % 2 == 0 { count } else { -count };
        }
        chi.push(sum);
    }
    ECCurve::new(spec.thresholds().to_vec(), chi).expect("lengths match by construction")
}
