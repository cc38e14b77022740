//! Exact Betti numbers of small cubical complexes over Z/2.
//!
//! This is the slow, trustworthy reference the fast counting code is
//! checked against: build the full chain complex, compute boundary matrix
//! ranks by Gaussian elimination over Z/2, and read off
//! `beta_k = n_k - rank d_k - rank d_{k+1}`. Inputs are capped at
//! [`MAX_VERTICES`] grid vertices to keep the cubic-time elimination cheap.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Hard cap on grid vertices accepted by the oracle.
pub const MAX_VERTICES: usize = 10_000;

/// A cell is its anchor vertex (linear, row-major) plus the set of axes it
/// spans; bit `a` of `axes` marks extent along axis `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Cell {
    anchor: usize,
    axes: u8,
}

/// A finite cubical complex on a 1D, 2D, or 3D grid.
///
/// Cells are grouped by dimension; the complex is validated to be closed
/// (every face of every cell is present) and duplicate-free.
#[derive(Debug, Clone)]
pub struct CubicalComplex {
    dims: Vec<usize>,
    d3: [usize; 3],
    cells: Vec<Vec<Cell>>,
    index: Vec<HashMap<Cell, usize>>,
}

fn padded_dims(dims: &[usize]) -> Result<[usize; 3]> {
    if dims.is_empty() || dims.len() > 3 {
        return Err(Error::UnsupportedDims(dims.len()));
    }
    if dims.contains(&0) {
        return Err(Error::InvalidParameter(
            "grid dimensions must be positive".into(),
        ));
    }
    let size: usize = dims.iter().product();
    if size > MAX_VERTICES {
        return Err(Error::TooLarge {
            size,
            limit: MAX_VERTICES,
        });
    }
    let mut d3 = [1usize; 3];
    d3[..dims.len()].copy_from_slice(dims);
    Ok(d3)
}

impl CubicalComplex {
    /// Builds the complex of all unit cells whose corner vertices are all
    /// active in `mask` (row-major over `dims`).
    pub fn build_complex(mask: &[bool], dims: &[usize]) -> Result<Self> {
        let d3 = padded_dims(dims)?;
        let len: usize = dims.iter().product();
        if mask.len() != len {
            return Err(Error::LengthMismatch {
                what: "vertex mask",
                expected: len,
                actual: mask.len(),
            });
        }
        let rank = dims.len();
        let mut cells: Vec<Vec<Cell>> = vec![Vec::new(); rank + 1];
        for axes in 0u8..8 {
            let k = axes.count_ones() as usize;
            if k > rank {
                continue;
            }
            let lim = |d: usize, bit: u8| if axes & bit != 0 { d - 1 } else { d };
            for i in 0..lim(d3[0], 1) {
                for j in 0..lim(d3[1], 2) {
                    for kk in 0..lim(d3[2], 4) {
                        let anchor = (i * d3[1] + j) * d3[2] + kk;
                        let mut corner = axes;
                        let all_active = loop {
                            let ci = i + (corner & 1 != 0) as usize;
                            let cj = j + (corner & 2 != 0) as usize;
                            let ck = kk + (corner & 4 != 0) as usize;
                            if !mask[(ci * d3[1] + cj) * d3[2] + ck] {
                                break false;
                            }
                            if corner == 0 {
                                break true;
                            }
                            corner = (corner - 1) & axes;
                        };
                        if all_active {
                            cells[k].push(Cell { anchor, axes });
                        }
                    }
                }
            }
        }
        Ok(Self::assemble(dims.to_vec(), d3, cells))
    }

    /// Builds a complex from explicit cells given as (anchor coordinates,
    /// spanned axes) pairs, validating bounds, uniqueness, and closure.
    /// This is how complexes that cannot arise from a vertex mask, like a
    /// square with its interior missing, are constructed.
    pub fn from_cells(dims: Vec<usize>, specs: &[(Vec<usize>, Vec<usize>)]) -> Result<Self> {
        let d3 = padded_dims(&dims)?;
        let rank = dims.len();
        let mut cells: Vec<Vec<Cell>> = vec![Vec::new(); rank + 1];
        for (anchor, axes) in specs {
            if anchor.len() != rank {
                return Err(Error::DimMismatch {
                    expected: rank,
                    actual: anchor.len(),
                });
            }
            let mut axes_bits = 0u8;
            for &a in axes {
                if a >= rank {
                    return Err(Error::InvalidParameter(format!(
                        "axis {a} out of range for a rank-{rank} grid"
                    )));
                }
                if axes_bits & (1 << a) != 0 {
                    return Err(Error::InvalidParameter(format!("repeated axis {a}")));
                }
                axes_bits |= 1 << a;
            }
            let mut linear = 0usize;
            for a in 0..rank {
                let extent = ((axes_bits >> a) & 1) as usize;
                if anchor[a] + extent >= dims[a] {
                    return Err(Error::InvalidParameter(format!(
                        "cell anchored at {anchor:?} leaves the grid along axis {a}"
                    )));
                }
                linear = linear * d3[a] + anchor[a];
            }
            // Padded axes beyond the rank have extent 1 and coordinate 0.
            for a in rank..3 {
                linear *= d3[a];
            }
            cells[axes_bits.count_ones() as usize].push(Cell {
                anchor: linear,
                axes: axes_bits,
            });
        }
        let complex = Self::assemble(dims, d3, cells);
        complex.validate()?;
        Ok(complex)
    }

    fn assemble(dims: Vec<usize>, d3: [usize; 3], cells: Vec<Vec<Cell>>) -> Self {
        let index = cells
            .iter()
            .map(|list| {
                list.iter()
                    .enumerate()
                    .map(|(i, &c)| (c, i))
                    .collect::<HashMap<_, _>>()
            })
            .collect();
        Self {
            dims,
            d3,
            cells,
            index,
        }
    }

    fn validate(&self) -> Result<()> {
        for (k, list) in self.cells.iter().enumerate() {
            if self.index[k].len() != list.len() {
                return Err(Error::InvalidParameter("duplicate cell".into()));
            }
            if k == 0 {
                continue;
            }
            for &cell in list {
                for face in self.faces(cell) {
                    if !self.index[k - 1].contains_key(&face) {
                        return Err(Error::InvalidParameter(
                            "complex is not closed: a cell is missing a face".into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn stride(&self, axis: usize) -> usize {
        self.d3[axis + 1..].iter().product()
    }

    fn faces(&self, cell: Cell) -> Vec<Cell> {
        let mut faces = Vec::with_capacity(2 * cell.axes.count_ones() as usize);
        for a in 0..3 {
            let bit = 1u8 << a;
            if cell.axes & bit == 0 {
                continue;
            }
            let axes = cell.axes & !bit;
            faces.push(Cell {
                anchor: cell.anchor,
                axes,
            });
            faces.push(Cell {
                anchor: cell.anchor + self.stride(a),
                axes,
            });
        }
        faces
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of `k`-cells.
    pub fn cell_count(&self, k: usize) -> usize {
        self.cells.get(k).map_or(0, Vec::len)
    }

    /// Alternating sum of cell counts over all dimensions.
    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(k, list)| {
                let n = list.len() as i64;
                if k % 2 == 0 {
                    n
                } else {
                    -n
                }
            })
            .sum()
    }

    /// Rank over Z/2 of the boundary map from `k`-cells to `(k-1)`-cells,
    /// by bitset Gaussian elimination on the incidence columns.
    pub fn boundary_rank(&self, k: usize) -> usize {
        if k == 0 || k >= self.cells.len() || self.cells[k].is_empty() {
            return 0;
        }
        let rows = self.cells[k - 1].len();
        let words = rows.div_ceil(64);
        let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
        let mut rank = 0;
        for &cell in &self.cells[k] {
            let mut col = vec![0u64; words];
            for face in self.faces(cell) {
                let row = self.index[k - 1][&face];
                // Each face of a cube is distinct, so the Z/2 coefficient
                // is always 1; set rather than toggle.
                col[row / 64] |= 1 << (row % 64);
            }
            while let Some(lead) = highest_set_bit(&col) {
                match pivots.get(&lead) {
                    Some(pivot) => {
                        for (c, p) in col.iter_mut().zip(pivot) {
                            *c ^= *p;
                        }
                    }
                    None => {
                        pivots.insert(lead, col);
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }

    /// Betti numbers `beta_0 .. beta_{n-1}` for a rank-`n` grid, from
    /// `beta_k = n_k - rank d_k - rank d_{k+1}`. The top Betti number
    /// `beta_n` of an `n`-dimensional grid complex is always zero and is
    /// omitted.
    pub fn betti_numbers(&self) -> Vec<usize> {
        let n = self.dims.len();
        let mut ranks = vec![0usize; n + 2];
        for k in 1..=n {
            ranks[k] = self.boundary_rank(k);
        }
        (0..n)
            .map(|k| self.cell_count(k) - ranks[k] - ranks[k + 1])
            .collect()
    }
}

fn highest_set_bit(col: &[u64]) -> Option<usize> {
    for (w, &word) in col.iter().enumerate().rev() {
        if word != 0 {
            return Some(w * 64 + 63 - word.leading_zeros() as usize);
        }
    }
    None
}
