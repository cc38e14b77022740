//! Shared domain types.
//!
//! Every type validates its invariants on construction and is immutable
//! afterwards, so downstream code can rely on them without re-checking.
//! All indices are dense and 0-based; all reals are `f64`.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// Which side of a threshold survives filtering.
///
/// `Sublevel` keeps weights/values `<= t` and requires strictly increasing
/// thresholds; `Superlevel` keeps values `>= t` and requires strictly
/// decreasing thresholds. Both comparisons are inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Sublevel,
    Superlevel,
}

/// An undirected simple graph with optional edge and node weights.
///
/// Nodes are `0..node_count`. Edges are stored with their endpoints in
/// ascending order, in the order they were supplied, and weight vectors
/// stay aligned with that order.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    node_count: usize,
    edges: Vec<(usize, usize)>,
    edge_weights: Option<Vec<f64>>,
    node_weights: Option<Vec<f64>>,
}

impl WeightedGraph {
    /// Builds a graph, rejecting self-loops, duplicate edges, out-of-range
    /// endpoints, misaligned weight vectors, and non-finite weights.
    pub fn new(
        node_count: usize,
        edges: Vec<(usize, usize)>,
        edge_weights: Option<Vec<f64>>,
        node_weights: Option<Vec<f64>>,
    ) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in &edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            for idx in [a, b] {
                if idx >= node_count {
                    return Err(Error::IndexOutOfRange {
                        index: idx,
                        node_count,
                    });
                }
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            normalized.push(e);
        }
        if let Some(w) = &edge_weights {
            if w.len() != normalized.len() {
                return Err(Error::WeightLengthMismatch {
                    kind: "edge",
                    expected: normalized.len(),
                    actual: w.len(),
                });
            }
            if !w.iter().all(|x| x.is_finite()) {
                return Err(Error::NonFiniteWeight);
            }
        }
        if let Some(w) = &node_weights {
            if w.len() != node_count {
                return Err(Error::WeightLengthMismatch {
                    kind: "node",
                    expected: node_count,
                    actual: w.len(),
                });
            }
            if !w.iter().all(|x| x.is_finite()) {
                return Err(Error::NonFiniteWeight);
            }
        }
        Ok(Self {
            node_count,
            edges: normalized,
            edge_weights,
            node_weights,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges with endpoints in ascending order, in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edge weights aligned with [`edges`](Self::edges), if present.
    pub fn edge_weights(&self) -> Option<&[f64]> {
        self.edge_weights.as_deref()
    }

    /// Node weights indexed by node, if present.
    pub fn node_weights(&self) -> Option<&[f64]> {
        self.node_weights.as_deref()
    }
}

/// A scalar field sampled on a regular grid of 1 to 3 dimensions.
///
/// Values are stored row-major (last dimension varies fastest) and are
/// always finite.
#[derive(Debug, Clone, PartialEq)]
pub struct GridField {
    dims: Vec<usize>,
    values: Vec<f64>,
}

impl GridField {
    pub fn new(dims: Vec<usize>, values: Vec<f64>) -> Result<Self> {
        if dims.is_empty() || dims.len() > 3 {
            return Err(Error::UnsupportedDims(dims.len()));
        }
        if dims.contains(&0) {
            return Err(Error::InvalidParameter(
                "grid dimensions must be positive".into(),
            ));
        }
        let len: usize = dims.iter().product();
        if values.len() != len {
            return Err(Error::LengthMismatch {
                what: "grid field",
                expected: len,
                actual: values.len(),
            });
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFiniteValue("grid field"));
        }
        Ok(Self { dims, values })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn ndim(&self) -> usize {
        self.dims.len()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Row-major values, last dimension fastest.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Smallest and largest value in the field.
    pub fn value_range(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &v in &self.values {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        (lo, hi)
    }
}

/// A finite, strictly monotone sequence of thresholds with a direction.
///
/// Sublevel specs increase strictly; superlevel specs decrease strictly,
/// so in both cases the filtered sets grow as the sequence is traversed.
#[derive(Debug, Clone, PartialEq)]
pub struct FiltrationSpec {
    direction: Direction,
    thresholds: Vec<f64>,
}

impl FiltrationSpec {
    pub fn new(direction: Direction, thresholds: Vec<f64>) -> Result<Self> {
        if thresholds.is_empty() {
            return Err(Error::InvalidThresholds("empty"));
        }
        if !thresholds.iter().all(|t| t.is_finite()) {
            return Err(Error::InvalidThresholds("non-finite entry"));
        }
        let ordered = thresholds.windows(2).all(|w| match direction {
            Direction::Sublevel => w[0] < w[1],
            Direction::Superlevel => w[0] > w[1],
        });
        if !ordered {
            return Err(Error::InvalidThresholds(match direction {
                Direction::Sublevel => "sublevel thresholds must strictly increase",
                Direction::Superlevel => "superlevel thresholds must strictly decrease",
            }));
        }
        Ok(Self {
            direction,
            thresholds,
        })
    }

    /// `m >= 2` evenly spaced thresholds spanning `[lo, hi]`, ordered to
    /// match `direction` and hitting both endpoints exactly.
    pub fn uniform(lo: f64, hi: f64, m: usize, direction: Direction) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::NonFiniteValue("threshold range"));
        }
        if lo >= hi {
            return Err(Error::DegenerateRange);
        }
        if m < 2 {
            return Err(Error::InvalidParameter(
                "uniform thresholds need m >= 2".into(),
            ));
        }
        let step = (hi - lo) / (m - 1) as f64;
        let mut thresholds: Vec<f64> = (0..m).map(|i| lo + step * i as f64).collect();
        thresholds[0] = lo;
        thresholds[m - 1] = hi;
        if direction == Direction::Superlevel {
            thresholds.reverse();
        }
        Self::new(direction, thresholds)
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn thresholds(&self) -> &[f64] {
        &self.thresholds
    }

    pub fn len(&self) -> usize {
        self.thresholds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thresholds.is_empty()
    }
}

/// An Euler characteristic curve: `chi` sampled at each threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct ECCurve {
    thresholds: Vec<f64>,
    chi: Vec<i64>,
}

impl ECCurve {
    pub fn new(thresholds: Vec<f64>, chi: Vec<i64>) -> Result<Self> {
        if thresholds.len() != chi.len() {
            return Err(Error::LengthMismatch {
                what: "EC curve",
                expected: thresholds.len(),
                actual: chi.len(),
            });
        }
        if !thresholds.iter().all(|t| t.is_finite()) {
            return Err(Error::NonFiniteValue("EC curve thresholds"));
        }
        Ok(Self { thresholds, chi })
    }

    pub fn thresholds(&self) -> &[f64] {
        &self.thresholds
    }

    pub fn chi(&self) -> &[i64] {
        &self.chi
    }

    pub fn len(&self) -> usize {
        self.chi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chi.is_empty()
    }
}

/// Betti numbers sampled at each threshold.
///
/// `beta0` counts connected components. `beta1` counts independent cycles
/// and is only present where it is well defined (graphs and 2D fields);
/// where present, `beta0 - beta1` equals the Euler characteristic.
#[derive(Debug, Clone, PartialEq)]
pub struct BettiCurve {
    thresholds: Vec<f64>,
    beta0: Vec<usize>,
    beta1: Option<Vec<usize>>,
}

impl BettiCurve {
    pub fn new(
        thresholds: Vec<f64>,
        beta0: Vec<usize>,
        beta1: Option<Vec<usize>>,
    ) -> Result<Self> {
        if thresholds.len() != beta0.len() {
            return Err(Error::LengthMismatch {
                what: "Betti curve",
                expected: thresholds.len(),
                actual: beta0.len(),
            });
        }
        if let Some(b1) = &beta1 {
            if b1.len() != thresholds.len() {
                return Err(Error::LengthMismatch {
                    what: "Betti curve",
                    expected: thresholds.len(),
                    actual: b1.len(),
                });
            }
        }
        if !thresholds.iter().all(|t| t.is_finite()) {
            return Err(Error::NonFiniteValue("Betti curve thresholds"));
        }
        Ok(Self {
            thresholds,
            beta0,
            beta1,
        })
    }

    pub fn thresholds(&self) -> &[f64] {
        &self.thresholds
    }

    pub fn beta0(&self) -> &[usize] {
        &self.beta0
    }

    pub fn beta1(&self) -> Option<&[usize]> {
        self.beta1.as_deref()
    }

    pub fn len(&self) -> usize {
        self.beta0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beta0.is_empty()
    }
}

/// A finite set of points in the plane.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud2D {
    points: Vec<(f64, f64)>,
}

impl PointCloud2D {
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyCloud);
        }
        if !points.iter().all(|(x, y)| x.is_finite() && y.is_finite()) {
            return Err(Error::NonFiniteValue("point cloud"));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `(x_min, x_max, y_min, y_max)` of the cloud.
    pub fn bounding_box(&self) -> (f64, f64, f64, f64) {
        let mut bb = (
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
        );
        for &(x, y) in &self.points {
            bb.0 = bb.0.min(x);
            bb.1 = bb.1.max(x);
            bb.2 = bb.2.min(y);
            bb.3 = bb.3.max(y);
        }
        bb
    }
}

/// `m` observations of `n` variables, row-major with rows as observations.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeriesMatrix {
    rows: usize,
    cols: usize,
    values: Vec<f64>,
}

impl TimeSeriesMatrix {
    pub fn new(rows: usize, cols: usize, values: Vec<f64>) -> Result<Self> {
        if rows < 2 {
            return Err(Error::InvalidParameter(
                "time series needs at least 2 observations".into(),
            ));
        }
        if cols < 1 {
            return Err(Error::InvalidParameter(
                "time series needs at least 1 variable".into(),
            ));
        }
        if values.len() != rows * cols {
            return Err(Error::LengthMismatch {
                what: "time series matrix",
                expected: rows * cols,
                actual: values.len(),
            });
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFiniteValue("time series matrix"));
        }
        Ok(Self { rows, cols, values })
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

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = f64> + '_ {
        (0..self.rows).map(move |r| self.get(r, col))
    }
}

/// Alternating sum of Betti numbers, `sum_i (-1)^i beta_i`.
///
/// For a graph this is `beta_0 - beta_1`; the slice must be nonempty.
pub fn euler_poincare(betti: &[i64]) -> i64 {
    debug_assert!(!betti.is_empty());
    betti
        .iter()
        .enumerate()
        .map(|(i, &b)| if i % 2 == 0 { b } else { -b })
        .sum()
}
