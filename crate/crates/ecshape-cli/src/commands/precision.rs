//! `precision`: partial-correlation network of a multivariate time series.
//!
//! Reads an m x n CSV (rows are observations), estimates the covariance,
//! inverts it with a ridge, and writes the n x n matrix of partial
//! correlation magnitudes with a zero diagonal.

use std::path::PathBuf;

use anyhow::bail;
use ecshape::stats::matrix::{covariance, default_ridge, partial_correlation_graph, precision_matrix};
use ecshape::TimeSeriesMatrix;

#[derive(clap::Args)]
pub struct PrecisionArgs {
    /// Time series CSV, one observation per row
    #[arg(long)]
    pub input: PathBuf,
    /// Ridge added to the covariance diagonal; default scales with the trace
    #[arg(long)]
    pub ridge: Option<f64>,
    /// Standardize each column to zero mean and unit variance first
    #[arg(long)]
    pub zscore: bool,
    /// Output n x n CSV of partial-correlation weights
    #[arg(long)]
    pub output: PathBuf,
}

pub fn run(args: &PrecisionArgs) -> anyhow::Result<()> {
    let table = crate::csvio::read_table(&args.input)?;
    let rows = table.rows.len();
    let cols = table.width();
    let mut values: Vec<f64> = table.rows.into_iter().flatten().collect();

    if args.zscore {
        for c in 0..cols {
            let mean = (0..rows).map(|r| values[r * cols + c]).sum::<f64>() / rows as f64;
            let var = (0..rows)
                .map(|r| (values[r * cols + c] - mean).powi(2))
                .sum::<f64>()
                / (rows as f64 - 1.0);
            let sd = var.sqrt();
            if sd == 0.0 || !sd.is_finite() {
                bail!("column {c} is constant; cannot z-score it");
            }
            for r in 0..rows {
                values[r * cols + c] = (values[r * cols + c] - mean) / sd;
            }
        }
    }

    let ts = TimeSeriesMatrix::new(rows, cols, values)?;
    let cov = covariance(&ts);
    let ridge = args.ridge.unwrap_or_else(|| default_ridge(&cov));
    let prec = precision_matrix(&cov, ridge)?;
    let graph = partial_correlation_graph(&prec)?;

    let mut matrix = vec![vec![0.0; cols]; cols];
    let weights = graph.edge_weights().expect("complete graph has edge weights");
    for (&(i, j), &w) in graph.edges().iter().zip(weights) {
        matrix[i][j] = w;
        matrix[j][i] = w;
    }
    crate::csvio::write_table(&args.output, None, &matrix)
}
