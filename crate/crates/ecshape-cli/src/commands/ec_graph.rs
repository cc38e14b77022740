//! `ec-graph`: filtration curves of a weighted graph given as CSV.
//!
//! Edge mode reads a square symmetric matrix whose entry (i, j) is the
//! weight of edge i-j; an entry of exactly 0 means "no edge" and the
//! diagonal is ignored. Node mode reads a single column of node weights
//! and filters the path graph 0-1-2-..., which is how a sampled 1D
//! function becomes a node-weighted graph.

use std::path::PathBuf;

use anyhow::bail;
use ecshape::graph::{incremental_filtration_curve, FiltrationMode};
use ecshape::WeightedGraph;

use super::{parse_thresholds, write_curve, DirectionArg};

#[derive(clap::Args)]
pub struct EcGraphArgs {
    /// Weight matrix CSV (edge mode) or single-column node weights (node mode)
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Edge)]
    pub mode: Mode,
    #[arg(long, value_enum, default_value_t = DirectionArg::Sublevel)]
    pub direction: DirectionArg,
    /// Threshold count m, lo:hi:m, or a file with one threshold per line
    #[arg(long)]
    pub thresholds: String,
    /// Output curve CSV with columns threshold,chi,beta0,beta1
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
pub enum Mode {
    Edge,
    Node,
}

/// Entries this far apart (relative to the larger magnitude) break the
/// symmetry requirement in edge mode.
const SYMMETRY_TOL: f64 = 1e-9;

pub fn run(args: &EcGraphArgs) -> anyhow::Result<()> {
    let table = crate::csvio::read_table(&args.input)?;
    let (graph, mode, weights) = match args.mode {
        Mode::Edge => {
            let n = table.rows.len();
            if table.width() != n {
                bail!(
                    "{}: edge mode needs a square matrix, found {}x{}",
                    args.input.display(),
                    n,
                    table.width()
                );
            }
            let mut edges = Vec::new();
            let mut weights = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    let (a, b) = (table.rows[i][j], table.rows[j][i]);
                    if (a - b).abs() > SYMMETRY_TOL * a.abs().max(b.abs()).max(1.0) {
                        bail!(
                            "{}: matrix is not symmetric at ({i},{j}): {a} vs {b}",
                            args.input.display()
                        );
                    }
                    if a != 0.0 {
                        edges.push((i, j));
                        weights.push(a);
                    }
                }
            }
            let graph = WeightedGraph::new(n, edges, Some(weights.clone()), None)?;
            (graph, FiltrationMode::Edge, weights)
        }
        Mode::Node => {
            if table.width() != 1 {
                bail!(
                    "{}: node mode needs a single column, found {} columns",
                    args.input.display(),
                    table.width()
                );
            }
            let weights = table.column(0);
            let n = weights.len();
            let edges = (1..n).map(|i| (i - 1, i)).collect();
            let graph = WeightedGraph::new(n, edges, None, Some(weights.clone()))?;
            (graph, FiltrationMode::Node, weights)
        }
    };

    let lo = weights.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = weights.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let spec = parse_thresholds(&args.thresholds, args.direction.into(), (lo, hi))?;
    let (ec, betti) = incremental_filtration_curve(&graph, &spec, mode)?;
    write_curve(&args.output, &ec, Some(&betti))
}
