//! `project`: SVD-project a directory of curves onto leading components.
//!
//! Every `*.csv` in the input directory is read as a curve; all curves
//! must share identical thresholds. Rows of the scores CSV follow the
//! filename order (sorted ascending), one row per curve.

use std::path::PathBuf;

use anyhow::{bail, Context};
use ecshape::stats::project::{svd_project, FeatureMatrix};

#[derive(clap::Args)]
pub struct ProjectArgs {
    /// Directory of curve CSVs sharing identical thresholds
    #[arg(long)]
    pub input: PathBuf,
    /// Number of leading components to keep
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Output scores CSV with header pc1..pck
    #[arg(long)]
    pub output: PathBuf,
    /// Optional scatter plot of the first two score columns
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

pub fn run(args: &ProjectArgs) -> anyhow::Result<()> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(&args.input)
        .with_context(|| format!("cannot list {}", args.input.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == "csv"))
        .collect();
    files.sort();
    if files.is_empty() {
        bail!("{}: no .csv files found", args.input.display());
    }

    let curves = files
        .iter()
        .map(|p| super::read_curve(p))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let features = FeatureMatrix::from_curves(&curves)?;
    let projection = svd_project(&features, args.k)?;

    let header: Vec<String> = (1..=args.k).map(|i| format!("pc{i}")).collect();
    let header_refs: Vec<&str> = header.iter().map(|s| s.as_str()).collect();
    let rows: Vec<Vec<f64>> = (0..projection.rows())
        .map(|i| projection.score_row(i).to_vec())
        .collect();
    crate::csvio::write_table(&args.output, Some(&header_refs), &rows)?;

    if let Some(svg_path) = &args.svg {
        let points: Vec<(f64, f64)> = (0..projection.rows())
            .map(|i| {
                let y = if args.k >= 2 { projection.score(i, 1) } else { 0.0 };
                (projection.score(i, 0), y)
            })
            .collect();
        let labels: Vec<String> = files
            .iter()
            .map(|p| {
                p.file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_default()
            })
            .collect();
        let doc = crate::svg::scatter(&points, &labels);
        crate::write_atomic(svg_path, doc.as_bytes())?;
    }
    Ok(())
}
