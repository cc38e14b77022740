//! `kde`: Gaussian kernel density estimate of a 2D point cloud.
//!
//! Reads a two-column CSV of points and writes the density evaluated on a
//! grid covering the bounding box padded by three bandwidths, as ECF1.

use std::path::PathBuf;

use anyhow::{bail, Context};
use ecshape::stats::kde::{gaussian_kde_grid, GridSpec2D};
use ecshape::PointCloud2D;

#[derive(clap::Args)]
pub struct KdeArgs {
    /// Point cloud CSV with x,y columns
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub bandwidth: f64,
    /// Grid resolution as nx,ny
    #[arg(long)]
    pub grid: String,
    /// Output density field (ECF1)
    #[arg(long)]
    pub output: PathBuf,
}

pub fn run(args: &KdeArgs) -> anyhow::Result<()> {
    let table = crate::csvio::read_table(&args.input)?;
    if table.width() != 2 {
        bail!(
            "{}: expected two columns (x,y), found {}",
            args.input.display(),
            table.width()
        );
    }
    let points = table.rows.iter().map(|r| (r[0], r[1])).collect();
    let cloud = PointCloud2D::new(points)?;

    let (nx, ny) = args
        .grid
        .split_once(',')
        .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
        .with_context(|| format!("--grid {:?} is not of the form nx,ny", args.grid))?;

    let grid = GridSpec2D::covering(&cloud, args.bandwidth, nx, ny)?;
    let field = gaussian_kde_grid(&cloud, args.bandwidth, &grid)?;
    crate::ecf1::write_field(&args.output, &field)
}
