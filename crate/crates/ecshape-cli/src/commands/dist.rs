//! `dist`: Euclidean distance between two curves on identical thresholds.

use std::path::PathBuf;

use ecshape::stats::ec_distance;

#[derive(clap::Args)]
pub struct DistArgs {
    #[arg(long)]
    pub a: PathBuf,
    #[arg(long)]
    pub b: PathBuf,
}

pub fn run(args: &DistArgs) -> anyhow::Result<()> {
    let a = super::read_curve(&args.a)?;
    let b = super::read_curve(&args.b)?;
    println!("{}", ec_distance(&a, &b)?);
    Ok(())
}
