//! `rdsim`: simulate the coupled reaction-diffusion system and store the
//! first species as a 3D space-time field.

use std::path::PathBuf;

use ecshape::synth::{rd_simulate, RdParams};

#[derive(clap::Args)]
pub struct RdsimArgs {
    /// Diffusion coefficient
    #[arg(long = "D")]
    pub diffusion: f64,
    /// Reaction coupling rate
    #[arg(long = "R")]
    pub reaction: f64,
    /// Grid side length
    #[arg(long)]
    pub n: usize,
    /// Number of stored snapshots
    #[arg(long = "T")]
    pub snapshots: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Euler time step; must satisfy dt <= 1/(4D) on the unit grid
    #[arg(long, default_value_t = 0.04)]
    pub dt: f64,
    /// Integration steps between consecutive snapshots
    #[arg(long, default_value_t = 4)]
    pub stride: usize,
    /// Output u field (ECF1, dims n,n,T)
    #[arg(long)]
    pub output: PathBuf,
}

pub fn run(args: &RdsimArgs) -> anyhow::Result<()> {
    let mut params = RdParams::new(args.diffusion, args.reaction, args.n, args.snapshots, args.seed);
    params.dt = args.dt;
    params.stride = args.stride;
    let (u, _) = rd_simulate(&params)?;
    crate::ecf1::write_field(&args.output, &u)
}
