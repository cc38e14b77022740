//! `ec-field`: filtration curves of a gridded scalar field.
//!
//! The input is either an ECF1 file (any rank up to 3) or a 2D CSV whose
//! rows become the first grid axis. The format is sniffed from the magic
//! bytes, so one flag serves both.

use std::path::PathBuf;

use ecshape::cubical::{betti_curve_field, ec_curve_incremental};
use ecshape::GridField;

use super::{parse_thresholds, write_curve, DirectionArg};

#[derive(clap::Args)]
pub struct EcFieldArgs {
    /// Field as ECF1 or 2D CSV, detected by content
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = DirectionArg::Superlevel)]
    pub direction: DirectionArg,
    /// Threshold count m, lo:hi:m, or a file with one threshold per line
    #[arg(long)]
    pub thresholds: String,
    /// Also compute Betti curves (beta0, and beta1 up to 2D)
    #[arg(long)]
    pub betti: bool,
    #[arg(long)]
    pub output: PathBuf,
}

pub fn run(args: &EcFieldArgs) -> anyhow::Result<()> {
    let field = if crate::ecf1::looks_like_ecf1(&args.input) {
        crate::ecf1::read_field(&args.input)?
    } else {
        let table = crate::csvio::read_table(&args.input)?;
        let dims = vec![table.rows.len(), table.width()];
        let values = table.rows.into_iter().flatten().collect();
        GridField::new(dims, values)?
    };

    let spec = parse_thresholds(&args.thresholds, args.direction.into(), field.value_range())?;
    let ec = ec_curve_incremental(&field, &spec);
    let betti = args.betti.then(|| betti_curve_field(&field, &spec));
    write_curve(&args.output, &ec, betti.as_ref())
}
