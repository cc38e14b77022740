use clap::Parser;

use ecshape_cli::commands::{
    classify::{self, ClassifyArgs},
    dist::{self, DistArgs},
    ec_field::{self, EcFieldArgs},
    ec_graph::{self, EcGraphArgs},
    kde::{self, KdeArgs},
    precision::{self, PrecisionArgs},
    project::{self, ProjectArgs},
    rdsim::{self, RdsimArgs},
};

/// Euler characteristic curves for graphs, fields, and point clouds.
#[derive(Parser)]
#[command(name = "ecshape", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Subcommand)]
enum Command {
    /// Filtration curve of a weighted graph from a CSV matrix or column
    EcGraph(EcGraphArgs),
    /// Filtration curve of a gridded field (ECF1 or CSV)
    EcField(EcFieldArgs),
    /// Partial-correlation network of a multivariate time series
    Precision(PrecisionArgs),
    /// Gaussian kernel density of a 2D point cloud, written as ECF1
    Kde(KdeArgs),
    /// Simulate the reaction-diffusion system into a 3D field
    Rdsim(RdsimArgs),
    /// Project a directory of curves onto leading SVD components
    Project(ProjectArgs),
    /// Train a linear SVM and print test accuracy
    Classify(ClassifyArgs),
    /// Euclidean distance between two curves
    Dist(DistArgs),
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::EcGraph(args) => ec_graph::run(args),
        Command::EcField(args) => ec_field::run(args),
        Command::Precision(args) => precision::run(args),
        Command::Kde(args) => kde::run(args),
        Command::Rdsim(args) => rdsim::run(args),
        Command::Project(args) => project::run(args),
        Command::Classify(args) => classify::run(args),
        Command::Dist(args) => dist::run(args),
    };
    if let Err(err) = result {
        eprintln!("error: {err:#}");
        let code = match err.downcast_ref::<ecshape::Error>() {
            Some(ecshape::Error::SingularMatrix) => {
                eprintln!("hint: the covariance is numerically singular; retry with a larger --ridge");
                3
            }
            _ => 2,
        };
        std::process::exit(code);
    }
}
