//! `classify`: train the linear SVM on one set, report accuracy on another.

use anyhow::{bail, Context};
use ecshape::stats::project::FeatureMatrix;
use ecshape::stats::svm::{accuracy, svm_predict, svm_train, SvmConfig};

use super::split_pair;

#[derive(clap::Args)]
pub struct ClassifyArgs {
    /// Training data as features.csv,labels.csv
    #[arg(long)]
    pub train: String,
    /// Test data as features.csv,labels.csv
    #[arg(long)]
    pub test: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 200)]
    pub epochs: usize,
    /// Initial subgradient step size
    #[arg(long, default_value_t = 0.5)]
    pub step: f64,
    /// L2 regularization strength
    #[arg(long, default_value_t = 1e-4)]
    pub lambda: f64,
}

fn read_features_labels(arg: &str) -> anyhow::Result<(FeatureMatrix, Vec<i8>)> {
    let (feat_path, label_path) = split_pair(arg)?;
    let features = crate::csvio::read_table(feat_path.as_ref())?;
    let features = FeatureMatrix::from_rows(features.rows)?;
    let labels_table = crate::csvio::read_table(label_path.as_ref())?;
    if labels_table.width() != 1 {
        bail!("{label_path}: labels must be a single column");
    }
    let labels = labels_table
        .column(0)
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            if v == 1.0 {
                Ok(1)
            } else if v == -1.0 {
                Ok(-1)
            } else {
                bail!("{label_path}: row {}: label {v} is not +1 or -1", i + 1)
            }
        })
        .collect::<anyhow::Result<Vec<i8>>>()?;
    Ok((features, labels))
}

pub fn run(args: &ClassifyArgs) -> anyhow::Result<()> {
    let (train_x, train_y) =
        read_features_labels(&args.train).context("while reading --train")?;
    let (test_x, test_y) = read_features_labels(&args.test).context("while reading --test")?;

    let config = SvmConfig {
        epochs: args.epochs,
        step: args.step,
        regularizer: args.lambda,
        seed: args.seed,
    };
    let model = svm_train(&train_x, &train_y, &config)?;
    let predicted = svm_predict(&model, &test_x)?;
    println!("{}", accuracy(&predicted, &test_y));
    Ok(())
}
