//! Linear soft-margin SVM trained by seeded subgradient descent.

use crate::error::{Error, Result};
use crate::rng::Rng;
use crate::stats::project::FeatureMatrix;

/// Hyperparameters for [`svm_train`]. The defaults work for features on
/// roughly unit scale; standardize columns first when they are not.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvmConfig {
    /// Full passes over the training set.
    pub epochs: usize,
    /// Initial step size; the schedule is `step / (1 + step * regularizer * t)`.
    pub step: f64,
    /// L2 penalty on the weight vector.
    pub regularizer: f64,
    /// Seed for the per-epoch shuffle; fixes the whole trajectory.
    pub seed: u64,
}

impl Default for SvmConfig {
    fn default() -> Self {
        SvmConfig {
            epochs: 200,
            step: 0.5,
            regularizer: 1e-4,
            seed: 0,
        }
    }
}

/// A trained linear decision rule `sign(w . x + b)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SvmModel {
    weights: Vec<f64>,
    bias: f64,
}

impl SvmModel {
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn bias(&self) -> f64 {
        self.bias
    }

    /// Signed distance proxy `w . x + b`.
    pub fn decision(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.weights.len() {
            return Err(Error::DimMismatch {
                expected: self.weights.len(),
                actual: x.len(),
            });
        }
        Ok(self.weights.iter().zip(x).map(|(w, v)| w * v).sum::<f64>() + self.bias)
    }
}

/// Trains on rows of `features` with labels in `{-1, +1}` by subgradient
/// descent on the hinge loss plus L2 penalty. Sample order is reshuffled
/// each epoch from the seeded generator, so a fixed config is exactly
/// reproducible.
pub fn svm_train(features: &FeatureMatrix, labels: &[i8], config: &SvmConfig) -> Result<SvmModel> {
    let n = features.rows();
    if labels.len() != n {
        return Err(Error::LengthMismatch {
            what: "labels",
            expected: n,
            actual: labels.len(),
        });
    }
    if !labels.iter().all(|&y| y == 1 || y == -1) {
        return Err(Error::InvalidParameter("labels must be -1 or +1".into()));
    }
    if labels.iter().all(|&y| y == labels[0]) {
        return Err(Error::SingleClass);
    }
    if config.epochs == 0 {
        return Err(Error::InvalidParameter("epochs must be at least 1".into()));
    }
    if !config.step.is_finite() || config.step <= 0.0 {
        return Err(Error::InvalidParameter("step must be positive".into()));
    }
    if !config.regularizer.is_finite() || config.regularizer < 0.0 {
        return Err(Error::InvalidParameter(
            "regularizer must be finite and >= 0".into(),
        ));
    }

    let d = features.cols();
    let mut w = vec![0.0; d];
    let mut b = 0.0;
    let mut rng = Rng::new(config.seed);
    let mut order: Vec<usize> = (0..n).collect();
    let mut t = 0u64;
    for _ in 0..config.epochs {
        rng.shuffle(&mut order);
        for &i in &order {
            t += 1;
            let eta = config.step / (1.0 + config.step * config.regularizer * t as f64);
            let x = features.row(i);
            let y = labels[i] as f64;
            let margin = y * (w.iter().zip(x).map(|(wj, xj)| wj * xj).sum::<f64>() + b);
            if margin < 1.0 {
                for (wj, &xj) in w.iter_mut().zip(x) {
                    *wj -= eta * (config.regularizer * *wj - y * xj);
                }
                b += eta * y;
            } else {
                for wj in w.iter_mut() {
                    *wj -= eta * config.regularizer * *wj;
                }
            }
        }
    }
    Ok(SvmModel { weights: w, bias: b })
}

/// Predicted labels for each row; a decision value of exactly zero maps
/// to `+1`.
pub fn svm_predict(model: &SvmModel, features: &FeatureMatrix) -> Result<Vec<i8>> {
    if features.cols() != model.weights.len() {
        return Err(Error::DimMismatch {
            expected: model.weights.len(),
            actual: features.cols(),
        });
    }
    Ok((0..features.rows())
        .map(|i| {
            let score = model
                .decision(features.row(i))
                .expect("dims checked above");
            if score >= 0.0 {
                1
            } else {
                -1
            }
        })
        .collect())
}

/// Fraction of positions where the two label sequences agree.
pub fn accuracy(predicted: &[i8], actual: &[i8]) -> f64 {
    debug_assert_eq!(predicted.len(), actual.len());
    if predicted.is_empty() {
        return 0.0;
    }
    let hits = predicted
        .iter()
        .zip(actual)
        .filter(|(p, a)| p == a)
        .count();
    hits as f64 / predicted.len() as f64
}
