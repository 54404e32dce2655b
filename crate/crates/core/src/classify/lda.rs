use nalgebra::{DMatrix, DVector};

use super::FeatureMatrix;
use crate::error::{Error, Result};

/// Relative ridge added to the pooled covariance: `eps * trace / dim`.
pub const LDA_RIDGE: f64 = 1e-6;

/// Shared-covariance Gaussian discriminant.
///
/// Class `c` scores `x' S^-1 mu_c - mu_c' S^-1 mu_c / 2 + ln(prior_c)`;
/// ties go to the lowest class index.
#[derive(Debug, Clone, PartialEq)]
pub struct LdaModel {
    class_means: Vec<DVector<f64>>,
    shared_covariance: DMatrix<f64>,
    class_priors: Vec<f64>,
    weights: Vec<DVector<f64>>,
    intercepts: Vec<f64>,
}

impl LdaModel {
    pub fn class_means(&self) -> &[DVector<f64>] {
        &self.class_means
    }

    /// Pooled within-class covariance after regularization.
    pub fn shared_covariance(&self) -> &DMatrix<f64> {
        &self.shared_covariance
    }

    pub fn class_priors(&self) -> &[f64] {
        &self.class_priors
    }

    pub fn n_classes(&self) -> usize {
        self.class_means.len()
    }

    pub fn dim(&self) -> usize {
        self.shared_covariance.nrows()
    }

    pub fn scores(&self, x: &DVector<f64>) -> Vec<f64> {
        self.weights
            .iter()
            .zip(&self.intercepts)
            .map(|(w, b)| w.dot(x) + b)
            .collect()
    }
}

pub fn lda_fit(x: &FeatureMatrix) -> Result<LdaModel> {
    let data = x.data();
    let (n, dim) = data.shape();
    let n_classes = x.n_classes();
    if n_classes < 2 {
        return Err(Error::input("LDA needs at least 2 classes"));
    }
    let mut counts = vec![0usize; n_classes];
    for &l in x.labels() {
        counts[l] += 1;
    }
    if let Some(c) = counts.iter().position(|&c| c < 2) {
        return Err(Error::input(format!(
            "class {:?} has {} samples, LDA needs at least 2 per class",
            x.class_names()[c],
            counts[c]
        )));
    }

    let mut class_means = vec![DVector::zeros(dim); n_classes];
    for (row, &l) in data.row_iter().zip(x.labels()) {
        class_means[l] += row.transpose();
    }
    for (mean, &c) in class_means.iter_mut().zip(&counts) {
        *mean /= c as f64;
    }

    let mut scatter = DMatrix::zeros(dim, dim);
    for (row, &l) in data.row_iter().zip(x.labels()) {
        let dev = row.transpose() - &class_means[l];
        scatter.ger(1.0, &dev, &dev, 1.0);
    }
    // n >= 2 * classes, so the divisor is positive.
    let mut covariance = scatter / (n - n_classes) as f64;
    covariance = (&covariance + covariance.transpose()) * 0.5;
    let trace = covariance.trace();
    let ridge = if trace > 0.0 {
        LDA_RIDGE * trace / dim as f64
    } else {
        LDA_RIDGE
    };
    for i in 0..dim {
        covariance[(i, i)] += ridge;
    }

    let chol = covariance
        .clone()
        .cholesky()
        .ok_or_else(|| Error::input("pooled covariance is not positive definite after regularization"))?;
    let class_priors: Vec<f64> = counts.iter().map(|&c| c as f64 / n as f64).collect();
    let weights: Vec<DVector<f64>> = class_means.iter().map(|m| chol.solve(m)).collect();
    let intercepts = weights
        .iter()
        .zip(&class_means)
        .zip(&class_priors)
        .map(|((w, m), p)| -0.5 * w.dot(m) + p.ln())
        .collect();

    Ok(LdaModel {
        class_means,
        shared_covariance: covariance,
        class_priors,
        weights,
        intercepts,
    })
}

pub fn lda_predict(model: &LdaModel, x: &DVector<f64>) -> Result<usize> {
    if x.len() != model.dim() {
        return Err(Error::DimensionMismatch {
            expected: model.dim(),
            got: x.len(),
        });
    }
    let scores = model.scores(x);
    let mut best = 0;
    for (c, &s) in scores.iter().enumerate().skip(1) {
        if s > scores[best] {
            best = c;
        }
    }
    Ok(best)
}
