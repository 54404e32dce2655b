use std::cmp::Ordering;

use nalgebra::{DMatrix, DVector, RowDVector};

use super::FeatureMatrix;
use crate::error::{Error, Result};

pub const DEFAULT_PCA_VARIANCE: f64 = 0.95;

/// Principal axes of a centred data set.
///
/// `components` holds one unit-length axis per row, ordered by decreasing
/// explained variance.
#[derive(Debug, Clone, PartialEq)]
pub struct PcaModel {
    mean: RowDVector<f64>,
    components: DMatrix<f64>,
    explained_variance: Vec<f64>,
    total_variance: f64,
}

impl PcaModel {
    pub fn mean(&self) -> &RowDVector<f64> {
        &self.mean
    }

    pub fn components(&self) -> &DMatrix<f64> {
        &self.components
    }

    pub fn explained_variance(&self) -> &[f64] {
        &self.explained_variance
    }

    pub fn n_components(&self) -> usize {
        self.components.nrows()
    }

    /// Share of total variance captured by the retained components; 1 for
    /// zero-variance data.
    pub fn explained_fraction(&self) -> f64 {
        if self.total_variance == 0.0 {
            1.0
        } else {
            self.explained_variance.iter().sum::<f64>() / self.total_variance
        }
    }

    /// Maps scores back to feature space.
    pub fn inverse_transform(&self, scores: &DMatrix<f64>) -> Result<DMatrix<f64>> {
        if scores.ncols() != self.n_components() {
            return Err(Error::DimensionMismatch {
                expected: self.n_components(),
                got: scores.ncols(),
            });
        }
        let mut out = scores * &self.components;
        for mut row in out.row_iter_mut() {
            row += &self.mean;
        }
        Ok(out)
    }
}

/// Fits PCA on the sample covariance, keeping the shortest prefix of axes
/// whose cumulative explained variance reaches `variance_target`.
pub fn pca_fit(x: &FeatureMatrix, variance_target: f64) -> Result<PcaModel> {
    if !(variance_target > 0.0 && variance_target <= 1.0) {
        return Err(Error::param(format!(
            "PCA variance target must lie in (0, 1], got {variance_target}"
        )));
    }
    let data = x.data();
    let n = data.nrows();
    let mean = data.row_mean();
    let mut centred = data.clone();
    for mut row in centred.row_iter_mut() {
        row -= &mean;
    }

    // Axes are the right singular vectors of the centred data; this avoids
    // forming the (features x features) covariance when features >> samples.
    let svd = centred.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| {
        svd.singular_values[b]
            .partial_cmp(&svd.singular_values[a])
            .unwrap_or(Ordering::Equal)
            .then(a.cmp(&b))
    });
    let variances: Vec<f64> = order
        .iter()
        .map(|&i| svd.singular_values[i].powi(2) / (n - 1) as f64)
        .collect();
    let total_variance: f64 = variances.iter().sum();

    let keep = if total_variance == 0.0 {
        1
    } else {
        let goal = variance_target * total_variance * (1.0 - 1e-12);
        let mut cumulative = 0.0;
        variances
            .iter()
            .position(|&v| {
                cumulative += v;
                cumulative >= goal
            })
            .map_or(variances.len(), |p| p + 1)
    };

    let d = data.ncols();
    let mut components = DMatrix::zeros(keep, d);
    for (row, &src) in order.iter().take(keep).enumerate() {
        let mut axis = v_t.row(src).clone_owned();
        // Fix the sign so the largest-magnitude coordinate is positive.
        let pivot = axis.iter().copied().fold(0.0f64, |best, v| if v.abs() > best.abs() { v } else { best });
        if pivot < 0.0 {
            axis.neg_mut();
        }
        components.set_row(row, &axis);
    }

    Ok(PcaModel {
        mean,
        components,
        explained_variance: variances[..keep].to_vec(),
        total_variance,
    })
}

/// Projects centred rows of `x` onto the retained axes.
pub fn pca_transform(model: &PcaModel, x: &FeatureMatrix) -> Result<FeatureMatrix> {
    Ok(x.with_data(project(model, x.data())?))
}

pub(crate) fn project(model: &PcaModel, data: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    if data.ncols() != model.mean.len() {
        return Err(Error::DimensionMismatch {
            expected: model.mean.len(),
            got: data.ncols(),
        });
    }
    let mut centred = data.clone();
    for mut row in centred.row_iter_mut() {
        row -= &model.mean;
    }
    Ok(centred * model.components.transpose())
}

pub(crate) fn project_row(model: &PcaModel, row: &[f64]) -> Result<DVector<f64>> {
    let m = DMatrix::from_row_slice(1, row.len(), row);
    Ok(project(model, &m)?.row(0).transpose())
}
