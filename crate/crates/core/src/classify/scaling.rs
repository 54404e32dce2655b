use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::FeatureMatrix;
use crate::error::{Error, Result};

/// Element-wise conditioning applied to descriptor columns before PCA.
///
/// Raw central moments of order `m` scale with the `m`-th power of the
/// transform amplitude, so high orders swamp the covariance. `SignedRoot`
/// maps `mu^m` to `sign(mu^m) |mu^m|^(1/m)`, putting every column in
/// amplitude units. It has no fitted state and cannot leak across folds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FeatureScaling {
    Raw,
    /// Columns are t-major blocks of `moments` entries, order `1..=moments`.
    #[default]
    SignedRoot,
}

impl FeatureScaling {
    /// Applies the scaling to `x`, whose columns form blocks of `moments`.
    pub fn apply(self, x: &FeatureMatrix, moments: usize) -> Result<FeatureMatrix> {
        match self {
            FeatureScaling::Raw => Ok(x.clone()),
            FeatureScaling::SignedRoot => {
                if moments == 0 || x.n_features() % moments != 0 {
                    return Err(Error::param(format!(
                        "{} features do not split into blocks of {moments} moments",
                        x.n_features()
                    )));
                }
                let src = x.data();
                let data = DMatrix::from_fn(src.nrows(), src.ncols(), |i, j| {
                    signed_root(src[(i, j)], j % moments + 1)
                });
                Ok(x.with_data(data))
            }
        }
    }
}

fn signed_root(v: f64, order: usize) -> f64 {
    match order {
        1 => v,
        2 => v.abs().sqrt().copysign(v),
        3 => v.cbrt(),
        m => v.abs().powf(1.0 / m as f64).copysign(v),
    }
}
