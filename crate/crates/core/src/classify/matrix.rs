use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Sample-by-feature matrix with integer class labels.
///
/// Labels index into `class_names`.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureMatrix {
    data: DMatrix<f64>,
    labels: Vec<usize>,
    class_names: Vec<String>,
}

impl FeatureMatrix {
    pub fn new(data: DMatrix<f64>, labels: Vec<usize>, class_names: Vec<String>) -> Result<Self> {
        if data.nrows() != labels.len() {
            return Err(Error::DimensionMismatch {
                expected: data.nrows(),
                got: labels.len(),
            });
        }
        if data.nrows() < 2 {
            return Err(Error::input("feature matrix needs at least 2 samples"));
        }
        if data.ncols() == 0 {
            return Err(Error::input("feature matrix needs at least 1 feature"));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::input("feature matrix contains non-finite entries"));
        }
        if let Some(&l) = labels.iter().find(|&&l| l >= class_names.len()) {
            return Err(Error::input(format!(
                "label {l} out of range for {} classes",
                class_names.len()
            )));
        }
        Ok(Self {
            data,
            labels,
            class_names,
        })
    }

    /// Row-major rows with string labels; classes are the sorted distinct labels.
    pub fn from_rows<S: AsRef<str>>(rows: &[Vec<f64>], labels: &[S]) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch {
                expected: ncols,
                got: bad.len(),
            });
        }
        let mut class_names: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        class_names.sort();
        class_names.dedup();
        let idx = labels
            .iter()
            .map(|s| class_names.binary_search_by(|c| c.as_str().cmp(s.as_ref())).unwrap())
            .collect();
        let data = DMatrix::from_fn(rows.len(), ncols, |i, j| rows[i][j]);
        Self::new(data, idx, class_names)
    }

    /// Unlabelled data, every row in class 0.
    pub fn unlabelled(data: DMatrix<f64>) -> Result<Self> {
        let n = data.nrows();
        Self::new(data, vec![0; n], vec!["_".to_string()])
    }

    pub fn data(&self) -> &DMatrix<f64> {
        &self.data
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn class_names(&self) -> &[String] {
        &self.class_names
    }

    pub fn n_samples(&self) -> usize {
        self.data.nrows()
    }

    pub fn n_features(&self) -> usize {
        self.data.ncols()
    }

    pub fn n_classes(&self) -> usize {
        self.class_names.len()
    }

    pub(crate) fn with_data(&self, data: DMatrix<f64>) -> Self {
        Self {
            data,
            labels: self.labels.clone(),
            class_names: self.class_names.clone(),
        }
    }

    /// Rows `indices`, in that order.
    pub fn select(&self, indices: &[usize]) -> Self {
        Self {
            data: self.data.select_rows(indices),
            labels: indices.iter().map(|&i| self.labels[i]).collect(),
            class_names: self.class_names.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_rows_sorts_classes() {
        let m = FeatureMatrix::from_rows(&[vec![1.0], vec![2.0], vec![3.0]], &["b", "a", "b"]).unwrap();
        assert_eq!(m.class_names(), &["a", "b"]);
        assert_eq!(m.labels(), &[1, 0, 1]);
        assert_eq!(m.select(&[2, 1]).labels(), &[1, 0]);
    }

    #[test]
    fn validates() {
        assert!(FeatureMatrix::from_rows(&[vec![1.0]], &["a"]).is_err());
        assert!(FeatureMatrix::from_rows(&[vec![1.0], vec![1.0, 2.0]], &["a", "b"]).is_err());
        assert!(FeatureMatrix::from_rows(&[vec![f64::NAN], vec![1.0]], &["a", "b"]).is_err());
    }
}
