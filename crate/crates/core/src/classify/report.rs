use std::io::Write;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::FeatureScaling;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReportParams {
    pub folds: usize,
    pub seed: u64,
    pub pca_variance: f64,
    pub n_samples: usize,
    pub n_features: usize,
    pub scaling: FeatureScaling,
}

/// Outcome of a cross-validation run.
///
/// `deviation` is the sample standard deviation of the fold accuracies, in
/// fractional units; `success_rate` is their mean in percent. Confusion rows
/// are true classes, columns predictions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub success_rate: f64,
    pub deviation: f64,
    pub fold_accuracies: Vec<f64>,
    pub confusion: Vec<Vec<u64>>,
    pub classes: Vec<String>,
    pub params: ReportParams,
}

impl ClassificationReport {
    pub(crate) fn new(
        fold_accuracies: Vec<f64>,
        confusion: DMatrix<u64>,
        classes: Vec<String>,
        params: ReportParams,
    ) -> Self {
        let k = fold_accuracies.len() as f64;
        let mean = fold_accuracies.iter().sum::<f64>() / k;
        let deviation = if fold_accuracies.len() > 1 {
            (fold_accuracies.iter().map(|a| (a - mean).powi(2)).sum::<f64>() / (k - 1.0)).sqrt()
        } else {
            0.0
        };
        let confusion = confusion
            .row_iter()
            .map(|row| row.iter().copied().collect())
            .collect();
        Self {
            success_rate: mean * 100.0,
            deviation,
            fold_accuracies,
            confusion,
            classes,
            params,
        }
    }

    /// `NN.NN±0.NN`.
    pub fn summary(&self) -> String {
        format_success(self.success_rate, self.deviation)
    }

    pub fn total(&self) -> u64 {
        self.confusion.iter().flatten().sum()
    }

    /// Fraction of all samples on the confusion diagonal.
    pub fn pooled_accuracy(&self) -> f64 {
        let diag: u64 = (0..self.confusion.len()).map(|i| self.confusion[i][i]).sum();
        diag as f64 / self.total() as f64
    }

    pub fn write_json<W: Write>(&self, writer: W) -> crate::Result<()> {
        serde_json::to_writer_pretty(writer, self)?;
        Ok(())
    }

    /// Header row of predicted classes, then one row per true class.
    pub fn confusion_csv(&self) -> String {
        let mut out = String::from("true\\predicted");
        for c in &self.classes {
            out.push(',');
            out.push_str(c);
        }
        out.push('\n');
        for (name, row) in self.classes.iter().zip(&self.confusion) {
            out.push_str(name);
            for v in row {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        out
    }

    /// Row-normalized confusion as a binary PGM, each cell `cell` pixels wide;
    /// white is a full row.
    pub fn confusion_pgm(&self, cell: usize) -> Vec<u8> {
        let c = self.classes.len();
        let side = c * cell.max(1);
        let mut pixels = Vec::with_capacity(side * side);
        for y in 0..side {
            let row = &self.confusion[y / cell.max(1)];
            let total: u64 = row.iter().sum();
            for x in 0..side {
                let v = row[x / cell.max(1)];
                let level = if total == 0 {
                    0
                } else {
                    (255.0 * v as f64 / total as f64).round() as u8
                };
                pixels.push(level);
            }
        }
        crate::data::encode_pgm(side, side, &pixels)
    }
}

pub fn format_success(success_rate: f64, deviation: f64) -> String {
    format!("{success_rate:.2}±{deviation:.2}")
}
