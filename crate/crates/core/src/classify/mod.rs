//! PCA + LDA classification under stratified k-fold cross-validation.

mod cv;
mod lda;
mod matrix;
mod pca;
mod report;
mod scaling;

pub use cv::{cross_validate, stratified_folds, CvParams, FoldModel};
pub use lda::{lda_fit, lda_predict, LdaModel, LDA_RIDGE};
pub use matrix::FeatureMatrix;
pub use pca::{pca_fit, pca_transform, PcaModel, DEFAULT_PCA_VARIANCE};
pub use report::{format_success, ClassificationReport, ReportParams};
pub use scaling::FeatureScaling;
