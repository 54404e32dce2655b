use nalgebra::DMatrix;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::pca::{project, project_row};
use super::report::{ClassificationReport, ReportParams};
use super::{
    lda_fit, lda_predict, pca_fit, FeatureMatrix, FeatureScaling, LdaModel, PcaModel, DEFAULT_PCA_VARIANCE,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CvParams {
    pub folds: usize,
    pub seed: u64,
    pub pca_variance: f64,
    pub scaling: FeatureScaling,
    /// Moments per `t` block; read only by [`FeatureScaling::SignedRoot`].
    pub moments: usize,
}

impl Default for CvParams {
    fn default() -> Self {
        Self {
            folds: 10,
            seed: 0,
            pca_variance: DEFAULT_PCA_VARIANCE,
            scaling: FeatureScaling::Raw,
            moments: 1,
        }
    }
}

/// Splits sample indices into `k` stratified folds.
///
/// Each class's indices are shuffled with one seeded generator (classes
/// visited in label order) and dealt round-robin; the dealing position
/// carries over between classes so fold sizes differ by at most one. Classes
/// smaller than `k` are spread over as many folds as they have samples.
/// Each returned fold is sorted.
pub fn stratified_folds(labels: &[usize], k: usize, seed: u64) -> Result<Vec<Vec<usize>>> {
    if k < 2 || k > labels.len() {
        return Err(Error::param(format!(
            "fold count must lie in [2, {}], got {k}",
            labels.len()
        )));
    }
    let n_classes = labels.iter().max().map_or(0, |&m| m + 1);
    let mut by_class = vec![Vec::new(); n_classes];
    for (i, &l) in labels.iter().enumerate() {
        by_class[l].push(i);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut folds = vec![Vec::new(); k];
    let mut next = 0;
    for mut members in by_class {
        members.shuffle(&mut rng);
        for idx in members {
            folds[next].push(idx);
            next = (next + 1) % k;
        }
    }
    for f in &mut folds {
        f.sort_unstable();
    }
    Ok(folds)
}

/// PCA + LDA fitted on the training rows of one fold.
#[derive(Debug, Clone, PartialEq)]
pub struct FoldModel {
    pub pca: PcaModel,
    pub lda: LdaModel,
}

impl FoldModel {
    /// Fits on `x.select(train)`; other rows of `x` are never read.
    pub fn fit(x: &FeatureMatrix, train: &[usize], pca_variance: f64) -> Result<Self> {
        let train_set = x.select(train);
        let pca = pca_fit(&train_set, pca_variance)?;
        let scores = train_set.with_data(project(&pca, train_set.data())?);
        let lda = lda_fit(&scores)?;
        Ok(Self { pca, lda })
    }

    pub fn predict(&self, row: &[f64]) -> Result<usize> {
        lda_predict(&self.lda, &project_row(&self.pca, row)?)
    }
}

/// Stratified k-fold evaluation of PCA + LDA.
pub fn cross_validate(x: &FeatureMatrix, params: &CvParams) -> Result<ClassificationReport> {
    let scaled = params.scaling.apply(x, params.moments)?;
    let x = &scaled;
    let folds = stratified_folds(x.labels(), params.folds, params.seed)?;
    let n = x.n_samples();
    let n_classes = x.n_classes();

    let per_fold: Vec<Result<Vec<(usize, usize)>>> = folds
        .par_iter()
        .map(|test| {
            let mut in_test = vec![false; n];
            for &i in test {
                in_test[i] = true;
            }
            let train: Vec<usize> = (0..n).filter(|&i| !in_test[i]).collect();
            let model = FoldModel::fit(x, &train, params.pca_variance)?;
            test.iter()
                .map(|&i| {
                    let row: Vec<f64> = x.data().row(i).iter().copied().collect();
                    Ok((x.labels()[i], model.predict(&row)?))
                })
                .collect()
        })
        .collect();

    let mut confusion = DMatrix::<u64>::zeros(n_classes, n_classes);
    let mut fold_accuracies = Vec::with_capacity(folds.len());
    for outcome in per_fold {
        let pairs = outcome?;
        let correct = pairs.iter().filter(|(truth, pred)| truth == pred).count();
        fold_accuracies.push(correct as f64 / pairs.len() as f64);
        for (truth, pred) in pairs {
            confusion[(truth, pred)] += 1;
        }
    }

    Ok(ClassificationReport::new(
        fold_accuracies,
        confusion,
        x.class_names().to_vec(),
        ReportParams {
            folds: params.folds,
            seed: params.seed,
            pca_variance: params.pca_variance,
            n_samples: n,
            n_features: x.n_features(),
            scaling: params.scaling,
        },
    ))
}
