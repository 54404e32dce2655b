//! Dataset-level composition of the descriptor and classification stages.

use rayon::prelude::*;

use crate::classify::{cross_validate, ClassificationReport, CvParams, FeatureMatrix};
use crate::data::{load_grey_image, DatasetIndex, NoiseSpec};
use crate::error::{Error, Result};
use crate::features::{build_descriptor_with, DescriptorParams, DescriptorRecord, T_COUNT};
use crate::grey::GreyImage;

/// Runs `f` on a pool of `jobs` threads (0 = rayon default).
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::param(format!("cannot build thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// Descriptors for in-memory images, in input order.
pub fn describe_images(images: &[GreyImage], params: &DescriptorParams) -> Result<Vec<Vec<f64>>> {
    images
        .par_iter()
        .map(|img| build_descriptor_with(img, params).map(|d| d.into_values()))
        .collect()
}

/// Loads every indexed image, optionally corrupts it, and builds its
/// descriptor. Image `i` is corrupted with seed `noise.seed + i`.
pub fn describe_dataset(
    index: &DatasetIndex,
    params: &DescriptorParams,
    noise: Option<&NoiseSpec>,
) -> Result<Vec<DescriptorRecord>> {
    params.validate()?;
    index
        .entries()
        .par_iter()
        .enumerate()
        .map(|(i, (path, label))| {
            let mut img = load_grey_image(path)?;
            if let Some(spec) = noise {
                let per_image = NoiseSpec {
                    seed: spec.seed.wrapping_add(i as u64),
                    ..*spec
                };
                img = per_image.apply(&img)?;
            }
            let values = build_descriptor_with(&img, params)?.into_values();
            Ok(DescriptorRecord {
                path: path.to_string_lossy().into_owned(),
                label: label.clone(),
                values,
            })
        })
        .collect()
}

/// Cross-validates a descriptor table. Rows are sorted by (label, path)
/// first, so the report does not depend on input row order. The moment
/// count used by signed-root scaling is inferred from the row width.
pub fn classify_records(records: &[DescriptorRecord], params: &CvParams) -> Result<ClassificationReport> {
    if records.is_empty() {
        return Err(Error::input("no descriptor rows to classify"));
    }
    let mut order: Vec<&DescriptorRecord> = records.iter().collect();
    order.sort_by(|a, b| (&a.label, &a.path).cmp(&(&b.label, &b.path)));
    let rows: Vec<Vec<f64>> = order.iter().map(|r| r.values.clone()).collect();
    let labels: Vec<&str> = order.iter().map(|r| r.label.as_str()).collect();
    let matrix = FeatureMatrix::from_rows(&rows, &labels)?;
    let width = matrix.n_features();
    if width % T_COUNT != 0 {
        return Err(Error::input(format!(
            "descriptor rows have {width} values, expected a multiple of {T_COUNT}"
        )));
    }
    let params = CvParams {
        moments: width / T_COUNT,
        ..*params
    };
    cross_validate(&matrix, &params)
}
