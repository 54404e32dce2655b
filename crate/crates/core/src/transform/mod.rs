//! Discrete Schroedinger transform of 1D signals and grey-level images.
//!
//! Two formulations are provided. The spatial one convolves the input with
//! the truncated chirp kernel `e^{-j t x^2}` over offsets `-r..=r`, using
//! half-sample symmetric reflection at the borders. The frequency one applies
//! the multiplier `e^{-j k d_uv t}` to the centred 2D spectrum, which is
//! inherently circular. The two are not expected to agree near borders.
//!
//! All arithmetic is `f64`; grey levels are used as raw values.

mod expanded;
mod frequency;
mod kernel;
mod signal;
mod spatial;

pub use expanded::transform_1d_expanded;
pub use frequency::{transform_frequency, FrequencyMultiplier, DEFAULT_K};
pub use kernel::ChirpKernel;
pub use signal::{demo_signal, Signal1D};
pub use spatial::{transform_1d, transform_2d};

pub(crate) use spatial::mirror_index;

/// Parameters a [`TransformField`] was produced with.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TransformParams {
    Spatial { t: f64, r: usize },
    Frequency { t: f64, k: f64 },
}

/// Non-negative magnitude field produced by a transform.
///
/// 1D results have `height == 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformField {
    pub(crate) values: Vec<f64>,
    pub(crate) width: usize,
    pub(crate) height: usize,
    pub(crate) params: TransformParams,
}

impl TransformField {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn params(&self) -> TransformParams {
        self.params
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Wraps precomputed values, e.g. for histogramming arbitrary data.
    pub fn from_values(values: Vec<f64>, width: usize, height: usize, params: TransformParams) -> crate::Result<Self> {
        if values.len() != width * height {
            return Err(crate::Error::DimensionMismatch {
                expected: width * height,
                got: values.len(),
            });
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite() || **v < 0.0) {
            return Err(crate::Error::input(format!(
                "transform values must be finite and non-negative, found {v}"
            )));
        }
        Ok(Self {
            values,
            width,
            height,
            params,
        })
    }
}

pub(crate) fn check_t(t: f64) -> crate::Result<()> {
    if !t.is_finite() || t < 0.0 {
        return Err(crate::Error::param(format!("t must be finite and >= 0, got {t}")));
    }
    Ok(())
}
