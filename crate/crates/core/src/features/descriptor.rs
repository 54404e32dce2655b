use super::{central_moments, histogram, DEFAULT_BINS};
use crate::error::{Error, Result};
use crate::grey::GreyImage;
use crate::transform::transform_2d;

/// Number of `t` samples in a descriptor sweep.
pub const T_COUNT: usize = 100;

/// Sweep configuration. The sweep visits `t_i = i * t_step` for `i = 1..=100`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DescriptorParams {
    pub r: usize,
    pub moments: usize,
    pub bins: usize,
    pub t_step: f64,
}

impl DescriptorParams {
    pub const DEFAULT_T_STEP: f64 = 1e-6;

    pub fn new(r: usize, moments: usize) -> Self {
        Self {
            r,
            moments,
            ..Self::default()
        }
    }

    pub fn t_values(&self) -> impl Iterator<Item = f64> + '_ {
        (1..=T_COUNT).map(move |i| i as f64 * self.t_step)
    }

    pub fn len(&self) -> usize {
        T_COUNT * self.moments
    }

    pub fn validate(&self) -> Result<()> {
        if self.r == 0 {
            return Err(Error::param("kernel radius r must be >= 1"));
        }
        if self.moments == 0 {
            return Err(Error::param("moment count M must be >= 1"));
        }
        if self.bins == 0 {
            return Err(Error::param("histogram bin count must be >= 1"));
        }
        if !self.t_step.is_finite() || self.t_step <= 0.0 {
            return Err(Error::param(format!("t step must be positive, got {}", self.t_step)));
        }
        Ok(())
    }
}

impl Default for DescriptorParams {
    fn default() -> Self {
        Self {
            r: 6,
            moments: 5,
            bins: DEFAULT_BINS,
            t_step: Self::DEFAULT_T_STEP,
        }
    }
}

/// Central moments of the transform histogram over the `t` sweep, t-major:
/// all `M` moments for `t_1`, then for `t_2`, and so on.
#[derive(Debug, Clone, PartialEq)]
pub struct Descriptor {
    values: Vec<f64>,
    params: DescriptorParams,
}

impl Descriptor {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn params(&self) -> &DescriptorParams {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Keeps the first `moments` moments of every `t` block.
    pub fn truncate_moments(&self, moments: usize) -> Result<Descriptor> {
        if moments == 0 || moments > self.params.moments {
            return Err(Error::param(format!(
                "cannot truncate {} moments to {moments}",
                self.params.moments
            )));
        }
        let values = self
            .values
            .chunks_exact(self.params.moments)
            .flat_map(|block| block[..moments].iter().copied())
            .collect();
        Ok(Descriptor {
            values,
            params: DescriptorParams {
                moments,
                ..self.params
            },
        })
    }
}

pub fn build_descriptor(image: &GreyImage, r: usize, moments: usize) -> Result<Descriptor> {
    build_descriptor_with(image, &DescriptorParams::new(r, moments))
}

pub fn build_descriptor_with(image: &GreyImage, params: &DescriptorParams) -> Result<Descriptor> {
    params.validate()?;
    let mut values = Vec::with_capacity(params.len());
    for t in params.t_values() {
        let field = transform_2d(image, t, params.r)?;
        let hist = histogram(&field, params.bins)?;
        values.extend(central_moments(&hist, params.moments)?.into_vec());
    }
    Ok(Descriptor {
        values,
        params: *params,
    })
}
