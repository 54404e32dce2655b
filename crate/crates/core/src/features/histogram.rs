use crate::error::{Error, Result};
use crate::transform::TransformField;

pub const DEFAULT_BINS: usize = 256;

/// Normalized histogram with equal-width bins over the field's value range.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    bin_centers: Vec<f64>,
    mass: Vec<f64>,
}

impl Histogram {
    /// Builds a histogram from explicit centres and masses; masses are
    /// renormalized to sum to one.
    pub fn from_parts(bin_centers: Vec<f64>, mass: Vec<f64>) -> Result<Self> {
        if bin_centers.is_empty() || bin_centers.len() != mass.len() {
            return Err(Error::input("histogram needs matching, non-empty centres and masses"));
        }
        if mass.iter().any(|m| !m.is_finite() || *m < 0.0) || bin_centers.iter().any(|c| !c.is_finite()) {
            return Err(Error::input("histogram entries must be finite and masses non-negative"));
        }
        let total: f64 = mass.iter().sum();
        if total <= 0.0 {
            return Err(Error::input("histogram has zero total mass"));
        }
        let mass = mass.into_iter().map(|m| m / total).collect();
        Ok(Self { bin_centers, mass })
    }

    pub fn bin_count(&self) -> usize {
        self.mass.len()
    }

    pub fn bin_centers(&self) -> &[f64] {
        &self.bin_centers
    }

    pub fn mass(&self) -> &[f64] {
        &self.mass
    }
}

/// Bins `field` into `bins` equal-width bins spanning `[min, max]`.
///
/// The maximum lands in the last bin. When the field is constant every
/// sample goes to bin 0 and all centres equal that constant.
pub fn histogram(field: &TransformField, bins: usize) -> Result<Histogram> {
    if bins == 0 {
        return Err(Error::param("histogram bin count must be >= 1"));
    }
    let values = field.values();
    if values.is_empty() {
        return Err(Error::input("cannot histogram an empty field"));
    }
    let (lo, hi) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));

    let n = values.len() as f64;
    if lo == hi {
        let mut mass = vec![0.0; bins];
        mass[0] = 1.0;
        return Ok(Histogram {
            bin_centers: vec![lo; bins],
            mass,
        });
    }

    let width = (hi - lo) / bins as f64;
    let mut counts = vec![0usize; bins];
    for &v in values {
        let idx = (((v - lo) / width) as usize).min(bins - 1);
        counts[idx] += 1;
    }
    let bin_centers = (0..bins).map(|k| lo + (k as f64 + 0.5) * width).collect();
    let mass = counts.into_iter().map(|c| c as f64 / n).collect();
    Ok(Histogram { bin_centers, mass })
}
