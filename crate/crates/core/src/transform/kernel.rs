use num_complex::Complex64;

use crate::error::{Error, Result};

/// Sampled chirp kernel `G(i) = e^{-j t i^2}` for `i` in `-r..=r`.
///
/// `real_part[r]`/`imag_part[r]` hold the centre tap.
#[derive(Debug, Clone, PartialEq)]
pub struct ChirpKernel {
    t: f64,
    r: usize,
    real_part: Vec<f64>,
    imag_part: Vec<f64>,
}

impl ChirpKernel {
    pub fn new(t: f64, r: usize) -> Result<Self> {
        super::check_t(t)?;
        if r == 0 {
            return Err(Error::param("kernel radius r must be >= 1"));
        }
        // Evaluate offsets 0..=r once and mirror, so symmetry is exact.
        let half: Vec<(f64, f64)> = (0..=r)
            .map(|i| {
                let phase = t * (i * i) as f64;
                (phase.cos(), -phase.sin())
            })
            .collect();
        let (real_part, imag_part) = (0..=2 * r).map(|idx| half[idx.abs_diff(r)]).unzip();
        Ok(Self {
            t,
            r,
            real_part,
            imag_part,
        })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn radius(&self) -> usize {
        self.r
    }

    pub fn real_part(&self) -> &[f64] {
        &self.real_part
    }

    pub fn imag_part(&self) -> &[f64] {
        &self.imag_part
    }

    /// Taps as complex numbers, index `i + r` for offset `i`.
    pub fn taps(&self) -> Vec<Complex64> {
        self.real_part
            .iter()
            .zip(&self.imag_part)
            .map(|(&re, &im)| Complex64::new(re, im))
            .collect()
    }
}
