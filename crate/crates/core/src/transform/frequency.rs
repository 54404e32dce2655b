use num_complex::Complex64;
use rustfft::{FftDirection, FftPlanner};

use super::{check_t, TransformField, TransformParams};
use crate::error::{Error, Result};
use crate::grey::GreyImage;

pub const DEFAULT_K: f64 = 1.0;

/// Phase multiplier `e^{-j k d_uv t}` laid out in natural (unshifted) FFT order.
///
/// `d_uv` is the squared distance of each bin from the centre of the shifted
/// spectrum, with the centre at `(floor(m/2), floor(n/2))`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyMultiplier {
    k: f64,
    t: f64,
    width: usize,
    height: usize,
    distances: Vec<f64>,
}

/// Distance of natural-order bin `u` from the centre of an `m`-point shifted spectrum.
fn centred_offset(u: usize, m: usize) -> f64 {
    let centre = m / 2;
    let shifted = (u + centre) % m;
    shifted as f64 - centre as f64
}

impl FrequencyMultiplier {
    pub fn new(width: usize, height: usize, t: f64, k: f64) -> Result<Self> {
        check_t(t)?;
        if !k.is_finite() {
            return Err(Error::param(format!("k must be finite, got {k}")));
        }
        if width == 0 || height == 0 {
            return Err(Error::param("multiplier dimensions must be positive"));
        }
        let mut distances = Vec::with_capacity(width * height);
        for v in 0..height {
            let dv = centred_offset(v, height);
            for u in 0..width {
                let du = centred_offset(u, width);
                distances.push(du * du + dv * dv);
            }
        }
        Ok(Self {
            k,
            t,
            width,
            height,
            distances,
        })
    }

    /// Squared centred distances, row-major in natural FFT order.
    pub fn distances(&self) -> &[f64] {
        &self.distances
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    fn apply(&self, spectrum: &mut [Complex64]) {
        for (bin, &d) in spectrum.iter_mut().zip(&self.distances) {
            *bin *= Complex64::from_polar(1.0, -self.k * d * self.t);
        }
    }
}

/// Row-major in-place 2D DFT (unnormalized).
fn fft_2d(width: usize, height: usize, buffer: &mut [Complex64], direction: FftDirection) {
    let mut planner = FftPlanner::new();
    let row_fft = planner.plan_fft(width, direction);
    for row in buffer.chunks_exact_mut(width) {
        row_fft.process(row);
    }
    let col_fft = planner.plan_fft(height, direction);
    let mut column = vec![Complex64::new(0.0, 0.0); height];
    for x in 0..width {
        for (y, c) in column.iter_mut().enumerate() {
            *c = buffer[y * width + x];
        }
        col_fft.process(&mut column);
        for (y, c) in column.iter().enumerate() {
            buffer[y * width + x] = *c;
        }
    }
}

/// `|IDFT(e^{-j k d_uv t} * DFT(I))|`.
pub fn transform_frequency(image: &GreyImage, t: f64, k: f64) -> Result<TransformField> {
    let (w, h) = (image.width(), image.height());
    let multiplier = FrequencyMultiplier::new(w, h, t, k)?;
    let mut buffer: Vec<Complex64> = image
        .pixels()
        .iter()
        .map(|&p| Complex64::new(f64::from(p), 0.0))
        .collect();
    fft_2d(w, h, &mut buffer, FftDirection::Forward);
    multiplier.apply(&mut buffer);
    fft_2d(w, h, &mut buffer, FftDirection::Inverse);
    let scale = 1.0 / (w * h) as f64;
    let values = buffer.iter().map(|c| c.norm() * scale).collect();
    Ok(TransformField {
        values,
        width: w,
        height: h,
        params: TransformParams::Frequency { t, k },
    })
}
