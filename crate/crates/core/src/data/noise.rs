use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grey::GreyImage;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NoiseKind {
    Gaussian,
    SaltPepper,
}

/// `level` is the standard deviation in grey levels for Gaussian noise and
/// the corruption probability for salt-and-pepper.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoiseSpec {
    pub kind: NoiseKind,
    pub level: f64,
    pub seed: u64,
}

impl NoiseSpec {
    pub fn apply(&self, image: &GreyImage) -> Result<GreyImage> {
        match self.kind {
            NoiseKind::Gaussian => add_gaussian_noise(image, self.level, self.seed),
            NoiseKind::SaltPepper => add_salt_pepper(image, self.level, self.seed),
        }
    }
}

/// Adds independent `N(0, sigma^2)` noise to every pixel, rounding and
/// clamping to `[0, 255]`.
pub fn add_gaussian_noise(image: &GreyImage, sigma: f64, seed: u64) -> Result<GreyImage> {
    if !sigma.is_finite() || sigma < 0.0 {
        return Err(Error::param(format!("noise sigma must be finite and >= 0, got {sigma}")));
    }
    if sigma == 0.0 {
        return Ok(image.clone());
    }
    let normal = Normal::new(0.0, sigma).map_err(|e| Error::param(e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pixels = image
        .pixels()
        .iter()
        .map(|&p| (f64::from(p) + normal.sample(&mut rng)).round().clamp(0.0, 255.0) as u8)
        .collect();
    GreyImage::new(image.width(), image.height(), pixels)
}

/// Replaces each pixel with probability `p` by 0 or 255 (equally likely).
pub fn add_salt_pepper(image: &GreyImage, p: f64, seed: u64) -> Result<GreyImage> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::param(format!("salt-and-pepper probability must lie in [0, 1], got {p}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pixels = image
        .pixels()
        .iter()
        .map(|&px| {
            if rng.gen::<f64>() < p {
                if rng.gen::<bool>() {
                    255
                } else {
                    0
                }
            } else {
                px
            }
        })
        .collect();
    GreyImage::new(image.width(), image.height(), pixels)
}
