use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Finite, non-empty 1D profile.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal1D {
    samples: Vec<f64>,
}

impl Signal1D {
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::param("signal must have at least one sample"));
        }
        if let Some(i) = samples.iter().position(|v| !v.is_finite()) {
            return Err(Error::input(format!("sample {i} is not finite")));
        }
        Ok(Self { samples })
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Test profile made of three equal segments: a smooth sinusoid, uniform
/// noise and a square wave, all in `[0, 255]`.
pub fn demo_signal(len: usize, seed: u64) -> Result<Signal1D> {
    if len == 0 {
        return Err(Error::param("demo signal length must be >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let third = len.div_ceil(3);
    let samples = (0..len)
        .map(|x| match x / third {
            0 => {
                let phase = x as f64 / third as f64 * 4.0 * std::f64::consts::PI;
                127.5 + 100.0 * phase.sin()
            }
            1 => rng.gen_range(0.0..=255.0),
            _ => {
                if (x / (third / 8).max(1)) % 2 == 0 {
                    220.0
                } else {
                    30.0
                }
            }
        })
        .collect();
    Signal1D::new(samples)
}
