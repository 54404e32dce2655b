//! Procedural grey textures for desk-scale experiments.
//!
//! Class `c` uses family `c % 4` with parameters that shift with `c / 4`;
//! each image jitters phase, orientation and scale around its class centre
//! and carries mild Gaussian grain.

use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use super::{write_pgm, DatasetIndex};
use crate::error::{Error, Result};
use crate::grey::GreyImage;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TextureFamily {
    Grating,
    Checkerboard,
    FilteredNoise,
    StepEdge,
}

impl TextureFamily {
    pub fn for_class(class: usize) -> Self {
        match class % 4 {
            0 => Self::Grating,
            1 => Self::Checkerboard,
            2 => Self::FilteredNoise,
            _ => Self::StepEdge,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Grating => "grating",
            Self::Checkerboard => "checkerboard",
            Self::FilteredNoise => "filtered_noise",
            Self::StepEdge => "step_edge",
        }
    }
}

/// Generated images with their index. Entry paths are relative
/// (`<class>/<class>_<i>.pgm`) until written to disk.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthDataset {
    pub index: DatasetIndex,
    pub images: Vec<GreyImage>,
}

impl SynthDataset {
    /// Writes `<root>/<class>/<file>.pgm` for every image and returns the
    /// index with absolute paths.
    pub fn write_to(&self, root: impl AsRef<Path>) -> Result<DatasetIndex> {
        let root = root.as_ref();
        let mut entries = Vec::with_capacity(self.images.len());
        for ((rel, label), img) in self.index.entries().iter().zip(&self.images) {
            let path = root.join(rel);
            if let Some(dir) = path.parent() {
                std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
            }
            write_pgm(&path, img)?;
            entries.push((path, label.clone()));
        }
        Ok(DatasetIndex::from_entries(entries))
    }
}

/// Per-image generator seed; distinct for every (seed, class, item).
fn image_seed(seed: u64, class: usize, item: usize) -> u64 {
    let mut z = seed ^ ((class as u64) << 32 | item as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn synth_texture_dataset(classes: usize, per_class: usize, size: usize, seed: u64) -> Result<SynthDataset> {
    if classes < 2 {
        return Err(Error::param("synthetic dataset needs at least 2 classes"));
    }
    if per_class == 0 || size == 0 {
        return Err(Error::param("images per class and image size must be >= 1"));
    }
    let mut entries = Vec::with_capacity(classes * per_class);
    let mut images = Vec::with_capacity(classes * per_class);
    for class in 0..classes {
        let family = TextureFamily::for_class(class);
        let label = format!("c{class:02}_{}", family.name());
        for item in 0..per_class {
            let mut rng = ChaCha8Rng::seed_from_u64(image_seed(seed, class, item));
            images.push(generate(family, class / 4, size, &mut rng)?);
            entries.push((PathBuf::from(&label).join(format!("{label}_{item:03}.pgm")), label.clone()));
        }
    }
    Ok(SynthDataset {
        index: DatasetIndex::from_entries(entries),
        images,
    })
}

fn jitter(rng: &mut ChaCha8Rng, centre: f64, rel: f64) -> f64 {
    centre * (1.0 + rng.gen_range(-rel..=rel))
}

fn generate(family: TextureFamily, variant: usize, size: usize, rng: &mut ChaCha8Rng) -> Result<GreyImage> {
    let v = variant as f64;
    let mut field = vec![0.0f64; size * size];
    match family {
        TextureFamily::Grating => {
            let period = jitter(rng, 10.0 + 6.0 * v, 0.1);
            let angle = (30.0 * v).to_radians() + rng.gen_range(-0.2..=0.2);
            let phase = rng.gen_range(0.0..std::f64::consts::TAU);
            let amp = jitter(rng, 90.0, 0.1);
            let (s, c) = angle.sin_cos();
            for (i, f) in field.iter_mut().enumerate() {
                let (x, y) = ((i % size) as f64, (i / size) as f64);
                let u = (x * c + y * s) * std::f64::consts::TAU / period + phase;
                *f = 128.0 + amp * u.sin();
            }
        }
        TextureFamily::Checkerboard => {
            let cell = jitter(rng, 8.0 + 4.0 * v, 0.1);
            let (ox, oy) = (rng.gen_range(0.0..cell), rng.gen_range(0.0..cell));
            let dark = rng.gen_range(50.0..70.0);
            let light = rng.gen_range(180.0..200.0);
            for (i, f) in field.iter_mut().enumerate() {
                let (x, y) = ((i % size) as f64, (i / size) as f64);
                let parity = (((x + ox) / cell).floor() + ((y + oy) / cell).floor()) as i64;
                *f = if parity.rem_euclid(2) == 0 { dark } else { light };
            }
        }
        TextureFamily::FilteredNoise => {
            for f in field.iter_mut() {
                *f = rng.gen_range(-1.0..1.0);
            }
            let radius = 2 + variant;
            for _ in 0..2 {
                field = box_blur(&field, size, radius);
            }
            let (mean, sd) = mean_sd(&field);
            let contrast = jitter(rng, 40.0, 0.1);
            for f in field.iter_mut() {
                *f = 128.0 + contrast * (*f - mean) / sd.max(1e-12);
            }
        }
        TextureFamily::StepEdge => {
            let lines = 2 + variant;
            let step = jitter(rng, 50.0, 0.1);
            for f in field.iter_mut() {
                *f = 128.0;
            }
            for _ in 0..lines {
                let angle = rng.gen_range(0.0..std::f64::consts::PI);
                let (s, c) = angle.sin_cos();
                let offset = rng.gen_range(0.2..0.8) * size as f64;
                let centre = size as f64 / 2.0;
                let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
                for (i, f) in field.iter_mut().enumerate() {
                    let (x, y) = ((i % size) as f64 - centre, (i / size) as f64 - centre);
                    let side = x * c + y * s + centre - offset;
                    *f += sign * step * side.signum();
                }
            }
        }
    }
    let grain = Normal::new(0.0, 6.0).map_err(|e| Error::param(e.to_string()))?;
    let pixels = field
        .into_iter()
        .map(|f| (f + grain.sample(rng)).round().clamp(0.0, 255.0) as u8)
        .collect();
    GreyImage::new(size, size, pixels)
}

/// Separable box blur with wrap-around borders.
fn box_blur(src: &[f64], size: usize, radius: usize) -> Vec<f64> {
    let norm = (2 * radius + 1) as f64;
    let wrap = |k: isize| k.rem_euclid(size as isize) as usize;
    let mut tmp = vec![0.0; src.len()];
    for y in 0..size {
        for x in 0..size {
            let s: f64 = (-(radius as isize)..=radius as isize)
                .map(|d| src[y * size + wrap(x as isize + d)])
                .sum();
            tmp[y * size + x] = s / norm;
        }
    }
    let mut out = vec![0.0; src.len()];
    for y in 0..size {
        for x in 0..size {
            let s: f64 = (-(radius as isize)..=radius as isize)
                .map(|d| tmp[wrap(y as isize + d) * size + x])
                .sum();
            out[y * size + x] = s / norm;
        }
    }
    out
}

fn mean_sd(v: &[f64]) -> (f64, f64) {
    let n = v.len() as f64;
    let mean = v.iter().sum::<f64>() / n;
    let var = v.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    (mean, var.sqrt())
}
