//! Independent reference implementations shared by the integration tests.
//!
//! Nothing here calls into the transform or feature code paths it checks.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Half-sample symmetric reflection, written as an explicit walk.
pub fn reflect(mut k: i64, n: usize) -> usize {
    let n = n as i64;
    loop {
        if k < 0 {
            k = -k - 1;
        } else if k >= n {
            k = 2 * n - 1 - k;
        } else {
            return k as usize;
        }
    }
}

/// Naive complex correlation `sum_i f(x+i) e^{-j t i^2}` with explicit
/// (re, im) arithmetic; returns `(re, im)` per sample.
pub fn naive_conv_1d(f: &[f64], t: f64, r: usize) -> Vec<(f64, f64)> {
    let n = f.len();
    (0..n as i64)
        .map(|x| {
            let (mut re, mut im) = (0.0, 0.0);
            for i in -(r as i64)..=r as i64 {
                let v = f[reflect(x + i, n)];
                let phase = t * (i * i) as f64;
                re += v * phase.cos();
                im -= v * phase.sin();
            }
            (re, im)
        })
        .collect()
}

pub fn naive_magnitude_1d(f: &[f64], t: f64, r: usize) -> Vec<f64> {
    naive_conv_1d(f, t, r)
        .into_iter()
        .map(|(re, im)| (re * re + im * im).sqrt())
        .collect()
}

/// Direct (non-separable) 2D correlation with `e^{-j t (x^2 + y^2)}`.
pub fn naive_magnitude_2d(pixels: &[u8], w: usize, h: usize, t: f64, r: usize) -> Vec<f64> {
    let r = r as i64;
    let mut out = vec![0.0; w * h];
    for y in 0..h as i64 {
        for x in 0..w as i64 {
            let (mut re, mut im) = (0.0, 0.0);
            for j in -r..=r {
                for i in -r..=r {
                    let v = f64::from(pixels[reflect(y + j, h) * w + reflect(x + i, w)]);
                    let phase = t * (i * i + j * j) as f64;
                    re += v * phase.cos();
                    im -= v * phase.sin();
                }
            }
            out[y as usize * w + x as usize] = (re * re + im * im).sqrt();
        }
    }
    out
}

/// Sum of the `2r+1` reflected neighbours of every sample.
pub fn box_sum_1d(f: &[f64], r: usize) -> Vec<f64> {
    let n = f.len();
    (0..n as i64)
        .map(|x| (-(r as i64)..=r as i64).map(|i| f[reflect(x + i, n)]).sum())
        .collect()
}

pub fn box_sum_2d(pixels: &[u8], w: usize, h: usize, r: usize) -> Vec<f64> {
    let r = r as i64;
    let mut out = vec![0.0; w * h];
    for y in 0..h as i64 {
        for x in 0..w as i64 {
            let mut s = 0.0;
            for j in -r..=r {
                for i in -r..=r {
                    s += f64::from(pixels[reflect(y + j, h) * w + reflect(x + i, w)]);
                }
            }
            out[y as usize * w + x as usize] = s;
        }
    }
    out
}

pub fn random_integer_signal(rng: &mut ChaCha8Rng, len: usize) -> Vec<f64> {
    (0..len).map(|_| rng.gen_range(0..=255) as f64).collect()
}

pub fn random_pixels(rng: &mut ChaCha8Rng, len: usize) -> Vec<u8> {
    (0..len).map(|_| rng.gen()).collect()
}

/// `|a - b| <= tol * |b|` elementwise, reporting the worst index.
pub fn assert_rel_close(got: &[f64], want: &[f64], tol: f64, what: &str) {
    assert_eq!(got.len(), want.len(), "{what}: length");
    for (i, (a, b)) in got.iter().zip(want).enumerate() {
        let err = (a - b).abs();
        assert!(
            err <= tol * b.abs(),
            "{what}: index {i}: {a} vs {b} (rel err {})",
            err / b.abs()
        );
    }
}

/// Neumaier-compensated sum.
pub fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Central moments by compensated direct summation.
pub fn reference_moments(centres: &[f64], mass: &[f64], max_order: usize) -> Vec<f64> {
    let mean = compensated_sum(centres.iter().zip(mass).map(|(x, p)| x * p));
    (1..=max_order as i32)
        .map(|m| compensated_sum(centres.iter().zip(mass).map(|(x, p)| (x - mean).powi(m) * p)))
        .collect()
}

/// Histogram by scanning bin edges, independent of index arithmetic.
pub fn reference_histogram(values: &[f64], bins: usize) -> Vec<usize> {
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut counts = vec![0usize; bins];
    if lo == hi {
        counts[0] = values.len();
        return counts;
    }
    let width = (hi - lo) / bins as f64;
    for &v in values {
        let mut k = bins - 1;
        while k > 0 && v < lo + k as f64 * width {
            k -= 1;
        }
        counts[k] += 1;
    }
    counts
}

/// Isotropic Gaussian blob around `centre`.
pub fn blob(rng: &mut ChaCha8Rng, centre: &[f64], sigma: f64, n: usize) -> Vec<Vec<f64>> {
    use rand_distr::{Distribution, Normal};
    let normal = Normal::new(0.0, sigma).unwrap();
    (0..n)
        .map(|_| centre.iter().map(|c| c + normal.sample(rng)).collect())
        .collect()
}
