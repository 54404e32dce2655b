//! Real-valued evaluation of `|f * G|` that never forms complex numbers.
//!
//! With `d_i = f(x - i) + f(x + i)` the squared magnitude regroups to
//!
//! ```text
//! f(x)^2 + 2 f(x) sum_i d_i cos(t i^2) + sum_i d_i^2
//!        + 2 sum_{i<j} d_i d_j cos(t i^2 - t j^2)
//! ```
//!
//! It costs `O(r^2)` per sample and serves as an independent check of the
//! convolution path.

use super::{mirror_index, ChirpKernel, Signal1D, TransformField, TransformParams};
use crate::error::Result;

pub fn transform_1d_expanded(f: &Signal1D, t: f64, r: usize) -> Result<TransformField> {
    // Parameter validation shared with the convolution path.
    ChirpKernel::new(t, r)?;
    let samples = f.samples();
    let n = samples.len();
    let at = |k: isize| samples[mirror_index(k, n)];

    let phase: Vec<f64> = (0..=r).map(|i| t * (i * i) as f64).collect();
    let cos_phase: Vec<f64> = phase.iter().map(|p| p.cos()).collect();
    // cos(t i^2 - t j^2) for 1 <= i < j <= r, row-major over i.
    let mut cross = vec![0.0; (r + 1) * (r + 1)];
    for i in 1..=r {
        for j in i + 1..=r {
            cross[i * (r + 1) + j] = (phase[i] - phase[j]).cos();
        }
    }

    let mut d = vec![0.0; r + 1];
    let values = (0..n as isize)
        .map(|x| {
            let centre = samples[x as usize];
            for i in 1..=r {
                d[i] = at(x - i as isize) + at(x + i as isize);
            }
            let mut linear = 0.0;
            let mut diagonal = 0.0;
            let mut off_diagonal = 0.0;
            for i in 1..=r {
                linear += d[i] * cos_phase[i];
                diagonal += d[i] * d[i];
                for j in i + 1..=r {
                    off_diagonal += d[i] * d[j] * cross[i * (r + 1) + j];
                }
            }
            let squared = centre * centre + 2.0 * centre * linear + diagonal + 2.0 * off_diagonal;
            squared.max(0.0).sqrt()
        })
        .collect::<Vec<_>>();

    Ok(TransformField {
        width: n,
        height: 1,
        values,
        params: TransformParams::Spatial { t, r },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn impulse_centre_is_one() {
        let f = Signal1D::new(vec![0.0, 0.0, 1.0, 0.0, 0.0]).unwrap();
        let out = transform_1d_expanded(&f, 0.5, 1).unwrap();
        let sq = out.values()[2].powi(2);
        assert!((sq - 1.0).abs() < 1e-15);
    }

    #[test]
    fn t_zero_is_squared_box_sum() {
        let raw = [3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0, 6.0];
        let f = Signal1D::new(raw.to_vec()).unwrap();
        let r = 2;
        let out = transform_1d_expanded(&f, 0.0, r).unwrap();
        for x in 0..raw.len() as isize {
            let d_sum: f64 = (1..=r as isize)
                .map(|i| raw[mirror_index(x - i, 8)] + raw[mirror_index(x + i, 8)])
                .sum();
            let expected = (raw[x as usize] + d_sum).powi(2);
            let got = out.values()[x as usize].powi(2);
            assert!((got - expected).abs() <= 1e-12 * expected, "{got} vs {expected}");
        }
    }

    #[test]
    fn rejects_zero_radius() {
        let f = Signal1D::new(vec![1.0]).unwrap();
        assert!(transform_1d_expanded(&f, 0.1, 0).is_err());
    }
}
