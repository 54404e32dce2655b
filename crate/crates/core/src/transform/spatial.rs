use num_complex::Complex64;

use super::{ChirpKernel, Signal1D, TransformField, TransformParams};
use crate::error::Result;
use crate::grey::GreyImage;

/// Half-sample symmetric reflection of `k` into `0..n` (`... c b a | a b c ... z | z y ...`).
///
/// Offsets larger than the extent keep reflecting, so any radius is valid.
pub(crate) fn mirror_index(k: isize, n: usize) -> usize {
    let period = 2 * n as isize;
    let m = k.rem_euclid(period) as usize;
    if m < n {
        m
    } else {
        2 * n - 1 - m
    }
}

fn pad_mirrored<T: Copy>(src: &[T], r: usize, out: &mut Vec<T>) {
    out.clear();
    let n = src.len();
    out.extend((0..n + 2 * r).map(|p| src[mirror_index(p as isize - r as isize, n)]));
}

/// Correlates a padded real sequence with the kernel taps.
#[inline]
fn chirp_sum_real(window: &[f64], taps: &[Complex64]) -> Complex64 {
    window
        .iter()
        .zip(taps)
        .fold(Complex64::new(0.0, 0.0), |acc, (&v, g)| acc + g * v)
}

#[inline]
fn chirp_sum_complex<'a>(window: impl Iterator<Item = &'a Complex64>, taps: &[Complex64]) -> Complex64 {
    window
        .zip(taps)
        .fold(Complex64::new(0.0, 0.0), |acc, (v, g)| acc + g * v)
}

/// `|f * G|` at every sample, with mirrored borders.
pub fn transform_1d(f: &Signal1D, t: f64, r: usize) -> Result<TransformField> {
    let kernel = ChirpKernel::new(t, r)?;
    let taps = kernel.taps();
    let mut padded = Vec::new();
    pad_mirrored(f.samples(), r, &mut padded);
    let values = padded
        .windows(taps.len())
        .map(|w| chirp_sum_real(w, &taps).norm())
        .collect::<Vec<_>>();
    Ok(TransformField {
        width: values.len(),
        height: 1,
        values,
        params: TransformParams::Spatial { t, r },
    })
}

/// `|I * G2|` with `G2(x, y) = e^{-j t (x^2 + y^2)}` on `[-r, r]^2`.
///
/// Evaluated separably: complex row pass, complex column pass, then one
/// magnitude per pixel.
pub fn transform_2d(image: &GreyImage, t: f64, r: usize) -> Result<TransformField> {
    let kernel = ChirpKernel::new(t, r)?;
    let taps = kernel.taps();
    let (w, h) = (image.width(), image.height());
    let src = image.to_f64();

    let mut rows = vec![Complex64::new(0.0, 0.0); w * h];
    let mut padded = Vec::with_capacity(w + 2 * r);
    for (src_row, dst_row) in src.chunks_exact(w).zip(rows.chunks_exact_mut(w)) {
        pad_mirrored(src_row, r, &mut padded);
        for (dst, win) in dst_row.iter_mut().zip(padded.windows(taps.len())) {
            *dst = chirp_sum_real(win, &taps);
        }
    }

    let mut values = vec![0.0; w * h];
    let mut column = Vec::with_capacity(h);
    let mut padded = Vec::with_capacity(h + 2 * r);
    for x in 0..w {
        column.clear();
        column.extend((0..h).map(|y| rows[y * w + x]));
        pad_mirrored(&column, r, &mut padded);
        for (y, win) in padded.windows(taps.len()).enumerate() {
            values[y * w + x] = chirp_sum_complex(win.iter(), &taps).norm();
        }
    }

    Ok(TransformField {
        values,
        width: w,
        height: h,
        params: TransformParams::Spatial { t, r },
    })
}
