use super::Histogram;
use crate::error::{Error, Result};

/// Central moments `mu^1 ..= mu^M` of a histogram.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentVector(Vec<f64>);

impl MomentVector {
    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    /// `mu^m` for `m` in `1..=M`.
    pub fn order(&self, m: usize) -> f64 {
        self.0[m - 1]
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

/// `mu^m = sum_x (x - mean)^m h(x)` with `mean = sum_x x h(x)`.
pub fn central_moments(h: &Histogram, max_order: usize) -> Result<MomentVector> {
    if max_order == 0 {
        return Err(Error::param("moment count M must be >= 1"));
    }
    let mean: f64 = h
        .bin_centers()
        .iter()
        .zip(h.mass())
        .map(|(x, p)| x * p)
        .sum();
    let mut moments = vec![0.0; max_order];
    for (&x, &p) in h.bin_centers().iter().zip(h.mass()) {
        if p == 0.0 {
            continue;
        }
        let dev = x - mean;
        let mut power = p;
        for m in moments.iter_mut() {
            power *= dev;
            *m += power;
        }
    }
    Ok(MomentVector(moments))
}
