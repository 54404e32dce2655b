mod common;

use common::*;
use dst_texture::transform::{
    transform_1d, transform_1d_expanded, transform_2d, transform_frequency, Signal1D,
};
use dst_texture::GreyImage;
use proptest::prelude::*;

#[test]
fn random_signal_matches_naive_convolution() {
    let mut rng = rng(17);
    let f = random_integer_signal(&mut rng, 256);
    let got = transform_1d(&Signal1D::new(f.clone()).unwrap(), 1e-5, 20).unwrap();
    assert_rel_close(got.values(), &naive_magnitude_1d(&f, 1e-5, 20), 1e-9, "t=1e-5 r=20");
}

#[test]
fn ones_at_pi_closed_form() {
    // |1 + 2 cos t - 2j sin t| at t = pi.
    let f = Signal1D::new(vec![1.0; 32]).unwrap();
    let got = transform_1d(&f, std::f64::consts::PI, 1).unwrap();
    for v in got.values() {
        assert!((v - 1.0).abs() < 1e-12);
    }
}

#[test]
fn expanded_matches_at_large_t() {
    let mut rng = rng(5);
    for t in [0.3, 1.0, 2.5] {
        let f = random_integer_signal(&mut rng, 80);
        let sig = Signal1D::new(f.clone()).unwrap();
        let a = transform_1d_expanded(&sig, t, 7).unwrap();
        let b = naive_magnitude_1d(&f, t, 7);
        // Cancellation makes small outputs noisy; bound by window scale.
        let scale: f64 = f.iter().sum::<f64>();
        for (x, y) in a.values().iter().zip(&b) {
            assert!((x * x - y * y).abs() <= 1e-9 * scale * scale, "{x} vs {y}");
        }
    }
}

#[test]
fn random_image_matches_direct_2d() {
    let mut rng = rng(23);
    let pixels = random_pixels(&mut rng, 32 * 32);
    let img = GreyImage::new(32, 32, pixels.clone()).unwrap();
    let got = transform_2d(&img, 1e-5, 5).unwrap();
    assert_rel_close(got.values(), &naive_magnitude_2d(&pixels, 32, 32, 1e-5, 5), 1e-9, "32x32");
}

#[test]
fn non_square_image_with_large_radius() {
    let mut rng = rng(24);
    let (w, h) = (9, 5);
    let pixels = random_pixels(&mut rng, w * h);
    let img = GreyImage::new(w, h, pixels.clone()).unwrap();
    let got = transform_2d(&img, 1e-4, 8).unwrap();
    assert_rel_close(got.values(), &naive_magnitude_2d(&pixels, w, h, 1e-4, 8), 1e-9, "r > extent");
}

#[test]
fn frequency_constant_image_is_identity() {
    let img = GreyImage::filled(20, 14, 200).unwrap();
    let out = transform_frequency(&img, 0.7, 3.0).unwrap();
    assert!(out.values().iter().all(|v| (v - 200.0).abs() < 1e-6));
}

#[test]
fn transforms_are_thread_independent() {
    let mut rng = rng(31);
    let img = GreyImage::new(48, 40, random_pixels(&mut rng, 48 * 40)).unwrap();
    let reference = transform_2d(&img, 3e-5, 6).unwrap();
    let results: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..4).map(|_| s.spawn(|| transform_2d(&img, 3e-5, 6).unwrap())).collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    for r in results {
        assert_eq!(r.values(), reference.values());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn t_zero_is_exact_box_sum(
        f in prop::collection::vec(0u8..=255, 1..200),
        r in prop::sample::select(vec![1usize, 5, 20]),
    ) {
        let f: Vec<f64> = f.into_iter().map(f64::from).collect();
        let got = transform_1d(&Signal1D::new(f.clone()).unwrap(), 0.0, r).unwrap();
        let want = box_sum_1d(&f, r);
        prop_assert_eq!(got.values(), want.as_slice());
    }

    #[test]
    fn dual_paths_agree(
        f in prop::collection::vec(0u8..=255, 1..120),
        t in prop::sample::select(vec![0.0, 1e-6, 1e-5, 1e-4]),
        r in prop::sample::select(vec![1usize, 5, 20]),
    ) {
        let sig = Signal1D::new(f.into_iter().map(f64::from).collect()).unwrap();
        let a = transform_1d(&sig, t, r).unwrap();
        let b = transform_1d_expanded(&sig, t, r).unwrap();
        for (x, y) in a.values().iter().zip(b.values()) {
            let (x2, y2) = (x * x, y * y);
            prop_assert!((x2 - y2).abs() <= 1e-9 * x2.max(f64::MIN_POSITIVE), "{} vs {}", x2, y2);
        }
    }

    #[test]
    fn separable_equals_direct(
        w in 1usize..24, h in 1usize..24, r in 1usize..6,
        t in prop::sample::select(vec![0.0, 1e-6, 1e-5, 1e-4]),
        seed in any::<u64>(),
    ) {
        let pixels = random_pixels(&mut rng(seed), w * h);
        let img = GreyImage::new(w, h, pixels.clone()).unwrap();
        let got = transform_2d(&img, t, r).unwrap();
        let want = naive_magnitude_2d(&pixels, w, h, t, r);
        for (a, b) in got.values().iter().zip(&want) {
            prop_assert!((a - b).abs() <= 1e-9 * b.abs().max(1e-300) || (*a == 0.0 && *b == 0.0));
        }
    }

    #[test]
    fn t_zero_2d_is_exact_box_sum(w in 1usize..20, h in 1usize..20, r in 1usize..5, seed in any::<u64>()) {
        let pixels = random_pixels(&mut rng(seed), w * h);
        let img = GreyImage::new(w, h, pixels.clone()).unwrap();
        let got = transform_2d(&img, 0.0, r).unwrap();
        let want = box_sum_2d(&pixels, w, h, r);
        prop_assert_eq!(got.values(), want.as_slice());
    }

    #[test]
    fn outputs_are_non_negative(
        f in prop::collection::vec(-1e3f64..1e3, 1..64),
        t in 0.0f64..10.0,
        r in 1usize..10,
    ) {
        let sig = Signal1D::new(f).unwrap();
        prop_assert!(transform_1d(&sig, t, r).unwrap().values().iter().all(|v| *v >= 0.0 && v.is_finite()));
        prop_assert!(transform_1d_expanded(&sig, t, r).unwrap().values().iter().all(|v| *v >= 0.0));
    }

    #[test]
    fn frequency_identity_cases(w in 1usize..40, h in 1usize..40, k in -5.0f64..5.0, t in 0.0f64..5.0, seed in any::<u64>()) {
        let pixels = random_pixels(&mut rng(seed), w * h);
        let img = GreyImage::new(w, h, pixels.clone()).unwrap();
        for out in [transform_frequency(&img, 0.0, k).unwrap(), transform_frequency(&img, t, 0.0).unwrap()] {
            for (a, &b) in out.values().iter().zip(&pixels) {
                prop_assert!((a - f64::from(b)).abs() < 1e-6);
            }
        }
    }
}
