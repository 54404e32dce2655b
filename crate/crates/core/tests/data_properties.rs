mod common;

use common::*;
use dst_texture::data::{add_gaussian_noise, add_salt_pepper, synth_texture_dataset, tile_image};
use dst_texture::GreyImage;
use proptest::prelude::*;

#[test]
fn gaussian_noise_has_requested_spread() {
    let img = GreyImage::filled(128, 128, 128).unwrap();
    let noisy = add_gaussian_noise(&img, 10.0, 77).unwrap();
    let n = noisy.pixels().len() as f64;
    let mean = noisy.pixels().iter().map(|&p| f64::from(p)).sum::<f64>() / n;
    let var = noisy.pixels().iter().map(|&p| (f64::from(p) - mean).powi(2)).sum::<f64>() / (n - 1.0);
    let sd = var.sqrt();
    assert!((9.5..=10.5).contains(&sd), "sd {sd}");
    assert_eq!(noisy, add_gaussian_noise(&img, 10.0, 77).unwrap());
}

#[test]
fn salt_pepper_rate_within_three_standard_errors() {
    // Mid-grey input, so any 0 or 255 marks a corrupted pixel.
    let img = GreyImage::filled(128, 128, 100).unwrap();
    let p = 0.1;
    let out = add_salt_pepper(&img, p, 12).unwrap();
    let n = out.pixels().len() as f64;
    let corrupted = out.pixels().iter().filter(|&&v| v != 100).count() as f64;
    let se = (p * (1.0 - p) / n).sqrt();
    assert!((corrupted / n - p).abs() <= 3.0 * se, "fraction {}", corrupted / n);
    let salt = out.pixels().iter().filter(|&&v| v == 255).count() as f64;
    assert!((salt / corrupted - 0.5).abs() < 0.05);
}

#[test]
fn synthetic_dataset_contract() {
    let ds = synth_texture_dataset(4, 25, 128, 2024).unwrap();
    assert_eq!(ds.images.len(), 100);
    assert_eq!(ds.index.classes().len(), 4);
    let again = synth_texture_dataset(4, 25, 128, 2024).unwrap();
    assert!(ds.images.iter().zip(&again.images).all(|(a, b)| a.pixels() == b.pixels()));
    let other = synth_texture_dataset(4, 25, 128, 2025).unwrap();
    assert!(ds.images.iter().zip(&other.images).any(|(a, b)| a.pixels() != b.pixels()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn noise_preserves_shape(w in 1usize..40, h in 1usize..40, sigma in 0.0f64..80.0, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let img = GreyImage::new(w, h, random_pixels(&mut rng(seed), w * h)).unwrap();
        for out in [add_gaussian_noise(&img, sigma, seed).unwrap(), add_salt_pepper(&img, p, seed).unwrap()] {
            prop_assert_eq!((out.width(), out.height()), (w, h));
        }
        prop_assert_eq!(add_salt_pepper(&img, p, seed).unwrap(), add_salt_pepper(&img, p, seed).unwrap());
    }

    #[test]
    fn tiles_cover_cropped_region(w in 1usize..70, h in 1usize..70, tile in 1usize..20, seed in any::<u64>()) {
        let img = GreyImage::new(w, h, random_pixels(&mut rng(seed), w * h)).unwrap();
        let tiles = tile_image(&img, tile).unwrap();
        let cols = w / tile;
        let total: usize = tiles.iter().map(|t| t.pixels().len()).sum();
        prop_assert_eq!(total, cols * tile * (h / tile) * tile);
        for (i, t) in tiles.iter().enumerate() {
            let expect = img.crop((i % cols) * tile, (i / cols) * tile, tile, tile).unwrap();
            prop_assert_eq!(t, &expect);
        }
    }
}
