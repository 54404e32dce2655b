use std::path::Path;

use image::{DynamicImage, ImageReader};

use crate::error::{Error, Result};
use crate::grey::GreyImage;

/// ITU-R BT.601 luma, rounded to the nearest integer.
pub fn luminance(r: u8, g: u8, b: u8) -> u8 {
    (0.299 * f64::from(r) + 0.587 * f64::from(g) + 0.114 * f64::from(b))
        .round()
        .clamp(0.0, 255.0) as u8
}

/// Converts a decoded image to grey. 8-bit grey passes through untouched;
/// anything else goes through 8-bit RGB and BT.601 luma.
pub fn decode_grey(img: DynamicImage) -> Result<GreyImage> {
    let (w, h) = (img.width() as usize, img.height() as usize);
    match img {
        DynamicImage::ImageLuma8(buf) => GreyImage::new(w, h, buf.into_raw()),
        other => {
            let rgb = other.to_rgb8();
            let pixels = rgb.pixels().map(|p| luminance(p[0], p[1], p[2])).collect();
            GreyImage::new(w, h, pixels)
        }
    }
}

/// Reads a PNG or PGM file as an 8-bit grey image.
pub fn load_grey_image(path: impl AsRef<Path>) -> Result<GreyImage> {
    let path = path.as_ref();
    let decoded = ImageReader::open(path)
        .map_err(|e| Error::io(path, e))?
        .with_guessed_format()
        .map_err(|e| Error::io(path, e))?
        .decode()
        .map_err(|source| Error::Decode {
            path: path.to_path_buf(),
            source,
        })?;
    decode_grey(decoded)
}

/// Binary (P5) PGM bytes with maxval 255.
pub fn encode_pgm(width: usize, height: usize, pixels: &[u8]) -> Vec<u8> {
    debug_assert_eq!(pixels.len(), width * height);
    let mut out = format!("P5\n{width} {height}\n255\n").into_bytes();
    out.extend_from_slice(pixels);
    out
}

pub fn write_pgm(path: impl AsRef<Path>, image: &GreyImage) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, encode_pgm(image.width(), image.height(), image.pixels()))
        .map_err(|e| Error::io(path, e))
}
