use crate::error::{Error, Result};
use crate::grey::GreyImage;

/// Non-overlapping `tile`x`tile` crops in row-major order; the right and
/// bottom remainders are dropped.
pub fn tile_image(image: &GreyImage, tile: usize) -> Result<Vec<GreyImage>> {
    if tile == 0 {
        return Err(Error::param("tile size must be >= 1"));
    }
    let (cols, rows) = (image.width() / tile, image.height() / tile);
    let mut tiles = Vec::with_capacity(cols * rows);
    for ty in 0..rows {
        for tx in 0..cols {
            tiles.push(image.crop(tx * tile, ty * tile, tile, tile)?);
        }
    }
    Ok(tiles)
}
