//! Image I/O, dataset indexing, tiling, noise injection and synthetic textures.

mod index;
mod io;
mod noise;
mod synth;
mod tile;

pub use index::DatasetIndex;
pub use io::{decode_grey, encode_pgm, load_grey_image, luminance, write_pgm};
pub use noise::{add_gaussian_noise, add_salt_pepper, NoiseKind, NoiseSpec};
pub use synth::{synth_texture_dataset, SynthDataset, TextureFamily};
pub use tile::tile_image;
