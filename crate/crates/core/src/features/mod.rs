//! Moment descriptors of Schroedinger-transformed images.

mod descriptor;
mod export;
mod histogram;
mod moments;

pub use descriptor::{build_descriptor, build_descriptor_with, Descriptor, DescriptorParams, T_COUNT};
pub use export::{read_descriptor_csv, write_descriptor_csv, DescriptorRecord};
pub use histogram::{histogram, Histogram, DEFAULT_BINS};
pub use moments::{central_moments, MomentVector};
