//! Texture descriptors from the discrete Schroedinger transform.
//!
//! The pipeline runs image → [`transform::transform_2d`] over a sweep of `t`
//! → histogram → central moments ([`features`]), then classifies the
//! resulting descriptors with PCA + LDA under stratified k-fold
//! cross-validation ([`classify`]). [`data`] covers image I/O, tiling,
//! noise injection and a synthetic texture generator.

pub mod classify;
pub mod cli;
pub mod data;
pub mod error;
pub mod features;
pub mod grey;
pub mod pipeline;
pub mod transform;

pub use error::{Error, Result};
pub use grey::GreyImage;
