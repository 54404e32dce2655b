//! Synthetic 4-class benchmark: descriptors + 10-fold PCA/LDA.
//!
//! `cargo run --release --example synth_bench -- [seed] [raw|root]`

use dst_texture::classify::{CvParams, FeatureScaling};
use dst_texture::data::synth_texture_dataset;
use dst_texture::features::{DescriptorParams, DescriptorRecord};
use dst_texture::pipeline::{classify_records, describe_images};

fn main() -> dst_texture::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2024);
    let scaling = match args.next().as_deref() {
        Some("raw") => FeatureScaling::Raw,
        _ => FeatureScaling::SignedRoot,
    };
    let ds = synth_texture_dataset(4, 25, 128, seed)?;
    let start = std::time::Instant::now();
    let rows = describe_images(&ds.images, &DescriptorParams::new(6, 5))?;
    eprintln!("descriptors: {:?}", start.elapsed());
    let records: Vec<DescriptorRecord> = ds
        .index
        .entries()
        .iter()
        .zip(rows)
        .map(|((path, label), values)| DescriptorRecord {
            path: path.to_string_lossy().into_owned(),
            label: label.clone(),
            values,
        })
        .collect();
    let report = classify_records(&records, &CvParams { seed, scaling, ..CvParams::default() })?;
    println!("seed {seed} {scaling:?}: {} confusion {:?}", report.summary(), report.confusion);
    Ok(())
}
