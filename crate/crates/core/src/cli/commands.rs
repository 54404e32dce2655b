use std::path::Path;

use super::output::{sibling, write_atomic, Outputs};
use super::{
    ClassifyArgs, CvArgs, DescriptorArgs, FeaturesArgs, GridArgs, Mode, NoiseArg, NoiseSweepArgs, Scale,
    SynthArgs, TransformArgs,
};
use crate::classify::{format_success, ClassificationReport, CvParams, FeatureScaling};
use crate::data::{encode_pgm, load_grey_image, synth_texture_dataset, DatasetIndex, NoiseKind, NoiseSpec};
use crate::error::{Error, Result};
use crate::features::{read_descriptor_csv, write_descriptor_csv, DescriptorParams, DescriptorRecord};
use crate::pipeline::{classify_records, describe_dataset, with_jobs};
use crate::transform::{demo_signal, transform_1d, transform_2d, transform_frequency, Signal1D, TransformField};

impl CvArgs {
    fn params(&self) -> CvParams {
        CvParams {
            folds: self.folds,
            seed: self.seed,
            pca_variance: self.pca_variance,
            scaling: if self.raw_moments {
                FeatureScaling::Raw
            } else {
                FeatureScaling::SignedRoot
            },
            ..CvParams::default()
        }
    }
}

impl DescriptorArgs {
    fn params(&self, r: usize, moments: usize) -> DescriptorParams {
        DescriptorParams {
            r,
            moments,
            bins: self.bins,
            t_step: self.t_step,
        }
    }
}

fn is_signal_path(path: &Path) -> bool {
    path.extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| e.eq_ignore_ascii_case("csv") || e.eq_ignore_ascii_case("txt"))
}

fn read_signal(path: &Path) -> Result<Signal1D> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut samples = Vec::new();
    for (i, line) in text.lines().enumerate() {
        for field in line.split(|c: char| c == ',' || c.is_whitespace()).filter(|f| !f.is_empty()) {
            let v = field.parse::<f64>().map_err(|_| Error::Parse {
                path: path.to_path_buf(),
                line: i + 1,
                message: format!("bad sample {field:?}"),
            })?;
            samples.push(v);
        }
    }
    Signal1D::new(samples)
}

fn signal_csv(values: &[f64]) -> String {
    values.iter().map(|v| format!("{v:.16e}\n")).collect()
}

fn field_to_pgm(field: &TransformField, scale: Scale) -> Vec<u8> {
    let values = field.values();
    let pixels: Vec<u8> = match scale {
        Scale::Clamp => values.iter().map(|v| v.round().clamp(0.0, 255.0) as u8).collect(),
        Scale::Minmax => {
            let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            if hi > lo {
                values.iter().map(|v| ((v - lo) / (hi - lo) * 255.0).round() as u8).collect()
            } else {
                vec![0; values.len()]
            }
        }
    };
    encode_pgm(field.width(), field.height(), &pixels)
}

pub fn cmd_transform(args: &TransformArgs) -> Result<()> {
    let signal = match (&args.input, args.demo) {
        (_, true) => Some(demo_signal(args.demo_len, args.seed)?),
        (Some(p), false) if is_signal_path(p) => Some(read_signal(p)?),
        (Some(_), false) => None,
        (None, false) => return Err(Error::param("an input path or --demo is required")),
    };
    if let Some(signal) = signal {
        if args.mode == Mode::Frequency {
            return Err(Error::param("frequency mode applies to images only"));
        }
        let field = transform_1d(&signal, args.t, args.r)?;
        return write_atomic(&args.out, signal_csv(field.values()).as_bytes());
    }
    let path = args.input.as_deref().expect("checked above");
    let image = load_grey_image(path)?;
    let (field, default_scale) = match args.mode {
        Mode::Spatial => (transform_2d(&image, args.t, args.r)?, Scale::Minmax),
        Mode::Frequency => (transform_frequency(&image, args.t, args.k)?, Scale::Clamp),
    };
    write_atomic(&args.out, &field_to_pgm(&field, args.scale.unwrap_or(default_scale)))
}

fn scan_nonempty(root: &Path) -> Result<DatasetIndex> {
    let index = DatasetIndex::scan(root)?;
    if index.is_empty() {
        return Err(Error::input(format!("no images found under {}", root.display())));
    }
    Ok(index)
}

fn records_csv(records: &[DescriptorRecord]) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    write_descriptor_csv(&mut buf, records)?;
    Ok(buf)
}

pub fn cmd_features(args: &FeaturesArgs) -> Result<()> {
    let index = scan_nonempty(&args.dataset)?;
    let params = args.descriptor.params(args.r, args.moments);
    let records = with_jobs(args.descriptor.jobs, || describe_dataset(&index, &params, None))??;
    write_atomic(&args.out, &records_csv(&records)?)?;
    eprintln!("wrote {} descriptors of length {} to {}", records.len(), params.len(), args.out.display());
    Ok(())
}

fn stage_report(out: &mut Outputs, path: &Path, report: &ClassificationReport) -> Result<()> {
    let mut json = Vec::new();
    report.write_json(&mut json)?;
    json.push(b'\n');
    out.stage(path, &json)?;
    out.stage(&sibling(path, "confusion.csv"), report.confusion_csv().as_bytes())?;
    out.stage(&sibling(path, "confusion.pgm"), &report.confusion_pgm(16))
}

pub fn cmd_classify(args: &ClassifyArgs) -> Result<ClassificationReport> {
    let file = std::fs::File::open(&args.features).map_err(|e| Error::io(&args.features, e))?;
    let records = read_descriptor_csv(std::io::BufReader::new(file), &args.features)?;
    let report = classify_records(&records, &args.cv.params())?;
    let mut out = Outputs::default();
    stage_report(&mut out, &args.out, &report)?;
    out.commit()?;
    println!("success rate {}", report.summary());
    Ok(report)
}

/// Keeps the first `moments` entries of every t block of `max_moments`.
fn truncate_records(records: &[DescriptorRecord], max_moments: usize, moments: usize) -> Vec<DescriptorRecord> {
    records
        .iter()
        .map(|r| DescriptorRecord {
            path: r.path.clone(),
            label: r.label.clone(),
            values: r
                .values
                .chunks_exact(max_moments)
                .flat_map(|b| b[..moments].iter().copied())
                .collect(),
        })
        .collect()
}

pub fn cmd_grid(args: &GridArgs) -> Result<()> {
    if args.r.is_empty() || args.moments.is_empty() {
        return Err(Error::param("grid needs at least one radius and one moment count"));
    }
    let mut radii = args.r.clone();
    radii.sort_unstable();
    radii.dedup();
    let max_moments = *args.moments.iter().max().expect("non-empty");
    let index = scan_nonempty(&args.dataset)?;
    let cv = args.cv.params();

    let mut csv = String::from("r");
    for m in &args.moments {
        csv.push_str(&format!(",M={m}"));
    }
    csv.push('\n');
    for &r in &radii {
        let params = args.descriptor.params(r, max_moments);
        let full = with_jobs(args.descriptor.jobs, || describe_dataset(&index, &params, None))??;
        csv.push_str(&r.to_string());
        for &m in &args.moments {
            let records = truncate_records(&full, max_moments, m);
            let report = with_jobs(args.descriptor.jobs, || classify_records(&records, &cv))??;
            eprintln!("r={r} M={m}: {}", report.summary());
            csv.push_str(&format!(",{}", report.success_rate));
        }
        csv.push('\n');
    }
    write_atomic(&args.out, csv.as_bytes())
}

/// Noise seed for the `level_index`-th level of a sweep: `seed XOR index`.
pub fn noise_level_seed(seed: u64, level_index: usize) -> u64 {
    seed ^ level_index as u64
}

pub fn cmd_noise_sweep(args: &NoiseSweepArgs) -> Result<()> {
    let kind = match args.noise {
        NoiseArg::Gaussian => NoiseKind::Gaussian,
        NoiseArg::SaltPepper => NoiseKind::SaltPepper,
    };
    let levels = if args.levels.is_empty() {
        match kind {
            NoiseKind::Gaussian => vec![0.0, 5.0, 10.0, 20.0, 40.0],
            NoiseKind::SaltPepper => vec![0.0, 0.01, 0.05, 0.10, 0.20],
        }
    } else {
        args.levels.clone()
    };
    let index = scan_nonempty(&args.dataset)?;
    let params = args.descriptor.params(args.r, args.moments);
    let cv = args.cv.params();

    let mut csv = String::from("level,success_rate,deviation\n");
    for (i, &level) in levels.iter().enumerate() {
        let spec = NoiseSpec {
            kind,
            level,
            seed: noise_level_seed(args.cv.seed, i),
        };
        let records = with_jobs(args.descriptor.jobs, || describe_dataset(&index, &params, Some(&spec)))??;
        let report = with_jobs(args.descriptor.jobs, || classify_records(&records, &cv))??;
        eprintln!("level {level}: {}", format_success(report.success_rate, report.deviation));
        csv.push_str(&format!("{level},{},{}\n", report.success_rate, report.deviation));
    }
    write_atomic(&args.out, csv.as_bytes())
}

pub fn cmd_synth(args: &SynthArgs) -> Result<()> {
    let dataset = synth_texture_dataset(args.classes, args.per_class, args.size, args.seed)?;
    std::fs::create_dir_all(&args.out).map_err(|e| Error::io(&args.out, e))?;
    let index = dataset.write_to(&args.out)?;
    let mut buf = Vec::new();
    index.write_csv(&mut buf)?;
    write_atomic(&args.out.join("index.csv"), &buf)?;
    eprintln!("wrote {} images in {} classes to {}", index.len(), index.classes().len(), args.out.display());
    Ok(())
}
