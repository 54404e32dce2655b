//! `dst-texture` command line.
//!
//! Any flag may also come from a JSON object passed with `--config FILE`;
//! keys are flag names without the leading dashes, and flags given on the
//! command line win over the file.

mod commands;
mod output;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};

pub use commands::{
    cmd_classify, cmd_features, cmd_grid, cmd_noise_sweep, cmd_synth, cmd_transform, noise_level_seed,
};

#[derive(Debug, Parser)]
#[command(name = "dst-texture", version, about = "Schroedinger-transform texture descriptors and PCA+LDA classification")]
#[command(args_override_self = true)]
pub struct Cli {
    /// JSON file supplying default flag values (command-line flags override it)
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Transform one image or 1D signal and write the magnitude field
    Transform(TransformArgs),
    /// Extract descriptors for every image of a `<root>/<class>/<image>` dataset
    Features(FeaturesArgs),
    /// Cross-validate PCA+LDA on a descriptor CSV
    Classify(ClassifyArgs),
    /// Success rates over a grid of kernel radii and moment counts
    Grid(GridArgs),
    /// Success rate as a function of injected noise level
    NoiseSweep(NoiseSweepArgs),
    /// Generate a synthetic texture dataset
    Synth(SynthArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Spatial,
    Frequency,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    /// Per-image min-max stretch to 0..255
    Minmax,
    /// Round and clamp raw values to 0..255
    Clamp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NoiseArg {
    Gaussian,
    SaltPepper,
}

#[derive(Debug, Clone, Args)]
pub struct DescriptorArgs {
    /// Histogram bins per transform (count)
    #[arg(long, default_value_t = crate::features::DEFAULT_BINS)]
    pub bins: usize,

    /// Spacing of the 100-point t sweep, t_i = i * step (dimensionless)
    #[arg(long, default_value_t = crate::features::DescriptorParams::DEFAULT_T_STEP)]
    pub t_step: f64,

    /// Worker threads for descriptor extraction (0 = all cores)
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Debug, Clone, Args)]
pub struct CvArgs {
    /// Cross-validation folds (count)
    #[arg(long, default_value_t = 10)]
    pub folds: usize,

    /// Seed for fold shuffling and noise
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Cumulative explained-variance fraction kept by PCA, in (0, 1]
    #[arg(long, default_value_t = crate::classify::DEFAULT_PCA_VARIANCE)]
    pub pca_variance: f64,

    /// Feed raw central moments to PCA instead of their signed m-th roots
    #[arg(long)]
    pub raw_moments: bool,
}

#[derive(Debug, Clone, Args)]
pub struct TransformArgs {
    /// Image (PNG/PGM) or 1D signal (.csv/.txt, one value per line or comma separated)
    #[arg(required_unless_present = "demo")]
    pub input: Option<PathBuf>,

    /// Use the built-in demo signal (sinusoid, noise, square wave) instead of INPUT
    #[arg(long)]
    pub demo: bool,

    /// Demo signal length (samples)
    #[arg(long, default_value_t = 1024)]
    pub demo_len: usize,

    /// Transform parameter t (dimensionless, >= 0)
    #[arg(long, default_value_t = 1e-5)]
    pub t: f64,

    /// Kernel support radius (pixels/samples), spatial mode
    #[arg(long, default_value_t = 6)]
    pub r: usize,

    /// Frequency multiplier constant k, frequency mode
    #[arg(long, default_value_t = crate::transform::DEFAULT_K)]
    pub k: f64,

    /// Spatial chirp convolution or frequency-domain multiplier
    #[arg(long, value_enum, default_value_t = Mode::Spatial)]
    pub mode: Mode,

    /// PGM intensity mapping [default: minmax for spatial, clamp for frequency]
    #[arg(long, value_enum)]
    pub scale: Option<Scale>,

    /// Seed for the demo signal's noise segment
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Output path: PGM for images, CSV (one value per line) for signals
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct FeaturesArgs {
    /// Dataset root laid out as <root>/<class>/<image>
    pub dataset: PathBuf,

    /// Kernel support radius (pixels)
    #[arg(long, default_value_t = 6)]
    pub r: usize,

    /// Central moments per t (count)
    #[arg(long, default_value_t = 5)]
    pub moments: usize,

    #[command(flatten)]
    pub descriptor: DescriptorArgs,

    /// Output CSV: path,label,v1..v(100*moments)
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct ClassifyArgs {
    /// Descriptor CSV written by `features`
    pub features: PathBuf,

    #[command(flatten)]
    pub cv: CvArgs,

    /// Report JSON; the confusion matrix also goes to <stem>.confusion.csv and .pgm
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    /// Dataset root laid out as <root>/<class>/<image>
    pub dataset: PathBuf,

    /// Kernel radii to sweep (pixels, comma separated)
    #[arg(long, value_delimiter = ',', default_value = "2,4,6,8,10,12,14,16,18,20")]
    pub r: Vec<usize>,

    /// Moment counts to sweep (comma separated)
    #[arg(long, value_delimiter = ',', default_value = "5,10,15,20")]
    pub moments: Vec<usize>,

    #[command(flatten)]
    pub descriptor: DescriptorArgs,

    #[command(flatten)]
    pub cv: CvArgs,

    /// Output CSV matrix: one row per radius, one column per moment count
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct NoiseSweepArgs {
    /// Dataset root laid out as <root>/<class>/<image>
    pub dataset: PathBuf,

    /// Noise model
    #[arg(long, value_enum, default_value_t = NoiseArg::SaltPepper)]
    pub noise: NoiseArg,

    /// Noise levels: sigma in grey levels (gaussian) or corruption probability
    /// (salt-pepper), comma separated [default: 0,5,10,20,40 or 0,0.01,0.05,0.1,0.2]
    #[arg(long, value_delimiter = ',')]
    pub levels: Vec<f64>,

    /// Kernel support radius (pixels)
    #[arg(long, default_value_t = 6)]
    pub r: usize,

    /// Central moments per t (count)
    #[arg(long, default_value_t = 5)]
    pub moments: usize,

    #[command(flatten)]
    pub descriptor: DescriptorArgs,

    #[command(flatten)]
    pub cv: CvArgs,

    /// Output CSV: level,success_rate,deviation
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct SynthArgs {
    /// Number of classes (>= 2)
    #[arg(long, default_value_t = 4)]
    pub classes: usize,

    /// Images per class (count)
    #[arg(long, default_value_t = 25)]
    pub per_class: usize,

    /// Image side length (pixels)
    #[arg(long, default_value_t = 128)]
    pub size: usize,

    /// Generator seed
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Output dataset root; an index.csv (path,label) is written alongside the images
    #[arg(long)]
    pub out: PathBuf,
}

/// Splices flags from a `--config` JSON file into the argument list right
/// after the subcommand name, skipping any flag the command line already sets.
pub fn expand_config(args: Vec<OsString>) -> Result<Vec<OsString>> {
    let mut config_path = None;
    let mut rest = Vec::with_capacity(args.len());
    let mut iter = args.into_iter();
    while let Some(arg) = iter.next() {
        let s = arg.to_string_lossy();
        if s == "--config" {
            config_path = iter.next().map(PathBuf::from);
            if config_path.is_none() {
                return Err(Error::param("--config needs a file argument"));
            }
        } else if let Some(p) = s.strip_prefix("--config=") {
            config_path = Some(PathBuf::from(p));
        } else {
            rest.push(arg);
        }
    }
    let Some(path) = config_path else {
        return Ok(rest);
    };
    let text = std::fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    let object = value
        .as_object()
        .ok_or_else(|| Error::input(format!("{}: config must be a JSON object", path.display())))?;

    let given = |flag: &str| {
        rest.iter().any(|a| {
            let a = a.to_string_lossy();
            a == flag || a.starts_with(&format!("{flag}="))
        })
    };
    let mut injected = Vec::new();
    for (key, v) in object {
        let flag = format!("--{}", key.replace('_', "-"));
        if given(&flag) {
            continue;
        }
        match v {
            serde_json::Value::Bool(true) => injected.push(OsString::from(flag)),
            serde_json::Value::Bool(false) | serde_json::Value::Null => {}
            serde_json::Value::Array(items) => {
                let joined: Vec<String> = items.iter().map(scalar_to_string).collect::<Result<_>>()?;
                injected.push(OsString::from(flag));
                injected.push(OsString::from(joined.join(",")));
            }
            other => {
                injected.push(OsString::from(flag));
                injected.push(OsString::from(scalar_to_string(other)?));
            }
        }
    }
    // Insert after the subcommand name: the first argument after the binary
    // name that is not an option.
    let pos = rest
        .iter()
        .skip(1)
        .position(|a| !a.to_string_lossy().starts_with('-'))
        .map_or(rest.len(), |p| p + 2);
    rest.splice(pos..pos, injected);
    Ok(rest)
}

fn scalar_to_string(v: &serde_json::Value) -> Result<String> {
    match v {
        serde_json::Value::String(s) => Ok(s.clone()),
        serde_json::Value::Number(n) => Ok(n.to_string()),
        serde_json::Value::Bool(b) => Ok(b.to_string()),
        other => Err(Error::input(format!("unsupported config value {other}"))),
    }
}

/// Parses `args` (including the binary name) and runs the chosen command.
pub fn run(args: Vec<OsString>) -> Result<()> {
    let args = expand_config(args)?;
    let cli = Cli::try_parse_from(args).unwrap_or_else(|e| e.exit());
    dispatch(&cli.command)
}

pub fn dispatch(command: &Command) -> Result<()> {
    match command {
        Command::Transform(a) => cmd_transform(a),
        Command::Features(a) => cmd_features(a),
        Command::Classify(a) => cmd_classify(a).map(|_| ()),
        Command::Grid(a) => cmd_grid(a),
        Command::NoiseSweep(a) => cmd_noise_sweep(a),
        Command::Synth(a) => cmd_synth(a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    fn os(v: &[&str]) -> Vec<OsString> {
        v.iter().map(OsString::from).collect()
    }

    #[test]
    fn cli_definition_is_valid() {
        Cli::command().debug_assert();
    }

    #[test]
    fn config_values_are_overridden_by_flags() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = dir.path().join("c.json");
        std::fs::write(&cfg, r#"{"folds": 5, "seed": 9, "raw_moments": true, "out": "from_cfg.json"}"#).unwrap();
        let args = expand_config(os(&[
            "dst-texture",
            "classify",
            "--config",
            cfg.to_str().unwrap(),
            "feats.csv",
            "--seed",
            "3",
        ]))
        .unwrap();
        let cli = Cli::try_parse_from(args).unwrap();
        let Command::Classify(a) = cli.command else { panic!() };
        assert_eq!(a.cv.folds, 5);
        assert_eq!(a.cv.seed, 3);
        assert!(a.cv.raw_moments);
        assert_eq!(a.out, PathBuf::from("from_cfg.json"));
        assert_eq!(a.features, PathBuf::from("feats.csv"));
    }

    #[test]
    fn config_lists() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = dir.path().join("c.json");
        std::fs::write(&cfg, r#"{"r": [2, 4], "moments": [5], "out": "g.csv"}"#).unwrap();
        let args = expand_config(os(&["dst-texture", "--config", cfg.to_str().unwrap(), "grid", "data", "--r", "8"]))
            .unwrap();
        let cli = Cli::try_parse_from(args).unwrap();
        let Command::Grid(a) = cli.command else { panic!() };
        assert_eq!(a.r, vec![8]);
        assert_eq!(a.moments, vec![5]);
    }

    #[test]
    fn defaults() {
        let cli = Cli::try_parse_from(["dst-texture", "grid", "data", "--out", "x.csv"]).unwrap();
        let Command::Grid(a) = cli.command else { panic!() };
        assert_eq!(a.r, (1..=10).map(|i| 2 * i).collect::<Vec<_>>());
        assert_eq!(a.moments, vec![5, 10, 15, 20]);
        assert_eq!(a.cv.folds, 10);
        assert_eq!(a.descriptor.bins, 256);
        assert!((a.cv.pca_variance - 0.95).abs() < 1e-15);
    }

    #[test]
    fn help_lists_every_flag() {
        let mut cmd = Cli::command();
        let mut all = String::new();
        for name in ["transform", "features", "classify", "grid", "noise-sweep", "synth"] {
            let sub = cmd.find_subcommand_mut(name).unwrap();
            all.push_str(&sub.render_long_help().to_string());
        }
        for flag in [
            "--t ", "--r ", "--moments", "--bins", "--folds", "--seed", "--jobs", "--mode", "--pca-variance",
            "--noise", "--levels", "--out",
        ] {
            assert!(all.contains(flag), "{flag} missing from help");
        }
    }
}
