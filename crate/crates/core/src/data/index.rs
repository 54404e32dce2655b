use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

const IMAGE_EXTENSIONS: &[&str] = &["png", "pgm", "pnm"];

/// Labelled image list; for directory datasets the label is the name of the
/// class subdirectory (`<root>/<class>/<image>`).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DatasetIndex {
    entries: Vec<(PathBuf, String)>,
    classes: Vec<String>,
}

impl DatasetIndex {
    pub fn from_entries(entries: Vec<(PathBuf, String)>) -> Self {
        let mut classes: Vec<String> = entries.iter().map(|(_, l)| l.clone()).collect();
        classes.sort();
        classes.dedup();
        Self { entries, classes }
    }

    /// Scans `root` for class directories holding PNG/PGM files; entries
    /// are sorted by class, then file name. Files directly under `root` are
    /// ignored.
    pub fn scan(root: impl AsRef<Path>) -> Result<Self> {
        let root = root.as_ref();
        let mut entries = Vec::new();
        for class_dir in sorted_dir(root)? {
            if !class_dir.is_dir() {
                continue;
            }
            let label = class_dir
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_default();
            for file in sorted_dir(&class_dir)? {
                let is_image = file.is_file()
                    && file
                        .extension()
                        .and_then(|e| e.to_str())
                        .is_some_and(|e| IMAGE_EXTENSIONS.contains(&e.to_ascii_lowercase().as_str()));
                if is_image {
                    entries.push((file, label.clone()));
                }
            }
        }
        Ok(Self::from_entries(entries))
    }

    pub fn entries(&self) -> &[(PathBuf, String)] {
        &self.entries
    }

    pub fn classes(&self) -> &[String] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `path,label` rows without a header.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut out = csv::WriterBuilder::new().has_headers(false).from_writer(writer);
        for (path, label) in &self.entries {
            out.write_record([path.to_string_lossy().as_ref(), label.as_str()])
                .map_err(|e| Error::io("<index csv>", std::io::Error::other(e)))?;
        }
        out.flush().map_err(|e| Error::io("<index csv>", e))
    }
}

fn sorted_dir(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut paths = std::fs::read_dir(dir)
        .map_err(|e| Error::io(dir, e))?
        .map(|entry| entry.map(|e| e.path()).map_err(|e| Error::io(dir, e)))
        .collect::<Result<Vec<_>>>()?;
    paths.sort();
    Ok(paths)
}
