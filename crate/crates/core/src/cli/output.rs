use std::io::Write;
use std::path::{Path, PathBuf};

use tempfile::NamedTempFile;

use crate::error::{Error, Result};

/// Output files staged in temporaries next to their destinations and
/// renamed into place together by [`Outputs::commit`]. Dropping an
/// uncommitted set deletes the temporaries.
#[derive(Default)]
pub(crate) struct Outputs {
    staged: Vec<(NamedTempFile, PathBuf)>,
}

impl Outputs {
    pub fn stage(&mut self, path: &Path, bytes: &[u8]) -> Result<()> {
        let dir = match path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p,
            _ => Path::new("."),
        };
        let mut tmp = NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
        tmp.write_all(bytes).map_err(|e| Error::io(path, e))?;
        tmp.flush().map_err(|e| Error::io(path, e))?;
        self.staged.push((tmp, path.to_path_buf()));
        Ok(())
    }

    /// Moves every staged file into place; on failure, files already moved
    /// by this call are removed again.
    pub fn commit(self) -> Result<()> {
        let mut done: Vec<PathBuf> = Vec::new();
        for (tmp, dest) in self.staged {
            if let Err(e) = tmp.persist(&dest) {
                for p in &done {
                    let _ = std::fs::remove_file(p);
                }
                return Err(Error::io(dest, e.error));
            }
            done.push(dest);
        }
        Ok(())
    }
}

pub(crate) fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let mut out = Outputs::default();
    out.stage(path, bytes)?;
    out.commit()
}

/// `report.json` -> `report.<suffix>`.
pub(crate) fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    path.with_file_name(format!("{stem}.{suffix}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uncommitted_outputs_leave_nothing() {
        let dir = tempfile::tempdir().unwrap();
        let target = dir.path().join("a.txt");
        {
            let mut out = Outputs::default();
            out.stage(&target, b"x").unwrap();
        }
        assert!(!target.exists());
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
        write_atomic(&target, b"y").unwrap();
        assert_eq!(std::fs::read(&target).unwrap(), b"y");
    }

    #[test]
    fn failed_commit_rolls_back() {
        let dir = tempfile::tempdir().unwrap();
        let good = dir.path().join("good.txt");
        let blocked = dir.path().join("sub");
        std::fs::create_dir(&blocked).unwrap();
        std::fs::write(blocked.join("f"), b"").unwrap();
        let mut out = Outputs::default();
        out.stage(&good, b"1").unwrap();
        // Persisting a file over a non-empty directory fails.
        out.stage(&blocked, b"2").unwrap();
        assert!(out.commit().is_err());
        assert!(!good.exists());
    }

    #[test]
    fn sibling_names() {
        assert_eq!(sibling(Path::new("out/r.json"), "confusion.csv"), PathBuf::from("out/r.confusion.csv"));
    }
}
