//! Descriptor table CSV: `path,label,v1,...,vN`, no header, floats with 17
//! significant digits.

use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct DescriptorRecord {
    pub path: String,
    pub label: String,
    pub values: Vec<f64>,
}

pub fn write_descriptor_csv<W: Write>(writer: W, records: &[DescriptorRecord]) -> Result<()> {
    let mut out = csv::WriterBuilder::new().has_headers(false).from_writer(writer);
    let mut row: Vec<String> = Vec::new();
    for rec in records {
        row.clear();
        row.push(rec.path.clone());
        row.push(rec.label.clone());
        row.extend(rec.values.iter().map(|v| format!("{v:.16e}")));
        out.write_record(&row).map_err(csv_to_io)?;
    }
    out.flush().map_err(|e| Error::io("<descriptor csv>", e))
}

/// Reads a descriptor table. `source` names the input in error messages.
pub fn read_descriptor_csv<R: Read>(reader: R, source: &Path) -> Result<Vec<DescriptorRecord>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(reader);
    let parse_err = |line: usize, message: String| Error::Parse {
        path: source.to_path_buf(),
        line,
        message,
    };
    let mut records = Vec::new();
    let mut width = None;
    for (i, row) in rdr.records().enumerate() {
        let line = i + 1;
        let row = row.map_err(|e| parse_err(line, e.to_string()))?;
        if row.len() < 3 {
            return Err(parse_err(line, format!("expected path,label,values..., got {} fields", row.len())));
        }
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(parse_err(line, format!("expected {w} fields, got {}", row.len())));
            }
            _ => {}
        }
        let values = row
            .iter()
            .skip(2)
            .map(|f| {
                f.trim()
                    .parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| parse_err(line, format!("bad value {f:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        records.push(DescriptorRecord {
            path: row[0].to_string(),
            label: row[1].to_string(),
            values,
        });
    }
    Ok(records)
}

fn csv_to_io(e: csv::Error) -> Error {
    Error::io("<descriptor csv>", std::io::Error::other(e))
}
