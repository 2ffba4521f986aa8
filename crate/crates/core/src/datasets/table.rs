//! CSV ingestion and output.
//!
//! Dialect: comma separated, `.` decimal point, at most one header row, UTF-8.
//! Both LF and CRLF line endings are accepted.

use std::fs::File;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use crate::clustering::Clustering;
use crate::error::{Error, Result};
use crate::points::PointSet;

/// Which column, if any, holds integer cluster labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelColumn {
    Index(usize),
    Last,
}

/// Parsed contents of a numeric CSV file.
#[derive(Debug, Clone, PartialEq)]
pub struct RawTable {
    pub rows: Vec<Vec<f64>>,
    pub labels: Option<Vec<i64>>,
    pub source: PathBuf,
}

fn open(path: &Path) -> Result<File> {
    File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_label(cell: &str) -> Option<i64> {
    cell.parse::<i64>().ok().or_else(|| {
        let v = cell.parse::<f64>().ok()?;
        (v.fract() == 0.0 && v.abs() < 9.0e15).then_some(v as i64)
    })
}

/// Reads a numeric table from any reader; `source` is used for diagnostics only.
pub fn read_table<R: Read>(
    reader: R,
    source: &Path,
    has_header: bool,
    label_column: Option<LabelColumn>,
) -> Result<RawTable> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(has_header)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);
    let parse_err = |line: u64, column: usize, message: String| Error::Parse {
        path: source.to_path_buf(),
        line,
        column,
        message,
    };

    let mut rows = Vec::new();
    let mut labels = label_column.map(|_| Vec::new());
    let mut width: Option<usize> = None;
    let mut record = csv::StringRecord::new();
    loop {
        let more = rdr.read_record(&mut record).map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            parse_err(line, 0, e.to_string())
        })?;
        if !more {
            break;
        }
        let line = record.position().map_or(0, |p| p.line());
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        match width {
            None => width = Some(record.len()),
            Some(w) if w != record.len() => {
                return Err(parse_err(
                    line,
                    record.len().min(w) + 1,
                    format!("ragged row: {} fields, expected {w}", record.len()),
                ))
            }
            Some(_) => {}
        }
        let label_idx = match label_column {
            None => None,
            Some(LabelColumn::Last) => Some(record.len() - 1),
            Some(LabelColumn::Index(i)) if i < record.len() => Some(i),
            Some(LabelColumn::Index(i)) => {
                return Err(parse_err(
                    line,
                    i + 1,
                    format!(
                        "label column {i} missing from a row of {} fields",
                        record.len()
                    ),
                ))
            }
        };
        let mut features = Vec::with_capacity(record.len());
        for (col, cell) in record.iter().enumerate() {
            if Some(col) == label_idx {
                let label = parse_label(cell).ok_or_else(|| {
                    parse_err(line, col + 1, format!("invalid integer label {cell:?}"))
                })?;
                labels
                    .as_mut()
                    .expect("label column configured")
                    .push(label);
                continue;
            }
            let v: f64 = cell
                .parse()
                .map_err(|_| parse_err(line, col + 1, format!("non-numeric cell {cell:?}")))?;
            if !v.is_finite() {
                return Err(parse_err(
                    line,
                    col + 1,
                    format!("non-finite value {cell:?}"),
                ));
            }
            features.push(v);
        }
        if features.is_empty() {
            return Err(parse_err(line, 1, "row has no feature columns".into()));
        }
        rows.push(features);
    }
    if rows.is_empty() {
        return Err(Error::Format {
            path: source.to_path_buf(),
            message: "file contains no data rows".into(),
        });
    }
    Ok(RawTable {
        rows,
        labels,
        source: source.to_path_buf(),
    })
}

impl RawTable {
    pub fn into_parts(self) -> Result<(PointSet, Option<Clustering>)> {
        let ps = PointSet::from_rows(&self.rows)?;
        let c = self.labels.map(Clustering::from_labels).transpose()?;
        Ok((ps, c))
    }
}

/// Loads features, and labels when `label_column` is given, from a CSV file.
pub fn load_csv(
    path: impl AsRef<Path>,
    has_header: bool,
    label_column: Option<LabelColumn>,
) -> Result<(PointSet, Option<Clustering>)> {
    let path = path.as_ref();
    read_table(open(path)?, path, has_header, label_column)?.into_parts()
}

/// Loads a single-column label file. A non-integer first line is treated as a header.
pub fn load_labels(path: impl AsRef<Path>) -> Result<Clustering> {
    let path = path.as_ref();
    let mut text = String::new();
    open(path)?
        .read_to_string(&mut text)
        .map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
    let mut labels = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let cell = line.trim();
        if cell.is_empty() || cell.starts_with('#') {
            continue;
        }
        match parse_label(cell) {
            Some(l) => labels.push(l),
            None if i == 0 => continue,
            None => {
                return Err(Error::Parse {
                    path: path.to_path_buf(),
                    line: i as u64 + 1,
                    column: 1,
                    message: format!("invalid integer label {cell:?}"),
                })
            }
        }
    }
    if labels.is_empty() {
        return Err(Error::Format {
            path: path.to_path_buf(),
            message: "label file is empty".into(),
        });
    }
    Clustering::from_labels(labels)
}

/// Writes points (and labels as a trailing `label` column) with a header row.
///
/// Values use the shortest representation that parses back to the same `f64`.
pub fn write_csv<W: Write>(out: W, ps: &PointSet, labels: Option<&Clustering>) -> Result<()> {
    if let Some(c) = labels {
        if c.len() != ps.len() {
            return Err(Error::LengthMismatch {
                what: "labels",
                expected: ps.len(),
                found: c.len(),
            });
        }
    }
    let io = |source| Error::Io {
        path: PathBuf::from("<csv output>"),
        source,
    };
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<String> = (0..ps.dim()).map(|j| format!("x{j}")).collect();
    if labels.is_some() {
        header.push("label".into());
    }
    w.write_record(&header).map_err(|e| io(e.into()))?;
    for (i, row) in ps.rows().enumerate() {
        let mut rec: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        if let Some(c) = labels {
            rec.push(c.label(i).to_string());
        }
        w.write_record(&rec).map_err(|e| io(e.into()))?;
    }
    w.flush().map_err(io)
}

pub fn save_csv(path: impl AsRef<Path>, ps: &PointSet, labels: Option<&Clustering>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    write_csv(std::io::BufWriter::new(file), ps, labels)
}
