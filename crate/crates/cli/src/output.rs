use std::fs;
use std::io::Write;
use std::path::Path;

use disco_core::format_sig6;

use crate::error::{CliError, Result};

pub fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes `text` to `path`, or to stdout when no path is given.
pub fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => write_file(p, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .map_err(|source| CliError::Write {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

pub fn cell(v: Option<f64>) -> String {
    v.map(format_sig6).unwrap_or_default()
}

/// Full-precision value that always shows a decimal point (`-1.0`, `0.5`).
pub fn full(v: f64) -> String {
    format!("{v:?}")
}
