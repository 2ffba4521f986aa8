//! Support code for the acceptance suite: locating benchmark datasets and
//! reading them from ARFF or labeled CSV files.
//!
//! Datasets are looked up as `<name>.arff` or `<name>.csv` in
//! `$DISCO_BENCHMARK_DIR` first and then in this crate's `tests/data`.

use std::path::{Path, PathBuf};

use disco_core::{Clustering, Error, PointSet, Result};

/// Environment variable naming an extra directory of benchmark files.
pub const BENCHMARK_DIR_VAR: &str = "DISCO_BENCHMARK_DIR";

pub fn search_dirs() -> Vec<PathBuf> {
    let mut dirs = Vec::new();
    if let Some(d) = std::env::var_os(BENCHMARK_DIR_VAR) {
        dirs.push(PathBuf::from(d));
    }
    dirs.push(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data"));
    dirs
}

pub fn find_dataset(name: &str) -> Option<PathBuf> {
    search_dirs()
        .into_iter()
        .flat_map(|d| {
            [
                d.join(format!("{name}.arff")),
                d.join(format!("{name}.csv")),
            ]
        })
        .find(|p| p.is_file())
}

/// Reads numeric features with the class in the last column.
///
/// ARFF files are read from their `@data` section on; CSV files may start with
/// a header row. Class values are numbered in order of first appearance, and
/// `noise` or `-1` marks noise.
pub fn read_labeled(path: &Path) -> Result<(PointSet, Clustering)> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_labeled(
        &text,
        path.extension()
            .is_some_and(|e| e.eq_ignore_ascii_case("arff")),
        path,
    )
}

fn parse_labeled(text: &str, arff: bool, path: &Path) -> Result<(PointSet, Clustering)> {
    let mut in_data = !arff;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut classes: Vec<String> = Vec::new();
    let mut labels = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('%') || line.starts_with('#') {
            continue;
        }
        if !in_data {
            in_data = line.to_ascii_lowercase().starts_with("@data");
            continue;
        }
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        let Some((class, features)) = cells.split_last().filter(|(_, f)| !f.is_empty()) else {
            return Err(parse_error(
                path,
                line_no,
                0,
                "expected features and a class",
            ));
        };
        let mut values = Vec::with_capacity(features.len());
        for (column, cell) in features.iter().enumerate() {
            match cell.parse::<f64>() {
                Ok(v) => values.push(v),
                // A CSV header row.
                Err(_) if !arff && rows.is_empty() && labels.is_empty() => break,
                Err(_) => {
                    return Err(parse_error(
                        path,
                        line_no,
                        column,
                        &format!("not a number: {cell:?}"),
                    ))
                }
            }
        }
        if values.len() < features.len() {
            continue;
        }
        let class = class.trim_matches(|c| c == '\'' || c == '"');
        let label = if class.eq_ignore_ascii_case("noise") || class == "-1" {
            -1
        } else {
            match classes.iter().position(|c| c == class) {
                Some(i) => i as i64,
                None => {
                    classes.push(class.to_string());
                    classes.len() as i64 - 1
                }
            }
        };
        rows.push(values);
        labels.push(label);
    }
    Ok((
        PointSet::from_rows(&rows)?,
        Clustering::from_labels(labels)?,
    ))
}

fn parse_error(path: &Path, line: usize, column: usize, message: &str) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        line: line as u64 + 1,
        column,
        message: message.to_string(),
    }
}

/// Assigns every noise point to the cluster of its nearest clustered point
/// (lowest index on ties).
pub fn merge_noise(ps: &PointSet, c: &Clustering) -> Clustering {
    let clustered: Vec<usize> = (0..ps.len()).filter(|&i| !c.is_noise(i)).collect();
    if clustered.is_empty() {
        return c.clone();
    }
    let labels = (0..ps.len())
        .map(|i| {
            if !c.is_noise(i) {
                return c.label(i);
            }
            let nearest = clustered
                .iter()
                .copied()
                .min_by(|&a, &b| {
                    ps.distance(i, a)
                        .total_cmp(&ps.distance(i, b))
                        .then(a.cmp(&b))
                })
                .expect("at least one clustered point");
            c.label(nearest)
        })
        .collect();
    Clustering::from_labels(labels).expect("labels copied from a valid clustering")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arff_with_named_classes_and_noise() {
        let text = "% comment\n@relation toy\n@attribute x numeric\n@attribute y numeric\n\
                    @attribute class {a,b,noise}\n@data\n0,0,b\n1,0,a\n2,0,'b'\n5,5,noise\n";
        let (ps, c) = parse_labeled(text, true, Path::new("toy.arff")).unwrap();
        assert_eq!(ps.len(), 4);
        assert_eq!(ps.dim(), 2);
        assert_eq!(c.labels(), &[0, 1, 0, -1]);
    }

    #[test]
    fn csv_with_header() {
        let (ps, c) =
            parse_labeled("x,y,z,label\n1,2,3,0\n4,5,6,1\n", false, Path::new("t.csv")).unwrap();
        assert_eq!(ps.point(1), &[4.0, 5.0, 6.0]);
        assert_eq!(c.labels(), &[0, 1]);
    }

    #[test]
    fn bad_number_is_reported_with_position() {
        let err = parse_labeled("@data\n1,2,a\n1,x,b\n", true, Path::new("t.arff")).unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 3,
                    column: 1,
                    ..
                }
            ),
            "{err}"
        );
    }

    #[test]
    fn merge_noise_uses_nearest_clustered_point() {
        let ps = PointSet::from_rows(&[[0.0], [1.0], [10.0], [11.0], [4.0], [8.0]]).unwrap();
        let c = Clustering::from_labels(vec![0, 0, 1, 1, -1, -1]).unwrap();
        assert_eq!(merge_noise(&ps, &c).labels(), &[0, 0, 1, 1, 0, 1]);
        let all = Clustering::all_noise(6);
        assert_eq!(merge_noise(&ps, &all), all);
    }
}
