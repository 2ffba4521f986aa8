use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numeric::exact_sum;
use crate::points::PointSet;

/// How features are z-standardized before scoring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Standardization {
    /// Each column gets mean 0 and (population) standard deviation 1.
    #[default]
    PerFeature,
    /// One mean and standard deviation over all entries, as for image data.
    Global,
    None,
}

impl FromStr for Standardization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "per-feature" | "per_feature" => Ok(Self::PerFeature),
            "global" => Ok(Self::Global),
            "none" => Ok(Self::None),
            other => Err(Error::InvalidParameter(format!(
                "unknown standardization {other:?} (expected per-feature, global or none)"
            ))),
        }
    }
}

impl fmt::Display for Standardization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::PerFeature => "per-feature",
            Self::Global => "global",
            Self::None => "none",
        })
    }
}

/// A column (or, in global mode, the whole matrix) with zero spread; it was centered only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroVarianceWarning {
    pub column: Option<usize>,
}

impl fmt::Display for ZeroVarianceWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.column {
            Some(c) => write!(f, "column {c} has zero variance; centered only"),
            None => f.write_str("all entries are equal; centered only"),
        }
    }
}

fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = exact_sum(values.iter().copied()) / n;
    let var = exact_sum(values.iter().map(|v| (v - mean) * (v - mean))) / n;
    (mean, var.sqrt())
}

/// Z-standardizes a point set. Zero-variance columns are centered and reported.
pub fn z_standardize(ps: &PointSet, mode: Standardization) -> (PointSet, Vec<ZeroVarianceWarning>) {
    let m = ps.dim();
    let mut warnings = Vec::new();
    let (shift, scale): (Vec<f64>, Vec<f64>) = match mode {
        Standardization::None => return (ps.clone(), warnings),
        Standardization::PerFeature => (0..m)
            .map(|j| {
                let column: Vec<f64> = ps.rows().map(|r| r[j]).collect();
                let (mean, std) = mean_std(&column);
                if std == 0.0 {
                    warnings.push(ZeroVarianceWarning { column: Some(j) });
                    (mean, 1.0)
                } else {
                    (mean, std)
                }
            })
            .unzip(),
        Standardization::Global => {
            let (mean, std) = mean_std(ps.as_slice());
            let std = if std == 0.0 {
                warnings.push(ZeroVarianceWarning { column: None });
                1.0
            } else {
                std
            };
            (vec![mean; m], vec![std; m])
        }
    };
    for w in &warnings {
        log::warn!("{w}");
    }
    let out = ps
        .map_rows(m, |row, out| {
            out.extend(
                row.iter()
                    .enumerate()
                    .map(|(j, v)| (v - shift[j]) / scale[j]),
            );
        })
        .expect("standardized coordinates stay finite");
    (out, warnings)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_one_two_three() {
        let ps = PointSet::from_rows(&[[1.0], [2.0], [3.0]]).unwrap();
        let (z, w) = z_standardize(&ps, Standardization::PerFeature);
        assert!(w.is_empty());
        // Population sigma = sqrt(2/3); (1 - 2) / sqrt(2/3) = -sqrt(1.5).
        let expected = 1.5f64.sqrt();
        assert!((z.as_slice()[0] + expected).abs() < 1e-15);
        assert_eq!(z.as_slice()[1], 0.0);
        assert!((z.as_slice()[2] - expected).abs() < 1e-15);
        assert!((expected - 1.224_744_871_391_589).abs() < 1e-15);
    }

    #[test]
    fn constant_column_is_centered_with_warning() {
        let ps = PointSet::from_rows(&[[5.0, 1.0], [5.0, 2.0]]).unwrap();
        let (z, w) = z_standardize(&ps, Standardization::PerFeature);
        assert_eq!(w, vec![ZeroVarianceWarning { column: Some(0) }]);
        assert_eq!(z.as_slice()[0], 0.0);
        assert_eq!(z.as_slice()[2], 0.0);
    }

    #[test]
    fn global_on_equal_values() {
        let ps = PointSet::from_rows(&[[3.0, 3.0], [3.0, 3.0]]).unwrap();
        let (z, w) = z_standardize(&ps, Standardization::Global);
        assert_eq!(w.len(), 1);
        assert!(z.as_slice().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn parses_modes() {
        assert_eq!(
            "per-feature".parse::<Standardization>().unwrap(),
            Standardization::PerFeature
        );
        assert_eq!(
            "global".parse::<Standardization>().unwrap(),
            Standardization::Global
        );
        assert_eq!(
            "none".parse::<Standardization>().unwrap(),
            Standardization::None
        );
        assert!("zscore".parse::<Standardization>().is_err());
    }
}
