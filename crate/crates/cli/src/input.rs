use disco_core::datasets::{
    generate, load_csv, load_labels, z_standardize, GeneratorSpec, Standardization,
};
use disco_core::{Clustering, Error, NeighborConvention, PointSet, ScoreParams};

use crate::args::DataArgs;
use crate::error::{CliError, Result};

/// A loaded, standardized dataset and whatever labels came with it.
#[derive(Debug, Clone)]
pub struct Input {
    pub points: PointSet,
    pub labels: Option<Clustering>,
    pub standardization: Standardization,
}

pub fn check_labels(points: &PointSet, labels: &Clustering) -> Result<()> {
    if labels.len() != points.len() {
        return Err(Error::LengthMismatch {
            what: "labels",
            expected: points.len(),
            found: labels.len(),
        }
        .into());
    }
    Ok(())
}

pub fn load_input(d: &DataArgs, default_mode: Standardization) -> Result<Input> {
    let (raw, mut labels) = match (&d.data, &d.generate) {
        (Some(path), None) => load_csv(path, d.header, d.label_column.map(|c| c.0))?,
        (None, Some(spec)) => {
            if d.label_column.is_some() {
                return Err(CliError::Usage(
                    "--label-column applies to --data only".into(),
                ));
            }
            let (ps, c) = generate(&GeneratorSpec::from_arg(spec)?)?;
            (ps, Some(c))
        }
        (None, None) => {
            return Err(CliError::Usage(
                "one of --data or --generate is required".into(),
            ))
        }
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "--data and --generate are exclusive".into(),
            ))
        }
    };
    if let Some(path) = &d.labels {
        labels = Some(load_labels(path)?);
    }
    if let Some(c) = &labels {
        check_labels(&raw, c)?;
    }
    let standardization = d.standardize.unwrap_or(default_mode);
    let (points, _warnings) = z_standardize(&raw, standardization);
    Ok(Input {
        points,
        labels,
        standardization,
    })
}

pub fn require_labels(input: &Input) -> Result<&Clustering> {
    input.labels.as_ref().ok_or_else(|| {
        CliError::Usage("no labels: pass --labels, --label-column or --generate".into())
    })
}

pub fn score_params(d: &DataArgs) -> ScoreParams {
    ScoreParams {
        mu: d.mu,
        convention: if d.include_self {
            NeighborConvention::IncludeSelf
        } else {
            NeighborConvention::ExcludeSelf
        },
    }
}
