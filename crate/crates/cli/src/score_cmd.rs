use std::fmt::Write as _;

use disco_core::datasets::Standardization;
use disco_core::{score_with, write_pointwise_csv, NeighborConvention, ScoreReport};

use crate::args::ScoreArgs;
use crate::error::{CliError, Result};
use crate::input::{load_input, require_labels, score_params, Input};
use crate::output::{emit, full, write_file};

pub struct ScoreOutcome {
    pub input: Input,
    pub report: ScoreReport,
}

pub fn run_score(args: &ScoreArgs) -> Result<ScoreOutcome> {
    let input = load_input(&args.data, Standardization::PerFeature)?;
    let labels = require_labels(&input)?;
    let report = score_with(&input.points, labels, &score_params(&args.data))?;
    Ok(ScoreOutcome { input, report })
}

pub fn summary(outcome: &ScoreOutcome) -> String {
    let r = &outcome.report;
    let mut s = String::new();
    let _ = writeln!(s, "disco={}", full(r.disco));
    let _ = writeln!(s, "n={}", outcome.input.points.len());
    let _ = writeln!(s, "dim={}", outcome.input.points.dim());
    let _ = writeln!(s, "clusters={}", r.cluster_count);
    let _ = writeln!(s, "noise={}", r.noise_count);
    let _ = writeln!(s, "mu={}", r.params.mu);
    let convention = match r.params.convention {
        NeighborConvention::ExcludeSelf => "exclude-self",
        NeighborConvention::IncludeSelf => "include-self",
    };
    let _ = writeln!(s, "convention={convention}");
    let _ = writeln!(s, "standardize={}", outcome.input.standardization);
    if let Some(v) = r.mean_rho_sparse() {
        let _ = writeln!(s, "mean_rho_sparse={}", full(v));
    }
    if let Some(v) = r.mean_rho_far() {
        let _ = writeln!(s, "mean_rho_far={}", full(v));
    }
    s
}

pub fn cmd_score(args: &ScoreArgs) -> Result<()> {
    let outcome = run_score(args)?;
    if let Some(path) = &args.pointwise {
        let mut buf = Vec::new();
        write_pointwise_csv(&outcome.report, &mut buf).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        })?;
        write_file(path, &String::from_utf8(buf).expect("CSV output is UTF-8"))?;
    }
    let text = summary(&outcome);
    if let Some(path) = &args.out {
        write_file(path, &text)?;
    }
    emit(None, &text)
}
