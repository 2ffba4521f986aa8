use std::fmt::Write as _;

use disco_core::datasets::{
    generate, perturb_labels, z_standardize, Amount, BallsSpec, GeneratorSpec, MoonsSpec,
    PerturbOp, Standardization,
};
use disco_core::{format_sig6, score_with, Clustering, PointSet, ScoreParams};
use rayon::prelude::*;

use crate::args::{AblateArgs, DataArgs, RampKind};
use crate::error::{CliError, Result};
use crate::input::{load_input, require_labels, score_params};
use crate::output::{cell, emit};

#[derive(Debug, Clone, PartialEq)]
pub struct RampRow {
    pub value: f64,
    pub disco: f64,
    pub mean_rho_sparse: Option<f64>,
    pub mean_rho_far: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RampResult {
    pub kind: RampKind,
    pub rows: Vec<RampRow>,
}

fn steps(start: f64, step: f64, count: usize) -> Vec<f64> {
    (0..count).map(|i| start + step * i as f64).collect()
}

pub fn default_values(kind: RampKind) -> Vec<f64> {
    match kind {
        RampKind::Swap => steps(0.0, 0.02, 16),
        RampKind::Separation => vec![
            0.0, 1.0, 2.0, 3.0, 4.0, 4.5, 5.0, 6.0, 8.0, 10.0, 15.0, 20.0,
        ],
        RampKind::Jitter => steps(0.0, 0.02, 11),
        RampKind::NoiseDensity => vec![4.0, 3.0, 2.0, 1.5, 1.0, 0.5, 0.25, 0.1],
        RampKind::NoiseDistance => steps(0.0, 0.5, 21),
        RampKind::Mu => steps(1.0, 1.0, 10),
    }
}

/// Base spec for the ball-based ramps: one ball of radius 2 plus a noise group.
pub fn noise_density_base(seed: u64) -> BallsSpec {
    BallsSpec {
        balls: 1,
        points_per_ball: 150,
        noise_count: 20,
        noise_radius: 1.0,
        noise_offset: 15.0,
        ..BallsSpec::new(seed)
    }
}

pub fn noise_distance_base(seed: u64) -> BallsSpec {
    BallsSpec {
        balls: 1,
        points_per_ball: 200,
        noise_count: 1,
        ..BallsSpec::new(seed)
    }
}

fn generator_base(d: &DataArgs) -> Result<Option<GeneratorSpec>> {
    if d.data.is_some() || d.labels.is_some() {
        return Err(CliError::Usage(
            "this ramp generates its own data; use --generate to adjust it".into(),
        ));
    }
    d.generate
        .as_deref()
        .map(GeneratorSpec::from_arg)
        .transpose()
        .map_err(Into::into)
}

fn balls_base(d: &DataArgs, fallback: BallsSpec) -> Result<BallsSpec> {
    match generator_base(d)? {
        None => Ok(fallback),
        Some(GeneratorSpec::UniformBalls(s)) => Ok(s),
        Some(other) => Err(CliError::Usage(format!(
            "this ramp needs uniform_balls data, not {}",
            other.kind()
        ))),
    }
}

fn moons_base(d: &DataArgs) -> Result<MoonsSpec> {
    match generator_base(d)? {
        None => Ok(MoonsSpec::new(d.seed)),
        Some(GeneratorSpec::TwoMoons(s)) => Ok(s),
        Some(other) => Err(CliError::Usage(format!(
            "the jitter ramp needs two_moons data, not {}",
            other.kind()
        ))),
    }
}

fn row(value: f64, ps: &PointSet, c: &Clustering, params: &ScoreParams) -> Result<RampRow> {
    let report = score_with(ps, c, params)?;
    Ok(RampRow {
        value,
        disco: report.disco,
        mean_rho_sparse: report.mean_rho_sparse(),
        mean_rho_far: report.mean_rho_far(),
    })
}

fn generated_row(
    value: f64,
    spec: GeneratorSpec,
    mode: Standardization,
    params: &ScoreParams,
) -> Result<RampRow> {
    let (raw, c) = generate(&spec)?;
    let (ps, _) = z_standardize(&raw, mode);
    row(value, &ps, &c, params)
}

pub fn run_ablate(args: &AblateArgs) -> Result<RampResult> {
    let d = &args.data;
    let values = args
        .ramp_values
        .clone()
        .unwrap_or_else(|| default_values(args.ramp));
    if values.is_empty() {
        return Err(CliError::Usage("--ramp-values is empty".into()));
    }
    let params = score_params(d);
    // Synthetic ramps run on raw coordinates unless asked otherwise.
    let raw_mode = d.standardize.unwrap_or(Standardization::None);

    let rows = match args.ramp {
        RampKind::Swap | RampKind::Mu => {
            let input = load_input(d, Standardization::PerFeature)?;
            let labels = require_labels(&input)?;
            let kind = args.ramp;
            values
                .par_iter()
                .map(|&v| match kind {
                    RampKind::Swap => {
                        let c = perturb_labels(
                            labels,
                            PerturbOp::SwapRandom,
                            Amount::Fraction(v),
                            d.seed,
                        )?;
                        row(v, &input.points, &c, &params)
                    }
                    _ => {
                        if v.fract() != 0.0 || v < 1.0 {
                            return Err(CliError::Usage(format!(
                                "mu ramp values must be positive integers, got {v}"
                            )));
                        }
                        let p = ScoreParams {
                            mu: v as usize,
                            ..params
                        };
                        row(v, &input.points, labels, &p)
                    }
                })
                .collect::<Result<Vec<_>>>()?
        }
        RampKind::Separation => {
            let base = balls_base(d, BallsSpec::new(d.seed))?;
            values
                .par_iter()
                .map(|&v| {
                    let spec = BallsSpec {
                        center_distance: v,
                        ..base.clone()
                    };
                    generated_row(v, GeneratorSpec::UniformBalls(spec), raw_mode, &params)
                })
                .collect::<Result<Vec<_>>>()?
        }
        RampKind::Jitter => {
            let base = moons_base(d)?;
            values
                .par_iter()
                .map(|&v| {
                    let spec = MoonsSpec {
                        jitter: v,
                        ..base.clone()
                    };
                    generated_row(v, GeneratorSpec::TwoMoons(spec), raw_mode, &params)
                })
                .collect::<Result<Vec<_>>>()?
        }
        RampKind::NoiseDensity | RampKind::NoiseDistance => {
            let density = args.ramp == RampKind::NoiseDensity;
            let fallback = if density {
                noise_density_base(d.seed)
            } else {
                noise_distance_base(d.seed)
            };
            let base = balls_base(d, fallback)?;
            values
                .par_iter()
                .map(|&v| {
                    let mut spec = base.clone();
                    if density {
                        spec.noise_radius = v;
                    } else {
                        spec.noise_offset = v;
                    }
                    generated_row(v, GeneratorSpec::UniformBalls(spec), raw_mode, &params)
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    Ok(RampResult {
        kind: args.ramp,
        rows,
    })
}

pub fn table(result: &RampResult) -> String {
    let mut s = String::from("ramp,value,disco,mean_rho_sparse,mean_rho_far\n");
    let name = clap::ValueEnum::to_possible_value(&result.kind)
        .expect("ramp kinds are not hidden")
        .get_name()
        .to_string();
    for r in &result.rows {
        let _ = writeln!(
            s,
            "{name},{},{},{},{}",
            format_sig6(r.value),
            format_sig6(r.disco),
            cell(r.mean_rho_sparse),
            cell(r.mean_rho_far)
        );
    }
    s
}

pub fn cmd_ablate(args: &AblateArgs) -> Result<()> {
    let result = run_ablate(args)?;
    emit(args.out.as_deref(), &table(&result))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_ramps() {
        let swap = default_values(RampKind::Swap);
        assert_eq!(swap.len(), 16);
        assert_eq!(swap[0], 0.0);
        assert!((swap[15] - 0.30).abs() < 1e-12);
        assert_eq!(
            default_values(RampKind::Mu),
            (1..=10).map(f64::from).collect::<Vec<_>>()
        );
        let density = default_values(RampKind::NoiseDensity);
        assert!(density.windows(2).all(|w| w[1] < w[0]));
        assert_eq!(
            *default_values(RampKind::NoiseDistance).last().unwrap(),
            10.0
        );
    }

    #[test]
    fn ball_bases_have_one_cluster() {
        assert_eq!(noise_density_base(1).balls, 1);
        assert_eq!(noise_distance_base(1).noise_count, 1);
    }
}
