use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use disco_core::datasets::{LabelColumn, Standardization};

#[derive(Debug, Parser)]
#[command(
    name = "disco",
    version,
    about = "Density-based validation of clusterings with noise"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score one labeling of a dataset.
    Score(ScoreArgs),
    /// Cluster with DBSCAN (eps list) or k-means (k list) and score every setting.
    Sweep(SweepArgs),
    /// Score a ramp of perturbed datasets or labelings.
    Ablate(AblateArgs),
}

/// `last` or a zero-based column index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelColumnArg(pub LabelColumn);

impl FromStr for LabelColumnArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "last" {
            return Ok(Self(LabelColumn::Last));
        }
        s.parse()
            .map(|i| Self(LabelColumn::Index(i)))
            .map_err(|_| format!("expected `last` or a column index, got {s:?}"))
    }
}

#[derive(Debug, Clone, Args)]
pub struct DataArgs {
    /// CSV file with one point per row.
    #[arg(long, conflicts_with = "generate")]
    pub data: Option<PathBuf>,
    /// Synthetic dataset: a spec file or inline `kind=...,seed=...` pairs.
    #[arg(long)]
    pub generate: Option<String>,
    /// The data file starts with a header row.
    #[arg(long)]
    pub header: bool,
    /// Column of the data file holding integer labels (`last` or an index).
    #[arg(long)]
    pub label_column: Option<LabelColumnArg>,
    /// File with one integer label per line (-1 marks noise); overrides other label sources.
    #[arg(long)]
    pub labels: Option<PathBuf>,
    /// Neighborhood size for core distances.
    #[arg(long, default_value_t = disco_core::DEFAULT_MU)]
    pub mu: usize,
    /// Count each point as its own first neighbor.
    #[arg(long)]
    pub include_self: bool,
    /// Feature standardization: per-feature, global or none.
    #[arg(long)]
    pub standardize: Option<Standardization>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct ScoreArgs {
    #[command(flatten)]
    pub data: DataArgs,
    /// Write per-point scores as CSV.
    #[arg(long, value_name = "OUT")]
    pub pointwise: Option<PathBuf>,
    /// Also write the summary lines to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub data: DataArgs,
    /// Comma-separated DBSCAN radii.
    #[arg(
        long,
        value_delimiter = ',',
        conflicts_with = "k_list",
        required_unless_present = "k_list"
    )]
    pub eps_list: Option<Vec<f64>>,
    /// Comma-separated k-means cluster counts.
    #[arg(long, value_delimiter = ',')]
    pub k_list: Option<Vec<usize>>,
    /// DBSCAN core-point threshold, the point itself included.
    #[arg(long, default_value_t = 5)]
    pub min_pts: usize,
    /// Labels to compare each setting against with ARI (defaults to the dataset's own labels).
    #[arg(long)]
    pub reference_labels: Option<PathBuf>,
    /// Write the sweep table here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RampKind {
    Swap,
    Separation,
    Jitter,
    #[value(name = "noise_density", alias = "noise-density")]
    NoiseDensity,
    #[value(name = "noise_distance", alias = "noise-distance")]
    NoiseDistance,
    Mu,
}

#[derive(Debug, Clone, Args)]
pub struct AblateArgs {
    #[command(flatten)]
    pub data: DataArgs,
    #[arg(long, value_enum)]
    pub ramp: RampKind,
    /// Comma-separated ramp values; each ramp has a default.
    #[arg(long, value_delimiter = ',')]
    pub ramp_values: Option<Vec<f64>>,
    /// Write the ramp table here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<Cli, clap::Error> {
        Cli::try_parse_from(std::iter::once("disco").chain(args.iter().copied()))
    }

    #[test]
    fn label_column_values() {
        assert_eq!(
            "last".parse::<LabelColumnArg>().unwrap().0,
            LabelColumn::Last
        );
        assert_eq!(
            "2".parse::<LabelColumnArg>().unwrap().0,
            LabelColumn::Index(2)
        );
        assert!("first".parse::<LabelColumnArg>().is_err());
    }

    #[test]
    fn score_defaults() {
        let Command::Score(a) = parse(&["score", "--data", "x.csv"]).unwrap().command else {
            panic!("expected score");
        };
        assert_eq!(a.data.mu, disco_core::DEFAULT_MU);
        assert!(!a.data.include_self);
        assert_eq!(a.data.standardize, None);
        assert_eq!(a.data.seed, 0);
    }

    #[test]
    fn sweep_lists() {
        let Command::Sweep(a) = parse(&["sweep", "--data", "x.csv", "--eps-list", "0.5,0.1"])
            .unwrap()
            .command
        else {
            panic!("expected sweep");
        };
        assert_eq!(a.eps_list, Some(vec![0.5, 0.1]));
        assert_eq!(a.min_pts, 5);
        assert!(parse(&["sweep", "--data", "x.csv"]).is_err());
        assert!(parse(&[
            "sweep",
            "--data",
            "x.csv",
            "--eps-list",
            "1",
            "--k-list",
            "2"
        ])
        .is_err());
    }

    #[test]
    fn ramp_names() {
        for (name, kind) in [
            ("noise_density", RampKind::NoiseDensity),
            ("noise-distance", RampKind::NoiseDistance),
            ("mu", RampKind::Mu),
        ] {
            let Command::Ablate(a) = parse(&["ablate", "--ramp", name]).unwrap().command else {
                panic!("expected ablate");
            };
            assert_eq!(a.ramp, kind);
        }
        assert!(parse(&["ablate", "--ramp", "shuffle"]).is_err());
    }

    #[test]
    fn data_conflicts_with_generate() {
        assert!(parse(&["score", "--data", "x.csv", "--generate", "kind=two_moons"]).is_err());
    }
}
