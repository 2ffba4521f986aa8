use std::fmt::Write as _;

use disco_core::clusterers::{dbscan, kmeans, DbscanParams, KMeansParams};
use disco_core::datasets::{load_labels, Standardization};
use disco_core::{ari, format_sig6, noise_to_singletons, pearson, score_with, Clustering, Error};
use rayon::prelude::*;

use crate::args::SweepArgs;
use crate::error::{CliError, Result};
use crate::input::{check_labels, load_input, score_params};
use crate::output::{cell, emit, full};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Setting {
    Eps(f64),
    K(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub setting: Setting,
    pub clusters: usize,
    pub noise: usize,
    pub disco: f64,
    pub ari: Option<f64>,
    pub best: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
    pub has_reference: bool,
    /// Correlation of DISCO with ARI; `None` without a reference or when undefined.
    pub pcc: Option<f64>,
}

impl SweepResult {
    pub fn best(&self) -> &SweepRow {
        self.rows
            .iter()
            .find(|r| r.best)
            .expect("a sweep has a best row")
    }
}

fn settings(args: &SweepArgs) -> Result<Vec<Setting>> {
    let mut out: Vec<Setting> = match (&args.eps_list, &args.k_list) {
        (Some(eps), None) => {
            let mut eps = eps.clone();
            eps.sort_by(f64::total_cmp);
            eps.into_iter().map(Setting::Eps).collect()
        }
        (None, Some(ks)) => {
            let mut ks = ks.clone();
            ks.sort_unstable();
            ks.into_iter().map(Setting::K).collect()
        }
        _ => {
            return Err(CliError::Usage(
                "give exactly one of --eps-list and --k-list".into(),
            ))
        }
    };
    out.dedup();
    if out.len() < 2 {
        return Err(CliError::Usage(
            "a sweep needs at least two distinct settings".into(),
        ));
    }
    Ok(out)
}

pub fn run_sweep(args: &SweepArgs) -> Result<SweepResult> {
    let settings = settings(args)?;
    let input = load_input(&args.data, Standardization::PerFeature)?;
    let reference = match &args.reference_labels {
        Some(path) => {
            let c = load_labels(path)?;
            check_labels(&input.points, &c)?;
            Some(c)
        }
        None => input.labels.clone(),
    };
    let reference = reference.as_ref().map(noise_to_singletons);
    let params = score_params(&args.data);
    let ps = &input.points;

    let mut rows = settings
        .par_iter()
        .map(|&setting| -> Result<SweepRow> {
            let c: Clustering = match setting {
                Setting::Eps(eps) => dbscan(
                    ps,
                    DbscanParams {
                        eps,
                        min_pts: args.min_pts,
                    },
                )?,
                Setting::K(k) => kmeans(ps, KMeansParams::new(k, args.data.seed))?,
            };
            let report = score_with(ps, &c, &params)?;
            let ari = reference
                .as_ref()
                .map(|r| ari(&noise_to_singletons(&c), r))
                .transpose()?;
            Ok(SweepRow {
                setting,
                clusters: c.cluster_count(),
                noise: c.noise().len(),
                disco: report.disco,
                ari,
                best: false,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let best = (0..rows.len())
        .reduce(|a, b| if rows[b].disco > rows[a].disco { b } else { a })
        .expect("at least two rows");
    rows[best].best = true;

    let pcc = if reference.is_some() {
        let discos: Vec<f64> = rows.iter().map(|r| r.disco).collect();
        let aris: Vec<f64> = rows
            .iter()
            .map(|r| r.ari.expect("reference given"))
            .collect();
        match pearson(&discos, &aris) {
            Ok(r) => Some(r),
            Err(Error::UndefinedCorrelation(_)) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    Ok(SweepResult {
        rows,
        has_reference: reference.is_some(),
        pcc,
    })
}

fn setting_cells(s: Setting) -> (&'static str, String) {
    match s {
        Setting::Eps(e) => ("eps", format_sig6(e)),
        Setting::K(k) => ("k", k.to_string()),
    }
}

pub fn table(result: &SweepResult) -> String {
    let mut s = String::new();
    let name = setting_cells(result.rows[0].setting).0;
    let _ = write!(s, "{name},clusters,noise,disco");
    if result.has_reference {
        s.push_str(",ari");
    }
    s.push_str(",best\n");
    for r in &result.rows {
        let _ = write!(
            s,
            "{},{},{},{}",
            setting_cells(r.setting).1,
            r.clusters,
            r.noise,
            format_sig6(r.disco)
        );
        if result.has_reference {
            let _ = write!(s, ",{}", cell(r.ari));
        }
        let _ = writeln!(s, ",{}", u8::from(r.best));
    }
    s
}

pub fn summary(result: &SweepResult) -> String {
    let best = result.best();
    let (name, value) = setting_cells(best.setting);
    let mut s = String::new();
    let _ = writeln!(s, "best_{name}={value}");
    let _ = writeln!(s, "best_disco={}", full(best.disco));
    let _ = writeln!(s, "best_clusters={}", best.clusters);
    if result.has_reference {
        match result.pcc {
            Some(r) => {
                let _ = writeln!(s, "pcc={}", full(r));
            }
            None => s.push_str("pcc=undefined\n"),
        }
    }
    s
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<()> {
    let result = run_sweep(args)?;
    emit(args.out.as_deref(), &table(&result))?;
    emit(None, &summary(&result))
}
