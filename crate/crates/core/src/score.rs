//! Pointwise and aggregate DISCO scores.
//!
//! Cluster points are scored with a silhouette-style comparison of mean
//! dc-dists to their own cluster and to the nearest other cluster. Noise points
//! are scored by how sparse they are ([`rho_sparse`]) and how far they are from
//! every cluster in the density-connectivity sense ([`rho_far`]). Degenerate
//! clusterings (no clusters, one cluster, singletons) have fixed rules; see
//! [`score`].
//!
//! One [`DensityGraph`] over the full dataset, noise included, feeds every
//! formula. Pointwise values are independent of each other and are computed in
//! parallel; all sums are exact, so the aggregate is bit-identical for any
//! thread count and any ordering of the input points.

use std::fmt;
use std::io::Write;

use rayon::prelude::*;

use crate::clustering::Clustering;
use crate::density::{CoreDistances, DcDistIndex, DcScratch, DensityGraph, NeighborConvention};
use crate::error::{Error, Result};
use crate::numeric::{exact_sum, relative_gap, ExactSum};
use crate::points::PointSet;

/// Neighborhood size used when none is given.
pub const DEFAULT_MU: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScoreParams {
    pub mu: usize,
    pub convention: NeighborConvention,
}

impl Default for ScoreParams {
    fn default() -> Self {
        Self {
            mu: DEFAULT_MU,
            convention: NeighborConvention::ExcludeSelf,
        }
    }
}

impl ScoreParams {
    pub fn with_mu(mu: usize) -> Self {
        Self {
            mu,
            ..Self::default()
        }
    }
}

/// Per-cluster size and maximum core distance `kappa(C)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterStats {
    kappa_max: Vec<f64>,
    sizes: Vec<usize>,
}

impl ClusterStats {
    pub fn new(c: &Clustering, cd: &CoreDistances) -> Result<Self> {
        if c.len() != cd.len() {
            return Err(Error::LengthMismatch {
                what: "labels",
                expected: cd.len(),
                found: c.len(),
            });
        }
        let kappa_max = c
            .clusters()
            .iter()
            .map(|members| members.iter().map(|&i| cd.get(i)).fold(0.0, f64::max))
            .collect();
        let sizes = c.clusters().iter().map(Vec::len).collect();
        Ok(Self { kappa_max, sizes })
    }

    pub fn kappa_max(&self) -> &[f64] {
        &self.kappa_max
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }
}

/// Which rule produced a point's score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScoreKind {
    Cluster,
    Noise,
    SingletonZero,
    OneClusterZero,
    AllNoiseMinusOne,
    OneClusterVsNoise,
}

impl ScoreKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ScoreKind::Cluster => "cluster",
            ScoreKind::Noise => "noise",
            ScoreKind::SingletonZero => "singleton_zero",
            ScoreKind::OneClusterZero => "one_cluster_zero",
            ScoreKind::AllNoiseMinusOne => "all_noise_minus_one",
            ScoreKind::OneClusterVsNoise => "one_cluster_vs_noise",
        }
    }
}

impl fmt::Display for ScoreKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Intermediate quantities behind a point's score. Cluster ids are original labels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScoreDetail {
    None,
    Cluster {
        own_mean: f64,
        other_mean: f64,
        nearest_cluster: i64,
    },
    OneClusterVsNoise {
        own_mean: f64,
        nearest_noise_dc: f64,
    },
    Noise {
        rho_sparse: f64,
        rho_far: f64,
        sparse_cluster: i64,
        far_cluster: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointScore {
    pub index: usize,
    pub label: i64,
    pub value: f64,
    pub kind: ScoreKind,
    pub detail: ScoreDetail,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScoreReport {
    pub disco: f64,
    pub point_scores: Vec<PointScore>,
    pub params: ScoreParams,
    pub cluster_count: usize,
    pub noise_count: usize,
}

impl ScoreReport {
    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.point_scores.iter().map(|p| p.value)
    }

    /// Mean of `f` over noise points that carry noise detail, if any.
    fn mean_noise_component(&self, f: impl Fn(f64, f64) -> f64) -> Option<f64> {
        let parts: Vec<f64> = self
            .point_scores
            .iter()
            .filter_map(|p| match p.detail {
                ScoreDetail::Noise {
                    rho_sparse,
                    rho_far,
                    ..
                } => Some(f(rho_sparse, rho_far)),
                _ => None,
            })
            .collect();
        (!parts.is_empty()).then(|| exact_sum(parts.iter().copied()) / parts.len() as f64)
    }

    pub fn mean_rho_sparse(&self) -> Option<f64> {
        self.mean_noise_component(|s, _| s)
    }

    pub fn mean_rho_far(&self) -> Option<f64> {
        self.mean_noise_component(|_, f| f)
    }
}

/// Mean of a dc-dist row over the members of one cluster.
///
/// If the row's source point belongs to the cluster its own zero entry is part
/// of the mean.
pub fn mean_dc_to_cluster(row: &[f64], members: &[usize]) -> Result<f64> {
    if members.is_empty() {
        return Err(Error::Contract("mean dc-dist to an empty cluster".into()));
    }
    Ok(exact_sum(members.iter().map(|&y| row[y])) / members.len() as f64)
}

fn check_index(c: &Clustering, idx: &DcDistIndex, x: usize) -> Result<()> {
    if c.len() != idx.len() {
        return Err(Error::LengthMismatch {
            what: "labels",
            expected: idx.len(),
            found: c.len(),
        });
    }
    if x >= c.len() {
        return Err(Error::IndexOutOfRange {
            index: x,
            n: c.len(),
        });
    }
    Ok(())
}

fn require_noise(c: &Clustering, x: usize) -> Result<()> {
    if !c.is_noise(x) {
        return Err(Error::Contract(format!("point {x} is not labeled noise")));
    }
    if c.cluster_count() == 0 {
        return Err(Error::Contract(
            "noise scores need at least one cluster".into(),
        ));
    }
    Ok(())
}

/// Returns `(min value, arg-min id)` over `0..count`; ties keep the lowest id.
fn min_over(count: usize, f: impl Fn(usize) -> f64) -> (f64, usize) {
    let mut best = (f64::INFINITY, usize::MAX);
    for id in 0..count {
        let v = f(id);
        if v < best.0 {
            best = (v, id);
        }
    }
    best
}

/// Per-cluster aggregates of one dc-dist row.
struct RowSummary {
    sums: Vec<ExactSum>,
    mins: Vec<f64>,
    noise_min: f64,
}

impl RowSummary {
    fn new(k: usize) -> Self {
        Self {
            sums: vec![ExactSum::new(); k],
            mins: vec![f64::INFINITY; k],
            noise_min: f64::INFINITY,
        }
    }

    fn fill(&mut self, row: &[f64], c: &Clustering, want_sums: bool) {
        for s in &mut self.sums {
            s.clear();
        }
        self.mins.fill(f64::INFINITY);
        self.noise_min = f64::INFINITY;
        for (y, &d) in row.iter().enumerate() {
            match c.cluster_of(y) {
                Some(id) => {
                    if want_sums {
                        self.sums[id].add(d);
                    }
                    if d < self.mins[id] {
                        self.mins[id] = d;
                    }
                }
                None => {
                    if d < self.noise_min {
                        self.noise_min = d;
                    }
                }
            }
        }
    }

    fn mean(&self, id: usize, sizes: &[usize]) -> f64 {
        self.sums[id].value() / sizes[id] as f64
    }
}

fn cluster_term(
    summary: &RowSummary,
    c: &Clustering,
    sizes: &[usize],
    own: usize,
) -> (f64, ScoreDetail) {
    let own_mean = summary.mean(own, sizes);
    let k = c.cluster_count();
    let means: Vec<f64> = (0..k).map(|id| summary.mean(id, sizes)).collect();
    let (value, arg) = min_over(k, |id| {
        if id == own {
            f64::INFINITY
        } else {
            relative_gap(means[id], own_mean)
        }
    });
    (
        value,
        ScoreDetail::Cluster {
            own_mean,
            other_mean: means[arg],
            nearest_cluster: c.cluster_label(arg),
        },
    )
}

fn sparse_term(kappa_x: f64, stats: &ClusterStats) -> (f64, usize) {
    min_over(stats.kappa_max.len(), |id| {
        relative_gap(kappa_x, stats.kappa_max[id])
    })
}

fn far_term(summary: &RowSummary, stats: &ClusterStats) -> (f64, usize) {
    min_over(stats.kappa_max.len(), |id| {
        relative_gap(summary.mins[id], stats.kappa_max[id])
    })
}

fn noise_term(
    kappa_x: f64,
    summary: &RowSummary,
    c: &Clustering,
    stats: &ClusterStats,
) -> (f64, ScoreDetail) {
    let (rho_sparse, sparse_arg) = sparse_term(kappa_x, stats);
    let (rho_far, far_arg) = far_term(summary, stats);
    (
        rho_sparse.min(rho_far),
        ScoreDetail::Noise {
            rho_sparse,
            rho_far,
            sparse_cluster: c.cluster_label(sparse_arg),
            far_cluster: c.cluster_label(far_arg),
        },
    )
}

fn vs_noise_term(summary: &RowSummary, sizes: &[usize], own: usize) -> (f64, ScoreDetail) {
    let own_mean = summary.mean(own, sizes);
    let nearest_noise_dc = summary.noise_min;
    (
        relative_gap(nearest_noise_dc, own_mean),
        ScoreDetail::OneClusterVsNoise {
            own_mean,
            nearest_noise_dc,
        },
    )
}

fn summarize(idx: &DcDistIndex, c: &Clustering, x: usize, want_sums: bool) -> Result<RowSummary> {
    let row = idx.dc_rows_from(x)?;
    let mut summary = RowSummary::new(c.cluster_count());
    summary.fill(&row, c, want_sums);
    Ok(summary)
}

fn sizes_of(c: &Clustering) -> Vec<usize> {
    c.clusters().iter().map(Vec::len).collect()
}

/// Silhouette-style score of a cluster point against the nearest other cluster.
///
/// Requires at least two clusters. Singleton clusters take part as comparison targets.
pub fn rho_cluster(x: usize, c: &Clustering, idx: &DcDistIndex) -> Result<f64> {
    check_index(c, idx, x)?;
    let own = c
        .cluster_of(x)
        .ok_or_else(|| Error::Contract(format!("point {x} is labeled noise")))?;
    if c.cluster_count() < 2 {
        return Err(Error::Contract(
            "rho_cluster needs at least two clusters".into(),
        ));
    }
    let summary = summarize(idx, c, x, true)?;
    Ok(cluster_term(&summary, c, &sizes_of(c), own).0)
}

/// How much sparser a noise point is than the loosest-fitting cluster.
pub fn rho_sparse(
    x: usize,
    c: &Clustering,
    cd: &CoreDistances,
    stats: &ClusterStats,
) -> Result<f64> {
    if x >= c.len() || c.len() != cd.len() {
        return Err(Error::IndexOutOfRange {
            index: x,
            n: cd.len(),
        });
    }
    require_noise(c, x)?;
    Ok(sparse_term(cd.get(x), stats).0)
}

/// How far a noise point is, in dc-dist, from being density-connected to any cluster.
pub fn rho_far(x: usize, c: &Clustering, idx: &DcDistIndex, stats: &ClusterStats) -> Result<f64> {
    check_index(c, idx, x)?;
    require_noise(c, x)?;
    let summary = summarize(idx, c, x, false)?;
    Ok(far_term(&summary, stats).0)
}

/// `min(rho_sparse, rho_far)`.
pub fn rho_noise(
    x: usize,
    c: &Clustering,
    cd: &CoreDistances,
    idx: &DcDistIndex,
    stats: &ClusterStats,
) -> Result<f64> {
    Ok(rho_sparse(x, c, cd, stats)?.min(rho_far(x, c, idx, stats)?))
}

/// Score of a point in the only cluster, measured against the closest noise point.
pub fn rho_cluster_vs_noise(x: usize, c: &Clustering, idx: &DcDistIndex) -> Result<f64> {
    check_index(c, idx, x)?;
    if c.cluster_count() != 1 || c.noise().is_empty() {
        return Err(Error::Contract(
            "one-cluster score needs exactly one cluster and at least one noise point".into(),
        ));
    }
    let own = c
        .cluster_of(x)
        .ok_or_else(|| Error::Contract(format!("point {x} is labeled noise")))?;
    let summary = summarize(idx, c, x, true)?;
    Ok(vs_noise_term(&summary, &sizes_of(c), own).0)
}

/// Scores a clustering with the default parameters and the given `mu`.
pub fn score(ps: &PointSet, c: &Clustering, mu: usize) -> Result<ScoreReport> {
    score_with(ps, c, &ScoreParams::with_mu(mu))
}

/// Scores every point and averages.
///
/// Dispatch per point:
/// * no clusters at all: every point scores -1;
/// * members of singleton clusters score 0;
/// * one cluster and no noise: every point scores 0;
/// * one cluster plus noise: cluster points are compared with the closest
///   noise point, noise points get the regular noise score;
/// * otherwise cluster points get [`rho_cluster`] and noise points [`rho_noise`].
pub fn score_with(ps: &PointSet, c: &Clustering, params: &ScoreParams) -> Result<ScoreReport> {
    let n = ps.len();
    if c.len() != n {
        return Err(Error::LengthMismatch {
            what: "labels",
            expected: n,
            found: c.len(),
        });
    }
    params.convention.validate(params.mu, n)?;

    let k = c.cluster_count();
    let sizes = sizes_of(c);
    let trivial = k == 0 || (c.noise().is_empty() && (k == 1 || sizes.iter().all(|&s| s == 1)));
    let point_scores: Vec<PointScore> = if trivial {
        (0..n)
            .map(|x| {
                let (value, kind) = match c.cluster_of(x) {
                    None => (-1.0, ScoreKind::AllNoiseMinusOne),
                    Some(id) if sizes[id] == 1 => (0.0, ScoreKind::SingletonZero),
                    Some(_) => (0.0, ScoreKind::OneClusterZero),
                };
                PointScore {
                    index: x,
                    label: c.label(x),
                    value,
                    kind,
                    detail: ScoreDetail::None,
                }
            })
            .collect()
    } else {
        let graph = DensityGraph::build(ps, params.mu, params.convention)?;
        let stats = ClusterStats::new(c, graph.core())?;
        let idx = graph.index();
        (0..n)
            .into_par_iter()
            .map_init(
                || (DcScratch::default(), vec![0.0; n], RowSummary::new(k)),
                |(scratch, row, summary), x| -> Result<PointScore> {
                    let label = c.label(x);
                    let own = c.cluster_of(x);
                    if let Some(id) = own {
                        if sizes[id] == 1 {
                            return Ok(PointScore {
                                index: x,
                                label,
                                value: 0.0,
                                kind: ScoreKind::SingletonZero,
                                detail: ScoreDetail::None,
                            });
                        }
                    }
                    idx.dc_row_into(x, scratch, row)?;
                    summary.fill(row, c, own.is_some());
                    let (value, kind, detail) = match own {
                        Some(id) if k == 1 => {
                            let (v, d) = vs_noise_term(summary, &sizes, id);
                            (v, ScoreKind::OneClusterVsNoise, d)
                        }
                        Some(id) => {
                            let (v, d) = cluster_term(summary, c, &sizes, id);
                            (v, ScoreKind::Cluster, d)
                        }
                        None => {
                            let (v, d) = noise_term(graph.core().get(x), summary, c, &stats);
                            (v, ScoreKind::Noise, d)
                        }
                    };
                    Ok(PointScore {
                        index: x,
                        label,
                        value,
                        kind,
                        detail,
                    })
                },
            )
            .collect::<Result<Vec<_>>>()?
    };

    let disco = exact_sum(point_scores.iter().map(|p| p.value)) / n as f64;
    if !disco.is_finite() || point_scores.iter().any(|p| !p.value.is_finite()) {
        return Err(Error::Contract("score produced a non-finite value".into()));
    }
    Ok(ScoreReport {
        disco,
        point_scores,
        params: *params,
        cluster_count: k,
        noise_count: c.noise().len(),
    })
}

/// One row of the pointwise table.
#[derive(Debug, Clone, PartialEq)]
pub struct PointwiseRow {
    pub index: usize,
    pub label: i64,
    pub kind: ScoreKind,
    pub value: f64,
    pub own_mean: Option<f64>,
    pub other_mean: Option<f64>,
    pub nearest_cluster: Option<i64>,
    pub nearest_noise_dc: Option<f64>,
    pub rho_sparse: Option<f64>,
    pub rho_far: Option<f64>,
    pub sparse_cluster: Option<i64>,
    pub far_cluster: Option<i64>,
}

pub const POINTWISE_HEADER: [&str; 12] = [
    "index",
    "label",
    "kind",
    "value",
    "own_mean",
    "other_mean",
    "nearest_cluster",
    "nearest_noise_dc",
    "rho_sparse",
    "rho_far",
    "sparse_cluster",
    "far_cluster",
];

/// Flattens a report into one row per point.
pub fn pointwise_report(report: &ScoreReport) -> Vec<PointwiseRow> {
    report
        .point_scores
        .iter()
        .map(|p| {
            let mut row = PointwiseRow {
                index: p.index,
                label: p.label,
                kind: p.kind,
                value: p.value,
                own_mean: None,
                other_mean: None,
                nearest_cluster: None,
                nearest_noise_dc: None,
                rho_sparse: None,
                rho_far: None,
                sparse_cluster: None,
                far_cluster: None,
            };
            match p.detail {
                ScoreDetail::None => {}
                ScoreDetail::Cluster {
                    own_mean,
                    other_mean,
                    nearest_cluster,
                } => {
                    row.own_mean = Some(own_mean);
                    row.other_mean = Some(other_mean);
                    row.nearest_cluster = Some(nearest_cluster);
                }
                ScoreDetail::OneClusterVsNoise {
                    own_mean,
                    nearest_noise_dc,
                } => {
                    row.own_mean = Some(own_mean);
                    row.nearest_noise_dc = Some(nearest_noise_dc);
                }
                ScoreDetail::Noise {
                    rho_sparse,
                    rho_far,
                    sparse_cluster,
                    far_cluster,
                } => {
                    row.rho_sparse = Some(rho_sparse);
                    row.rho_far = Some(rho_far);
                    row.sparse_cluster = Some(sparse_cluster);
                    row.far_cluster = Some(far_cluster);
                }
            }
            row
        })
        .collect()
}

/// Formats a float with 6 significant digits.
pub fn format_sig6(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let s = format!("{:.5e}", v);
    // Round-trip through the parser to drop exponent notation for ordinary magnitudes.
    let parsed: f64 = s.parse().expect("formatted float parses");
    let mag = parsed.abs();
    if (1e-4..1e6).contains(&mag) {
        let digits = (5 - mag.log10().floor() as i32).max(0) as usize;
        let out = format!("{:.*}", digits, parsed);
        if out.contains('.') {
            out.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            out
        }
    } else {
        s
    }
}

/// Writes the pointwise table as CSV with a fixed column order.
pub fn write_pointwise_csv<W: Write>(report: &ScoreReport, out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(POINTWISE_HEADER)?;
    let opt_f = |v: Option<f64>| v.map(format_sig6).unwrap_or_default();
    let opt_i = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
    for r in pointwise_report(report) {
        w.write_record([
            r.index.to_string(),
            r.label.to_string(),
            r.kind.to_string(),
            format_sig6(r.value),
            opt_f(r.own_mean),
            opt_f(r.other_mean),
            opt_i(r.nearest_cluster),
            opt_f(r.nearest_noise_dc),
            opt_f(r.rho_sparse),
            opt_f(r.rho_far),
            opt_i(r.sparse_cluster),
            opt_i(r.far_cluster),
        ])?;
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(rows: &[[f64; 2]]) -> PointSet {
        PointSet::from_rows(rows).unwrap()
    }

    fn labels(v: &[i64]) -> Clustering {
        Clustering::from_labels(v.to_vec()).unwrap()
    }

    #[test]
    fn mean_dc_includes_own_zero_entry() {
        assert_eq!(mean_dc_to_cluster(&[0.0, 4.0], &[0, 1]).unwrap(), 2.0);
        assert_eq!(mean_dc_to_cluster(&[0.0, 4.0], &[0]).unwrap(), 0.0);
        assert!(matches!(
            mean_dc_to_cluster(&[0.0], &[]),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn all_noise_scores_minus_one() {
        let ps = pts(&[[0.0, 0.0], [1.0, 0.0], [5.0, 5.0]]);
        let r = score(&ps, &Clustering::all_noise(3), 1).unwrap();
        assert_eq!(r.disco, -1.0);
        assert!(r
            .point_scores
            .iter()
            .all(|p| p.kind == ScoreKind::AllNoiseMinusOne));
    }

    #[test]
    fn one_cluster_scores_zero() {
        let ps = pts(&[[0.0, 0.0], [1.0, 0.0], [5.0, 5.0]]);
        let r = score(&ps, &Clustering::single_cluster(3), 1).unwrap();
        assert_eq!(r.disco, 0.0);
        assert!(r
            .point_scores
            .iter()
            .all(|p| p.kind == ScoreKind::OneClusterZero));
    }

    #[test]
    fn singletons_score_zero() {
        let ps = pts(&[[0.0, 0.0], [1.0, 0.0], [5.0, 5.0], [6.0, 5.0]]);
        let r = score(&ps, &labels(&[0, 1, 2, 3]), 1).unwrap();
        assert_eq!(r.disco, 0.0);
        assert!(r
            .point_scores
            .iter()
            .all(|p| p.kind == ScoreKind::SingletonZero));
    }

    #[test]
    fn singletons_stay_comparison_targets() {
        // Cluster {0,1} and a singleton {2} far away.
        let ps = pts(&[[0.0, 0.0], [1.0, 0.0], [20.0, 0.0]]);
        let r = score(&ps, &labels(&[0, 0, 1]), 1).unwrap();
        assert_eq!(r.point_scores[2].kind, ScoreKind::SingletonZero);
        assert_eq!(r.point_scores[0].kind, ScoreKind::Cluster);
        // own mean (0 + 1) / 2 = 0.5; dc to singleton = 19.
        assert!((r.point_scores[0].value - (19.0 - 0.5) / 19.0).abs() < 1e-15);
    }

    #[test]
    fn label_length_mismatch_is_rejected() {
        let ps = pts(&[[0.0, 0.0], [1.0, 0.0]]);
        assert!(matches!(
            score(&ps, &labels(&[0]), 1),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            score(&ps, &labels(&[0, 0]), 2),
            Err(Error::InvalidMu { .. })
        ));
    }

    #[test]
    fn contract_errors_on_wrong_point_kind() {
        let ps = pts(&[[0.0, 0.0], [1.0, 0.0], [9.0, 0.0], [10.0, 0.0], [30.0, 0.0]]);
        let c = labels(&[0, 0, 1, 1, -1]);
        let g = DensityGraph::build(&ps, 1, NeighborConvention::ExcludeSelf).unwrap();
        let stats = ClusterStats::new(&c, g.core()).unwrap();
        assert!(matches!(
            rho_cluster(4, &c, g.index()),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            rho_sparse(0, &c, g.core(), &stats),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            rho_far(0, &c, g.index(), &stats),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            rho_cluster_vs_noise(0, &c, g.index()),
            Err(Error::Contract(_))
        ));
        let one = labels(&[0, 0, 0, 0, 0]);
        assert!(matches!(
            rho_cluster(0, &one, g.index()),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn rho_noise_is_min_of_components() {
        let ps = pts(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0], [0.5, 0.5]]);
        let c = labels(&[0, 0, 0, 0, -1]);
        let g = DensityGraph::build(&ps, 2, NeighborConvention::ExcludeSelf).unwrap();
        let stats = ClusterStats::new(&c, g.core()).unwrap();
        let s = rho_sparse(4, &c, g.core(), &stats).unwrap();
        let f = rho_far(4, &c, g.index(), &stats).unwrap();
        let n = rho_noise(4, &c, g.core(), g.index(), &stats).unwrap();
        assert_eq!(n, s.min(f));
        // The centre point is denser than the cluster: both components are negative.
        assert!(s < 0.0 && f <= 0.0);
    }

    #[test]
    fn sig6_formatting() {
        assert_eq!(format_sig6(0.0), "0");
        assert_eq!(format_sig6(-1.0), "-1");
        assert_eq!(format_sig6(0.123456789), "0.123457");
        assert_eq!(format_sig6(1234.56789), "1234.57");
        assert_eq!(format_sig6(1.5e-7), "1.50000e-7");
    }

    #[test]
    fn pointwise_csv_has_one_row_per_point() {
        let ps = pts(&[[0.0, 0.0], [1.0, 0.0], [9.0, 0.0], [10.0, 0.0], [30.0, 0.0]]);
        let r = score(&ps, &labels(&[0, 0, 1, 1, -1]), 1).unwrap();
        let mut buf = Vec::new();
        write_pointwise_csv(&r, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 6);
        assert!(lines[0].starts_with("index,label,kind,value"));
        assert!(lines[5].starts_with("4,-1,noise,"));
    }
}
