//! Density-connectivity based internal cluster validation.
//!
//! [`score`] rates a labeling of a point set (label `-1` marks noise) with a value in
//! `[-1, 1]`, computed from distances along the minimum spanning tree of the mutual
//! reachability graph. Noise points are rated as well, so labelings that leave
//! outliers unassigned can be compared with ones that do not.
//!
//! ```
//! use disco_core::{score, Clustering, PointSet};
//!
//! let ps = PointSet::from_rows(&[[0.0], [0.1], [0.2], [5.0], [5.1], [5.2]]).unwrap();
//! let c = Clustering::from_labels(vec![0, 0, 0, 1, 1, 1]).unwrap();
//! let report = score(&ps, &c, 2).unwrap();
//! assert!(report.disco > 0.9);
//! ```

pub mod clusterers;
pub mod clustering;
pub mod datasets;
pub mod density;
pub mod error;
pub mod external;
pub mod numeric;
pub mod points;
pub mod score;

pub use clustering::{Clustering, NOISE};
pub use density::{
    build_mst, core_distances, core_distances_with, mutual_reachability,
    mutual_reachability_distance, pairwise_euclidean, CoreDistances, DcDistIndex, DcScratch,
    DensityGraph, DistanceMatrix, MrdMst, MstEdge, NeighborConvention,
};
pub use error::{Error, Result};
pub use external::{ari, noise_to_singletons, pearson, ContingencyTable};
pub use numeric::{exact_mean, exact_sum, relative_gap, ExactSum};
pub use points::PointSet;
pub use score::{
    format_sig6, mean_dc_to_cluster, pointwise_report, score, score_with, write_pointwise_csv,
    PointScore, PointwiseRow, ScoreDetail, ScoreKind, ScoreParams, ScoreReport, DEFAULT_MU,
    POINTWISE_HEADER,
};
