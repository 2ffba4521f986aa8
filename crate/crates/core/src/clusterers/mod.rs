//! Reference clusterers used to produce candidate labelings for sweeps.

mod dbscan;
mod kmeans;

pub use dbscan::{dbscan, DbscanParams};
pub use kmeans::{kmeans, kmeans_fit, KMeansFit, KMeansParams};
