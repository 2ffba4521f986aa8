use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Label reserved for noise points.
pub const NOISE: i64 = -1;

/// A labeling of `n` points into disjoint clusters plus a noise set.
///
/// Cluster labels may be any non-negative integers; internally they are
/// renumbered `0..k` in ascending label order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clustering {
    labels: Vec<i64>,
    assignment: Vec<Option<usize>>,
    clusters: Vec<Vec<usize>>,
    cluster_labels: Vec<i64>,
    noise: Vec<usize>,
}

impl Clustering {
    pub fn from_labels(labels: Vec<i64>) -> Result<Self> {
        let mut ids = BTreeMap::new();
        for (index, &label) in labels.iter().enumerate() {
            if label < NOISE {
                return Err(Error::InvalidLabel { index, label });
            }
            if label != NOISE {
                ids.insert(label, 0usize);
            }
        }
        let cluster_labels: Vec<i64> = ids.keys().copied().collect();
        for (id, slot) in ids.values_mut().enumerate() {
            *slot = id;
        }
        let mut clusters = vec![Vec::new(); cluster_labels.len()];
        let mut noise = Vec::new();
        let assignment = labels
            .iter()
            .enumerate()
            .map(|(i, label)| match ids.get(label) {
                Some(&id) => {
                    clusters[id].push(i);
                    Some(id)
                }
                None => {
                    noise.push(i);
                    None
                }
            })
            .collect();
        Ok(Self {
            labels,
            assignment,
            clusters,
            cluster_labels,
            noise,
        })
    }

    pub fn all_noise(n: usize) -> Self {
        Self::from_labels(vec![NOISE; n]).expect("noise labels are valid")
    }

    pub fn single_cluster(n: usize) -> Self {
        Self::from_labels(vec![0; n]).expect("zero labels are valid")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> i64 {
        self.labels[i]
    }

    /// Number of clusters, `k`.
    pub fn cluster_count(&self) -> usize {
        self.clusters.len()
    }

    /// Member indices of each cluster, ascending, indexed by normalized id.
    pub fn clusters(&self) -> &[Vec<usize>] {
        &self.clusters
    }

    /// Original label of the cluster with normalized id `id`.
    pub fn cluster_label(&self, id: usize) -> i64 {
        self.cluster_labels[id]
    }

    pub fn noise(&self) -> &[usize] {
        &self.noise
    }

    /// Normalized cluster id of point `i`, `None` for noise.
    #[inline]
    pub fn cluster_of(&self, i: usize) -> Option<usize> {
        self.assignment[i]
    }

    pub fn assignment(&self) -> &[Option<usize>] {
        &self.assignment
    }

    pub fn is_noise(&self, i: usize) -> bool {
        self.assignment[i].is_none()
    }

    /// Returns the labeling reordered so that entry `k` is entry `order[k]` of `self`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        if order.len() != self.len() {
            return Err(Error::LengthMismatch {
                what: "permutation",
                expected: self.len(),
                found: order.len(),
            });
        }
        let labels = order
            .iter()
            .map(|&i| {
                self.labels.get(i).copied().ok_or(Error::IndexOutOfRange {
                    index: i,
                    n: self.len(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_labels(labels)
    }
}
