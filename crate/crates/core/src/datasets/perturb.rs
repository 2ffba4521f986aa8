//! Seeded label perturbations for ablation ramps.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clustering::{Clustering, NOISE};
use crate::error::{Error, Result};
use crate::points::PointSet;

/// How much to perturb: a fraction of the eligible points or an absolute count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Amount {
    Fraction(f64),
    Count(usize),
}

impl Amount {
    fn resolve(self, available: usize) -> Result<usize> {
        let count = match self {
            Amount::Fraction(p) => {
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::InvalidParameter(format!(
                        "fraction {p} outside [0, 1]"
                    )));
                }
                (p * available as f64).round() as usize
            }
            Amount::Count(c) => c,
        };
        if count > available {
            return Err(Error::InvalidParameter(format!(
                "amount {count} exceeds the {available} eligible points"
            )));
        }
        Ok(count)
    }
}

#[derive(Debug, Clone, Copy)]
pub enum PerturbOp<'a> {
    /// Moves clustered points to a different, uniformly chosen cluster.
    SwapRandom,
    /// Relabels clustered points as noise, optionally only members of one cluster (by label).
    RelabelNoise { cluster: Option<i64> },
    /// Relabels as noise a compact group: the clustered points nearest to an
    /// anchor point (seed-chosen when `anchor` is `None`), anchor included.
    DensifyNoise {
        points: &'a PointSet,
        anchor: Option<usize>,
    },
}

/// Returns a perturbed copy of `c`; the input is left untouched.
pub fn perturb_labels(
    c: &Clustering,
    op: PerturbOp<'_>,
    amount: Amount,
    seed: u64,
) -> Result<Clustering> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels = c.labels().to_vec();
    let clustered: Vec<usize> = (0..c.len()).filter(|&i| !c.is_noise(i)).collect();
    match op {
        PerturbOp::SwapRandom => {
            let count = amount.resolve(clustered.len())?;
            if count == 0 {
                return Ok(c.clone());
            }
            let k = c.cluster_count();
            if k < 2 {
                return Err(Error::InvalidParameter(
                    "swapping labels needs at least two clusters".into(),
                ));
            }
            for pick in sample(&mut rng, clustered.len(), count) {
                let i = clustered[pick];
                let own = c.cluster_of(i).expect("clustered point");
                let mut target = rng.random_range(0..k - 1);
                if target >= own {
                    target += 1;
                }
                labels[i] = c.cluster_label(target);
            }
        }
        PerturbOp::RelabelNoise { cluster } => {
            let pool: Vec<usize> = match cluster {
                None => clustered,
                Some(label) => {
                    let members: Vec<usize> = clustered
                        .into_iter()
                        .filter(|&i| c.label(i) == label)
                        .collect();
                    if members.is_empty() {
                        return Err(Error::InvalidParameter(format!(
                            "no cluster with label {label}"
                        )));
                    }
                    members
                }
            };
            let count = amount.resolve(pool.len())?;
            for pick in sample(&mut rng, pool.len(), count) {
                labels[pool[pick]] = NOISE;
            }
        }
        PerturbOp::DensifyNoise { points, anchor } => {
            if points.len() != c.len() {
                return Err(Error::LengthMismatch {
                    what: "labels",
                    expected: points.len(),
                    found: c.len(),
                });
            }
            let count = amount.resolve(clustered.len())?;
            if count == 0 {
                return Ok(c.clone());
            }
            let anchor = match anchor {
                Some(a) if a >= c.len() => {
                    return Err(Error::IndexOutOfRange {
                        index: a,
                        n: c.len(),
                    })
                }
                Some(a) => a,
                None => clustered[rng.random_range(0..clustered.len())],
            };
            let mut by_distance: Vec<(f64, usize)> = clustered
                .iter()
                .map(|&i| (points.distance(anchor, i), i))
                .collect();
            by_distance.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
            for &(_, i) in by_distance.iter().take(count) {
                labels[i] = NOISE;
            }
        }
    }
    Clustering::from_labels(labels)
}
