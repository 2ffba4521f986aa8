//! External agreement between labelings and correlation helpers.

use std::collections::BTreeMap;

use crate::clustering::Clustering;
use crate::error::{Error, Result};
use crate::numeric::exact_sum;

/// Relabels every noise point as its own one-member cluster.
///
/// Fresh ids start above the largest existing cluster label.
pub fn noise_to_singletons(c: &Clustering) -> Clustering {
    let mut next = c.labels().iter().copied().max().unwrap_or(-1).max(-1) + 1;
    let labels = c
        .labels()
        .iter()
        .map(|&l| {
            if l < 0 {
                next += 1;
                next - 1
            } else {
                l
            }
        })
        .collect();
    Clustering::from_labels(labels).expect("non-negative labels are valid")
}

/// Co-occurrence counts of two labelings over the same points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContingencyTable {
    counts: BTreeMap<(i64, i64), u64>,
    row_sums: BTreeMap<i64, u64>,
    col_sums: BTreeMap<i64, u64>,
    total: u64,
}

impl ContingencyTable {
    pub fn new(a: &Clustering, b: &Clustering) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                what: "second labeling",
                expected: a.len(),
                found: b.len(),
            });
        }
        let mut counts = BTreeMap::new();
        let mut row_sums = BTreeMap::new();
        let mut col_sums = BTreeMap::new();
        for (&la, &lb) in a.labels().iter().zip(b.labels()) {
            *counts.entry((la, lb)).or_insert(0) += 1;
            *row_sums.entry(la).or_insert(0) += 1;
            *col_sums.entry(lb).or_insert(0) += 1;
        }
        Ok(Self {
            counts,
            row_sums,
            col_sums,
            total: a.len() as u64,
        })
    }

    pub fn count(&self, a: i64, b: i64) -> u64 {
        self.counts.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn row_sums(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.row_sums.iter().map(|(&k, &v)| (k, v))
    }

    pub fn col_sums(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.col_sums.iter().map(|(&k, &v)| (k, v))
    }

    pub fn total(&self) -> u64 {
        self.total
    }
}

fn pairs(v: u64) -> f64 {
    (v as f64) * (v.saturating_sub(1) as f64) / 2.0
}

/// Adjusted Rand Index (Hubert-Arabie permutation model).
///
/// Noise labels are compared as ordinary labels; convert them first with
/// [`noise_to_singletons`] to treat each noise point as its own cluster. When
/// both partitions are trivial (maximum index equals expected index) the
/// result is 1 if the partitions are identical and 0 otherwise.
pub fn ari(a: &Clustering, b: &Clustering) -> Result<f64> {
    let table = ContingencyTable::new(a, b)?;
    let index = exact_sum(table.counts.values().map(|&v| pairs(v)));
    let sum_a = exact_sum(table.row_sums.values().map(|&v| pairs(v)));
    let sum_b = exact_sum(table.col_sums.values().map(|&v| pairs(v)));
    let total = pairs(table.total);
    let expected = if total > 0.0 {
        sum_a * sum_b / total
    } else {
        0.0
    };
    let max_index = (sum_a + sum_b) / 2.0;
    let denom = max_index - expected;
    if denom == 0.0 {
        let identical = index == sum_a && index == sum_b;
        return Ok(if identical { 1.0 } else { 0.0 });
    }
    Ok((index - expected) / denom)
}

/// Pearson correlation coefficient of two equally long samples.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch {
            what: "second sample",
            expected: xs.len(),
            found: ys.len(),
        });
    }
    if xs.len() < 2 {
        return Err(Error::UndefinedCorrelation("fewer than two samples"));
    }
    let n = xs.len() as f64;
    let mx = exact_sum(xs.iter().copied()) / n;
    let my = exact_sum(ys.iter().copied()) / n;
    let sxy = exact_sum(xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)));
    let sxx = exact_sum(xs.iter().map(|x| (x - mx) * (x - mx)));
    let syy = exact_sum(ys.iter().map(|y| (y - my) * (y - my)));
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::UndefinedCorrelation("zero variance"));
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}
