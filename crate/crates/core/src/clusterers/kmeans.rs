use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::clustering::Clustering;
use crate::error::{Error, Result};
use crate::numeric::ExactSum;
use crate::points::PointSet;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KMeansParams {
    pub k: usize,
    pub max_iters: usize,
    pub seed: u64,
    /// Stop once no center moves farther than this.
    pub tolerance: f64,
}

impl KMeansParams {
    pub fn new(k: usize, seed: u64) -> Self {
        Self {
            k,
            max_iters: 300,
            seed,
            tolerance: 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KMeansFit {
    pub assignment: Vec<usize>,
    pub centers: Vec<Vec<f64>>,
    /// Sum of squared distances to the assigned center, one entry per assignment step.
    pub objective_history: Vec<f64>,
    pub iterations: usize,
}

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn nearest(p: &[f64], centers: &[Vec<f64>]) -> (usize, f64) {
    let mut best = (0, f64::INFINITY);
    for (c, center) in centers.iter().enumerate() {
        let d = sq_dist(p, center);
        if d < best.1 {
            best = (c, d);
        }
    }
    best
}

/// Lloyd's algorithm from seeded, distinct initial points.
///
/// An emptied cluster is re-seeded with the point farthest from its current center.
pub fn kmeans_fit(ps: &PointSet, params: KMeansParams) -> Result<KMeansFit> {
    let n = ps.len();
    if params.k == 0 || params.k > n {
        return Err(Error::InvalidParameter(format!(
            "k must be in 1..={n}, got {}",
            params.k
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut picks = sample(&mut rng, n, params.k).into_vec();
    picks.sort_unstable();
    let mut centers: Vec<Vec<f64>> = picks.iter().map(|&i| ps.point(i).to_vec()).collect();
    let mut assignment = vec![0usize; n];
    let mut history = Vec::new();
    let mut iterations = 0;
    let m = ps.dim();

    loop {
        let mut dists = vec![0.0; n];
        for (i, p) in ps.rows().enumerate() {
            let (c, d) = nearest(p, &centers);
            assignment[i] = c;
            dists[i] = d;
        }
        history.push(dists.iter().copied().collect::<ExactSum>().value());
        if iterations >= params.max_iters {
            break;
        }
        iterations += 1;

        let mut sums = vec![vec![ExactSum::new(); m]; params.k];
        let mut counts = vec![0usize; params.k];
        for (i, p) in ps.rows().enumerate() {
            counts[assignment[i]] += 1;
            for (s, &v) in sums[assignment[i]].iter_mut().zip(p) {
                s.add(v);
            }
        }
        let mut shift: f64 = 0.0;
        for c in 0..params.k {
            let new = if counts[c] == 0 {
                let far = (0..n)
                    .max_by(|&a, &b| dists[a].total_cmp(&dists[b]).then(b.cmp(&a)))
                    .expect("n >= 1");
                dists[far] = 0.0;
                ps.point(far).to_vec()
            } else {
                sums[c]
                    .iter()
                    .map(|s| s.value() / counts[c] as f64)
                    .collect()
            };
            shift = shift.max(sq_dist(&new, &centers[c]).sqrt());
            centers[c] = new;
        }
        if shift <= params.tolerance {
            break;
        }
    }
    Ok(KMeansFit {
        assignment,
        centers,
        objective_history: history,
        iterations,
    })
}

pub fn kmeans(ps: &PointSet, params: KMeansParams) -> Result<Clustering> {
    let fit = kmeans_fit(ps, params)?;
    Clustering::from_labels(fit.assignment.into_iter().map(|c| c as i64).collect())
}
