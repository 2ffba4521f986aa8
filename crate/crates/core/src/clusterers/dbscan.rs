use crate::clustering::{Clustering, NOISE};
use crate::error::{Error, Result};
use crate::points::PointSet;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DbscanParams {
    pub eps: f64,
    /// Neighborhood size (the point itself included) needed to be a core point.
    pub min_pts: usize,
}

fn neighbors(ps: &PointSet, i: usize, eps: f64, out: &mut Vec<usize>) {
    out.clear();
    out.extend((0..ps.len()).filter(|&j| ps.distance(i, j) <= eps));
}

/// Classic DBSCAN. Points are visited in index order, so cluster ids follow
/// discovery order; a border point reachable from several clusters joins the
/// first one that reaches it. Neighborhoods are recomputed, never stored.
pub fn dbscan(ps: &PointSet, params: DbscanParams) -> Result<Clustering> {
    if !(params.eps.is_finite() && params.eps > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "eps must be finite and positive, got {}",
            params.eps
        )));
    }
    if params.min_pts == 0 {
        return Err(Error::InvalidParameter("min_pts must be at least 1".into()));
    }
    let n = ps.len();
    let mut labels: Vec<Option<i64>> = vec![None; n];
    let mut nbrs = Vec::new();
    let mut queue = Vec::new();
    let mut next_id = 0i64;
    for i in 0..n {
        if labels[i].is_some() {
            continue;
        }
        neighbors(ps, i, params.eps, &mut nbrs);
        if nbrs.len() < params.min_pts {
            labels[i] = Some(NOISE);
            continue;
        }
        let id = next_id;
        next_id += 1;
        labels[i] = Some(id);
        queue.clear();
        queue.extend(nbrs.iter().copied().filter(|&j| j != i));
        while let Some(j) = queue.pop() {
            match labels[j] {
                Some(NOISE) => {
                    labels[j] = Some(id);
                    continue;
                }
                Some(_) => continue,
                None => labels[j] = Some(id),
            }
            neighbors(ps, j, params.eps, &mut nbrs);
            if nbrs.len() >= params.min_pts {
                queue.extend(
                    nbrs.iter()
                        .copied()
                        .filter(|&q| matches!(labels[q], None | Some(NOISE))),
                );
            }
        }
    }
    Clustering::from_labels(
        labels
            .into_iter()
            .map(|l| l.expect("every point visited"))
            .collect(),
    )
}
