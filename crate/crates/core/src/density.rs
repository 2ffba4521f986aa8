//! Core distances, mutual reachability, the minimum spanning tree over it and
//! density-connectivity (minimax path) distance queries.
//!
//! Nothing here materializes an `n x n` matrix except the explicit
//! [`pairwise_euclidean`] and [`mutual_reachability`] helpers, which exist for
//! small inputs and tests. The scoring pipeline streams distance rows instead,
//! keeping memory at `O(n * m)`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numeric::exact_sum;
use crate::points::PointSet;

/// Whether a point counts as its own first neighbor when locating the
/// `mu`-th nearest neighbor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NeighborConvention {
    /// `mu = 1` is the nearest *other* point. A core distance is 0 exactly
    /// when the point has at least `mu` duplicates.
    #[default]
    ExcludeSelf,
    /// The point itself is its first neighbor, so `mu = 1` gives 0 everywhere
    /// and `mu` may go up to `n`.
    IncludeSelf,
}

impl NeighborConvention {
    /// Largest admissible `mu` for `n` points.
    pub fn max_mu(self, n: usize) -> usize {
        match self {
            NeighborConvention::ExcludeSelf => n.saturating_sub(1),
            NeighborConvention::IncludeSelf => n,
        }
    }

    pub fn validate(self, mu: usize, n: usize) -> Result<()> {
        let max = self.max_mu(n);
        if mu == 0 || mu > max {
            return Err(Error::InvalidMu { mu, max, n });
        }
        Ok(())
    }
}

/// Dense symmetric matrix, used only by the small-input helpers.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }
}

/// Full Euclidean distance matrix.
pub fn pairwise_euclidean(ps: &PointSet) -> DistanceMatrix {
    let n = ps.len();
    let mut data = vec![0.0; n * n];
    data.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
        for (j, out) in row.iter_mut().enumerate() {
            if i != j {
                *out = ps.distance(i, j);
            }
        }
    });
    DistanceMatrix { n, data }
}

/// Per-point core distances for a fixed `mu`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoreDistances {
    kappa: Vec<f64>,
    mu: usize,
    convention: NeighborConvention,
}

impl CoreDistances {
    pub fn kappa(&self) -> &[f64] {
        &self.kappa
    }

    #[inline]
    pub fn get(&self, i: usize) -> f64 {
        self.kappa[i]
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn convention(&self) -> NeighborConvention {
        self.convention
    }

    pub fn len(&self) -> usize {
        self.kappa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kappa.is_empty()
    }
}

/// Distance from every point to its `mu`-th nearest other point.
pub fn core_distances(ps: &PointSet, mu: usize) -> Result<CoreDistances> {
    core_distances_with(ps, mu, NeighborConvention::ExcludeSelf)
}

pub fn core_distances_with(
    ps: &PointSet,
    mu: usize,
    convention: NeighborConvention,
) -> Result<CoreDistances> {
    let n = ps.len();
    convention.validate(mu, n)?;
    // Rank of the wanted neighbor among the n - 1 other points (0-based).
    let rank = match convention {
        NeighborConvention::ExcludeSelf => Some(mu - 1),
        NeighborConvention::IncludeSelf => mu.checked_sub(2),
    };
    let kappa = match rank {
        None => vec![0.0; n],
        Some(rank) => (0..n)
            .into_par_iter()
            .map_init(
                || Vec::with_capacity(n.saturating_sub(1)),
                |buf: &mut Vec<f64>, i| {
                    buf.clear();
                    buf.extend((0..n).filter(|&j| j != i).map(|j| ps.distance(i, j)));
                    let (_, kth, _) = buf.select_nth_unstable_by(rank, f64::total_cmp);
                    *kth
                },
            )
            .collect(),
    };
    Ok(CoreDistances {
        kappa,
        mu,
        convention,
    })
}

fn check_sizes(ps: &PointSet, cd: &CoreDistances) -> Result<()> {
    if ps.len() != cd.len() {
        return Err(Error::LengthMismatch {
            what: "core distances",
            expected: ps.len(),
            found: cd.len(),
        });
    }
    Ok(())
}

/// `max(kappa[i], kappa[j], d(i, j))` for `i != j`, 0 on the diagonal.
#[inline]
pub fn mutual_reachability_distance(ps: &PointSet, cd: &CoreDistances, i: usize, j: usize) -> f64 {
    if i == j {
        return 0.0;
    }
    cd.get(i).max(cd.get(j)).max(ps.distance(i, j))
}

/// Full mutual reachability matrix.
pub fn mutual_reachability(ps: &PointSet, cd: &CoreDistances) -> Result<DistanceMatrix> {
    check_sizes(ps, cd)?;
    let n = ps.len();
    let mut data = vec![0.0; n * n];
    data.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
        for (j, out) in row.iter_mut().enumerate() {
            *out = mutual_reachability_distance(ps, cd, i, j);
        }
    });
    Ok(DistanceMatrix { n, data })
}

/// An undirected tree edge with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MstEdge {
    pub a: usize,
    pub b: usize,
    pub weight: f64,
}

impl MstEdge {
    fn new(u: usize, v: usize, weight: f64) -> Self {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        Self { a, b, weight }
    }
}

/// Strict total order on candidate edges: weight, then the sorted endpoint pair.
#[inline]
fn edge_less(w1: f64, p1: (usize, usize), w2: f64, p2: (usize, usize)) -> bool {
    match w1.total_cmp(&w2) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => p1 < p2,
    }
}

#[inline]
fn sorted_pair(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Minimum spanning tree of the complete mutual reachability graph.
#[derive(Debug, Clone, PartialEq)]
pub struct MrdMst {
    n: usize,
    edges: Vec<MstEdge>,
}

impl MrdMst {
    pub fn node_count(&self) -> usize {
        self.n
    }

    /// Tree edges in ascending (weight, a, b) order.
    pub fn edges(&self) -> &[MstEdge] {
        &self.edges
    }

    pub fn total_weight(&self) -> f64 {
        exact_sum(self.edges.iter().map(|e| e.weight))
    }
}

/// Builds the MST over mutual reachability distances.
///
/// Uses Prim's algorithm on the implicit complete graph (`O(n^2)` time,
/// `O(n)` memory). Candidate edges are compared under the strict total order
/// (weight, sorted endpoint pair), under which the MST is unique; the result
/// is therefore identical to Kruskal's algorithm run over the same order.
pub fn build_mst(ps: &PointSet, cd: &CoreDistances) -> Result<MrdMst> {
    check_sizes(ps, cd)?;
    let n = ps.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    if n > 1 {
        let mut in_tree = vec![false; n];
        let mut best_w = vec![f64::INFINITY; n];
        let mut best_from = vec![usize::MAX; n];
        let mut current = 0usize;
        in_tree[0] = true;
        for _ in 1..n {
            let mut next = usize::MAX;
            for v in 0..n {
                if in_tree[v] {
                    continue;
                }
                let w = mutual_reachability_distance(ps, cd, current, v);
                if best_from[v] == usize::MAX
                    || edge_less(
                        w,
                        sorted_pair(current, v),
                        best_w[v],
                        sorted_pair(best_from[v], v),
                    )
                {
                    best_w[v] = w;
                    best_from[v] = current;
                }
                if next == usize::MAX
                    || edge_less(
                        best_w[v],
                        sorted_pair(best_from[v], v),
                        best_w[next],
                        sorted_pair(best_from[next], next),
                    )
                {
                    next = v;
                }
            }
            in_tree[next] = true;
            edges.push(MstEdge::new(best_from[next], next, best_w[next]));
            current = next;
        }
        edges.sort_by(|x, y| {
            x.weight
                .total_cmp(&y.weight)
                .then((x.a, x.b).cmp(&(y.a, y.b)))
        });
    }
    Ok(MrdMst { n, edges })
}

/// Reusable traversal stack for [`DcDistIndex`] queries.
#[derive(Debug, Default)]
pub struct DcScratch {
    stack: Vec<(u32, u32)>,
}

/// Answers minimax-path (dc-dist) queries on a spanning tree.
#[derive(Debug, Clone)]
pub struct DcDistIndex {
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
    weights: Vec<f64>,
}

const NO_PARENT: u32 = u32::MAX;

impl DcDistIndex {
    pub fn new(mst: &MrdMst) -> Self {
        let n = mst.n;
        let mut degree = vec![0usize; n + 1];
        for e in &mst.edges {
            degree[e.a + 1] += 1;
            degree[e.b + 1] += 1;
        }
        for i in 0..n {
            degree[i + 1] += degree[i];
        }
        let offsets = degree;
        let mut fill = offsets.clone();
        let mut neighbors = vec![0u32; 2 * mst.edges.len()];
        let mut weights = vec![0.0; 2 * mst.edges.len()];
        for e in &mst.edges {
            for (u, v) in [(e.a, e.b), (e.b, e.a)] {
                neighbors[fill[u]] = v as u32;
                weights[fill[u]] = e.weight;
                fill[u] += 1;
            }
        }
        Self {
            offsets,
            neighbors,
            weights,
        }
    }

    pub fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn check(&self, i: usize) -> Result<()> {
        if i >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.len(),
            });
        }
        Ok(())
    }

    /// Largest edge weight on the tree path between `i` and `j`; 0 when `i == j`.
    pub fn dc_dist(&self, i: usize, j: usize) -> Result<f64> {
        self.check(i)?;
        self.check(j)?;
        if i == j {
            return Ok(0.0);
        }
        let mut running = vec![0.0; self.len()];
        let mut stack = vec![(i as u32, NO_PARENT)];
        while let Some((u, parent)) = stack.pop() {
            let u = u as usize;
            if u == j {
                return Ok(running[u]);
            }
            for k in self.offsets[u]..self.offsets[u + 1] {
                let v = self.neighbors[k];
                if v != parent {
                    running[v as usize] = running[u].max(self.weights[k]);
                    stack.push((v, u as u32));
                }
            }
        }
        Err(Error::Contract(format!(
            "points {i} and {j} are not connected by the tree"
        )))
    }

    /// Writes the dc-dist from `i` to every point into `out` with one tree traversal.
    pub fn dc_row_into(&self, i: usize, scratch: &mut DcScratch, out: &mut [f64]) -> Result<()> {
        self.check(i)?;
        if out.len() != self.len() {
            return Err(Error::LengthMismatch {
                what: "dc-dist row buffer",
                expected: self.len(),
                found: out.len(),
            });
        }
        out[i] = 0.0;
        let stack = &mut scratch.stack;
        stack.clear();
        stack.push((i as u32, NO_PARENT));
        while let Some((u, parent)) = stack.pop() {
            let u = u as usize;
            let base = out[u];
            for k in self.offsets[u]..self.offsets[u + 1] {
                let v = self.neighbors[k];
                if v != parent {
                    out[v as usize] = base.max(self.weights[k]);
                    stack.push((v, u as u32));
                }
            }
        }
        Ok(())
    }

    pub fn dc_rows_from(&self, i: usize) -> Result<Vec<f64>> {
        let mut out = vec![0.0; self.len()];
        self.dc_row_into(i, &mut DcScratch::default(), &mut out)?;
        Ok(out)
    }
}

/// Core distances, the mutual reachability MST and its dc-dist index for one dataset.
#[derive(Debug, Clone)]
pub struct DensityGraph {
    core: CoreDistances,
    mst: MrdMst,
    index: DcDistIndex,
}

impl DensityGraph {
    pub fn build(ps: &PointSet, mu: usize, convention: NeighborConvention) -> Result<Self> {
        let core = core_distances_with(ps, mu, convention)?;
        let mst = build_mst(ps, &core)?;
        let index = DcDistIndex::new(&mst);
        Ok(Self { core, mst, index })
    }

    pub fn core(&self) -> &CoreDistances {
        &self.core
    }

    pub fn mst(&self) -> &MrdMst {
        &self.mst
    }

    pub fn index(&self) -> &DcDistIndex {
        &self.index
    }
}
