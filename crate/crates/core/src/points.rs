use crate::error::{Error, Result};

/// An `n x m` matrix of finite coordinates, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    data: Vec<f64>,
    n: usize,
    m: usize,
}

impl PointSet {
    /// Builds a point set from a flat row-major buffer.
    pub fn new(data: Vec<f64>, n: usize, m: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyPointSet);
        }
        if m == 0 {
            return Err(Error::ZeroDimension);
        }
        if data.len() != n * m {
            return Err(Error::LengthMismatch {
                what: "coordinate buffer",
                expected: n * m,
                found: data.len(),
            });
        }
        if let Some(pos) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                row: pos / m,
                column: pos % m,
            });
        }
        Ok(Self { data, n, m })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let first = rows.first().ok_or(Error::EmptyPointSet)?;
        let m = first.as_ref().len();
        let mut data = Vec::with_capacity(rows.len() * m);
        for (row, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != m {
                return Err(Error::RaggedRow {
                    row,
                    expected: m,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Self::new(data, rows.len(), m)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn point(&self, i: usize) -> &[f64] {
        &self.data[i * self.m..(i + 1) * self.m]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.data.chunks_exact(self.m)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Euclidean distance between two stored points.
    ///
    /// Coordinates are accumulated in column order, so `distance(i, j)` and
    /// `distance(j, i)` are bitwise equal.
    #[inline]
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        euclidean(self.point(i), self.point(j))
    }

    /// Returns the points reordered so that row `k` of the result is row `order[k]` of `self`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        if order.len() != self.n {
            return Err(Error::LengthMismatch {
                what: "permutation",
                expected: self.n,
                found: order.len(),
            });
        }
        let mut data = Vec::with_capacity(self.data.len());
        for &i in order {
            if i >= self.n {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    n: self.n,
                });
            }
            data.extend_from_slice(self.point(i));
        }
        Self::new(data, self.n, self.m)
    }

    /// Applies `f` to every coordinate row, producing a new point set of dimension `m_out`.
    pub fn map_rows<F>(&self, m_out: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(&[f64], &mut Vec<f64>),
    {
        let mut data = Vec::with_capacity(self.n * m_out);
        for row in self.rows() {
            f(row, &mut data);
        }
        Self::new(data, self.n, m_out)
    }
}

#[inline]
pub(crate) fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    let mut acc = 0.0;
    for (x, y) in a.iter().zip(b) {
        let d = x - y;
        acc += d * d;
    }
    acc.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            PointSet::new(vec![], 0, 2),
            Err(Error::EmptyPointSet)
        ));
        assert!(matches!(
            PointSet::new(vec![1.0], 1, 0),
            Err(Error::ZeroDimension)
        ));
        assert!(matches!(
            PointSet::new(vec![0.0, f64::NAN, 1.0, 2.0], 2, 2),
            Err(Error::NonFinite { row: 0, column: 1 })
        ));
        assert!(matches!(
            PointSet::from_rows(&[vec![0.0, 1.0], vec![2.0]]),
            Err(Error::RaggedRow { row: 1, .. })
        ));
    }

    #[test]
    fn permuted_reorders_rows() {
        let ps = PointSet::from_rows(&[[0.0], [1.0], [2.0]]).unwrap();
        let p = ps.permuted(&[2, 0, 1]).unwrap();
        assert_eq!(p.as_slice(), &[2.0, 0.0, 1.0]);
    }
}
