//! Order-independent floating point helpers.
//!
//! Every sum that feeds a reported score goes through [`ExactSum`], which keeps
//! the running total as a list of non-overlapping partials (Shewchuk's
//! algorithm) and rounds once at the end. The result is the correctly rounded
//! value of the exact sum, so it does not depend on the order in which terms
//! were added. That is what makes scores bit-identical under point
//! permutations and across thread counts.

/// Exact accumulator for finite `f64` values.
#[derive(Debug, Clone, Default)]
pub struct ExactSum {
    partials: Vec<f64>,
}

impl ExactSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn clear(&mut self) {
        self.partials.clear();
    }

    pub fn add(&mut self, value: f64) {
        debug_assert!(value.is_finite());
        let mut x = value;
        let mut kept = 0;
        for idx in 0..self.partials.len() {
            let mut y = self.partials[idx];
            if x.abs() < y.abs() {
                std::mem::swap(&mut x, &mut y);
            }
            let hi = x + y;
            let lo = y - (hi - x);
            if lo != 0.0 {
                self.partials[kept] = lo;
                kept += 1;
            }
            x = hi;
        }
        self.partials.truncate(kept);
        self.partials.push(x);
    }

    /// Correctly rounded sum of everything added so far.
    pub fn value(&self) -> f64 {
        let partials = &self.partials;
        let Some(&top) = partials.last() else {
            return 0.0;
        };
        let mut n = partials.len() - 1;
        let mut hi = top;
        let mut lo = 0.0;
        while n > 0 {
            let x = hi;
            n -= 1;
            let y = partials[n];
            hi = x + y;
            let yr = hi - x;
            lo = y - yr;
            if lo != 0.0 {
                break;
            }
        }
        // Half-way case: the remaining partials decide the rounding direction.
        if n > 0 && ((lo < 0.0 && partials[n - 1] < 0.0) || (lo > 0.0 && partials[n - 1] > 0.0)) {
            let y = lo * 2.0;
            let x = hi + y;
            let yr = x - hi;
            if y == yr {
                hi = x;
            }
        }
        hi
    }
}

impl Extend<f64> for ExactSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for v in iter {
            self.add(v);
        }
    }
}

impl FromIterator<f64> for ExactSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = ExactSum::new();
        acc.extend(iter);
        acc
    }
}

/// Order-independent sum of a sequence.
pub fn exact_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    values.into_iter().collect::<ExactSum>().value()
}

/// Order-independent arithmetic mean; 0 for an empty slice.
pub fn exact_mean(values: &[f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    exact_sum(values.iter().copied()) / values.len() as f64
}

/// `(a - b) / max(a, b)` for non-negative operands, with `0 / 0` defined as 0.
///
/// Every silhouette-style term in the score has this shape.
pub fn relative_gap(a: f64, b: f64) -> f64 {
    let denom = a.max(b);
    if denom == 0.0 {
        0.0
    } else {
        ((a - b) / denom).clamp(-1.0, 1.0)
    }
}
