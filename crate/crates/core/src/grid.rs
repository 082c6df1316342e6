use crate::error::{Error, Result};

/// Uniformly spaced abscissa `start + i * step` for `0 <= i < count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformGrid {
    start: f64,
    step: f64,
    count: usize,
}

impl UniformGrid {
    pub fn new(start: f64, step: f64, count: usize) -> Result<Self> {
        if !start.is_finite() || !step.is_finite() {
            return Err(Error::InvalidGrid("start and step must be finite".into()));
        }
        if step <= 0.0 {
            return Err(Error::InvalidGrid(format!(
                "step must be positive, got {step}"
            )));
        }
        if count < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 points, got {count}"
            )));
        }
        Ok(Self { start, step, count })
    }

    /// `count` points covering `[lo, hi)` with spacing `(hi - lo) / count`.
    pub fn half_open(lo: f64, hi: f64, count: usize) -> Result<Self> {
        Self::new(lo, (hi - lo) / count as f64, count)
    }

    /// Grid from `lo` with spacing `step`, extending to the last point not beyond `hi`.
    pub fn spanning(lo: f64, hi: f64, step: f64) -> Result<Self> {
        if !(hi > lo) || !(step > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "bad span [{lo}, {hi}] step {step}"
            )));
        }
        let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
        Self::new(lo, step, count)
    }

    /// Grid of `count` points symmetric about zero, `-(count-1)/2 * step ..= (count-1)/2 * step`.
    pub fn centered(step: f64, count: usize) -> Result<Self> {
        Self::new(-0.5 * (count as f64 - 1.0) * step, step, count)
    }

    /// Default physics grid: `[-8, 8)` with step 1/64 (1024 points).
    pub fn default_physics() -> Self {
        Self {
            start: -8.0,
            step: 1.0 / 64.0,
            count: 1024,
        }
    }

    #[inline]
    pub fn start(&self) -> f64 {
        self.start
    }

    #[inline]
    pub fn step(&self) -> f64 {
        self.step
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.count
    }

    #[inline]
    pub fn point(&self, i: usize) -> f64 {
        self.start + i as f64 * self.step
    }

    pub fn end(&self) -> f64 {
        self.point(self.count - 1)
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.count).map(move |i| self.point(i))
    }

    /// Largest `|point|` on the grid.
    pub fn max_abs(&self) -> f64 {
        self.start.abs().max(self.end().abs())
    }

    /// The same index set with every point multiplied by `factor > 0`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(self.start * factor, self.step * factor, self.count)
    }

    /// Fractional index of `x`, i.e. `(x - start) / step`.
    pub fn index_of(&self, x: f64) -> f64 {
        (x - self.start) / self.step
    }

    /// Index of the grid point within `rel_tol * step` of `x`, if any.
    pub fn exact_index(&self, x: f64, rel_tol: f64) -> Option<usize> {
        let f = self.index_of(x);
        let k = f.round();
        if (f - k).abs() <= rel_tol && k >= 0.0 && (k as usize) < self.count {
            Some(k as usize)
        } else {
            None
        }
    }

    pub fn contains_span(&self, other: &UniformGrid) -> bool {
        let tol = 1e-9 * self.step;
        other.start >= self.start - tol && other.end() <= self.end() + tol
    }

    /// True when the point set is invariant under `u -> -u`.
    pub fn is_symmetric(&self) -> bool {
        (self.start + self.end()).abs() <= 1e-12 * self.step.max(self.max_abs())
    }
}
