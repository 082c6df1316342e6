use std::io::Write;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::UniformGrid;
use crate::signal::SampledSignal;

/// Dense integral-operator kernel sampled on `row_grid x col_grid`.
///
/// Applying it to a signal on `col_grid` is the Riemann sum
/// `out_i = sum_j entries[i][j] * q_j * quadrature_weight`.
#[derive(Debug, Clone)]
pub struct TransformKernel {
    row_grid: UniformGrid,
    col_grid: UniformGrid,
    entries: Vec<Complex64>,
    quadrature_weight: f64,
}

impl TransformKernel {
    /// Fills the matrix row by row in parallel from `entry(x_i, y_j)`.
    pub fn from_fn<F>(row_grid: UniformGrid, col_grid: UniformGrid, entry: F) -> Result<Self>
    where
        F: Fn(f64, f64) -> Complex64 + Sync,
    {
        let cols = col_grid.count();
        let mut entries = vec![Complex64::new(0.0, 0.0); row_grid.count() * cols];
        entries
            .par_chunks_mut(cols)
            .enumerate()
            .for_each(|(i, row)| {
                let x = row_grid.point(i);
                for (j, e) in row.iter_mut().enumerate() {
                    *e = entry(x, col_grid.point(j));
                }
            });
        if let Some(index) = entries
            .iter()
            .position(|z| !(z.re.is_finite() && z.im.is_finite()))
        {
            return Err(Error::NonFinite { index });
        }
        Ok(Self {
            row_grid,
            col_grid,
            entries,
            quadrature_weight: col_grid.step(),
        })
    }

    /// Wraps a row-major entry vector; the quadrature weight is `col_grid.step()`.
    pub fn from_parts(
        row_grid: UniformGrid,
        col_grid: UniformGrid,
        entries: Vec<Complex64>,
    ) -> Result<Self> {
        if entries.len() != row_grid.count() * col_grid.count() {
            return Err(Error::LengthMismatch {
                values: entries.len(),
                grid: row_grid.count() * col_grid.count(),
            });
        }
        if let Some(index) = entries
            .iter()
            .position(|z| !(z.re.is_finite() && z.im.is_finite()))
        {
            return Err(Error::NonFinite { index });
        }
        Ok(Self {
            row_grid,
            col_grid,
            entries,
            quadrature_weight: col_grid.step(),
        })
    }

    pub fn row_grid(&self) -> &UniformGrid {
        &self.row_grid
    }

    pub fn col_grid(&self) -> &UniformGrid {
        &self.col_grid
    }

    pub fn quadrature_weight(&self) -> f64 {
        self.quadrature_weight
    }

    pub fn rows(&self) -> usize {
        self.row_grid.count()
    }

    pub fn cols(&self) -> usize {
        self.col_grid.count()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.cols() + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Multiplies every entry by `factor`.
    pub fn scaled(mut self, factor: Complex64) -> Self {
        self.entries.iter_mut().for_each(|e| *e *= factor);
        self
    }

    pub fn apply(&self, s: &SampledSignal) -> Result<SampledSignal> {
        if *s.grid() != self.col_grid {
            return Err(Error::GridMismatch);
        }
        let w = self.quadrature_weight;
        let values = self
            .entries
            .par_chunks(self.cols())
            .map(|row| {
                row.iter()
                    .zip(s.values())
                    .map(|(k, q)| k * q)
                    .sum::<Complex64>()
                    * w
            })
            .collect();
        SampledSignal::new(self.row_grid, values)
    }

    /// Entrywise `max |self - other|`.
    pub fn max_abs_diff(&self, other: &TransformKernel) -> Result<f64> {
        if self.row_grid != other.row_grid || self.col_grid != other.col_grid {
            return Err(Error::GridMismatch);
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Debug dump, one `row,col,re,im` line per entry.
    pub fn write_dump<W: Write>(&self, out: W) -> std::io::Result<()> {
        crate::io::write_matrix_dump(out, self.rows(), self.cols(), &self.entries)
    }
}
