//! Sampled analytic signals and the quadrature primitives shared by every
//! transform in the crate.
//!
//! All integrals are plain Riemann sums with uniform weight `step`. Test
//! signals decay to numerical zero at the grid edges, so end corrections
//! would change nothing, and the same lattice is what the FFT paths see.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::UniformGrid;

/// Default tolerance used by [`NormStatus`].
pub const NORM_TOLERANCE: f64 = 1e-9;

/// Complex samples `q(u_i)` on a uniform grid. Immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    grid: UniformGrid,
    values: Vec<Complex64>,
}

impl SampledSignal {
    pub fn new(grid: UniformGrid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.count() {
            return Err(Error::LengthMismatch {
                values: values.len(),
                grid: grid.count(),
            });
        }
        if let Some(index) = values
            .iter()
            .position(|z| !(z.re.is_finite() && z.im.is_finite()))
        {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { grid, values })
    }

    /// Samples `f` at every grid point.
    pub fn from_fn(grid: UniformGrid, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        Self::new(grid, grid.points().map(f).collect())
    }

    pub fn zeros(grid: UniformGrid) -> Self {
        Self {
            grid,
            values: vec![Complex64::new(0.0, 0.0); grid.count()],
        }
    }

    #[inline]
    pub fn grid(&self) -> &UniformGrid {
        &self.grid
    }

    #[inline]
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn scale(&self, alpha: Complex64) -> Result<Self> {
        Self::new(self.grid, self.values.iter().map(|z| z * alpha).collect())
    }

    /// Returns `self / ||self||`.
    pub fn normalized(&self) -> Result<Self> {
        let n = l2_norm(self);
        if n == 0.0 {
            return Err(Error::ZeroSignal);
        }
        self.scale(Complex64::new(1.0 / n, 0.0))
    }

    /// Same sample values reinterpreted on another grid with the same count.
    pub fn with_grid(&self, grid: UniformGrid) -> Result<Self> {
        Self::new(grid, self.values.clone())
    }

    pub fn norm_status(&self) -> NormStatus {
        NormStatus::of(self, NORM_TOLERANCE)
    }

    /// Largest `|a_i - b_i|` over two signals on the same grid.
    pub fn max_abs_diff(&self, other: &SampledSignal) -> Result<f64> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Value at an arbitrary abscissa by linear interpolation, zero outside
    /// the sampled span.
    pub fn interpolate_or_zero(&self, x: f64) -> Complex64 {
        let f = self.grid.index_of(x);
        let last = (self.grid.count() - 1) as f64;
        if !(f >= -1e-9 && f <= last + 1e-9) {
            return Complex64::new(0.0, 0.0);
        }
        let f = f.clamp(0.0, last);
        let i = (f.floor() as usize).min(self.grid.count() - 2);
        let t = f - i as f64;
        self.values[i] * (1.0 - t) + self.values[i + 1] * t
    }
}

/// Result of a normalization check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormStatus {
    pub l2_norm: f64,
    pub is_normalized: bool,
}

impl NormStatus {
    pub fn of(s: &SampledSignal, tol: f64) -> Self {
        let l2 = l2_norm(s);
        Self {
            l2_norm: l2,
            is_normalized: (l2 - 1.0).abs() <= tol,
        }
    }
}

/// `sqrt(sum |q_i|^2 * step)`.
pub fn l2_norm(s: &SampledSignal) -> f64 {
    (s.values.iter().map(|z| z.norm_sqr()).sum::<f64>() * s.grid.step()).sqrt()
}

/// `sum conj(a_i) b_i * step`; conjugate-linear in `a`.
pub fn inner_product(a: &SampledSignal, b: &SampledSignal) -> Result<Complex64> {
    if a.grid != b.grid {
        return Err(Error::GridMismatch);
    }
    let sum: Complex64 = a
        .values
        .iter()
        .zip(&b.values)
        .map(|(x, y)| x.conj() * y)
        .sum();
    Ok(sum * a.grid.step())
}

/// `|<a, b>| / (||a|| ||b||)`, the overlap used to score reconstructions.
pub fn fidelity(a: &SampledSignal, b: &SampledSignal) -> Result<f64> {
    let denom = l2_norm(a) * l2_norm(b);
    if denom == 0.0 {
        return Err(Error::ZeroSignal);
    }
    Ok(inner_product(a, b)?.norm() / denom)
}

/// Interpolation scheme for [`resample`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Interpolation {
    /// Piecewise linear between neighbouring samples.
    #[default]
    Linear,
    /// Whittaker-Shannon sinc series over all source samples.
    BandLimited,
}

/// Resamples onto `target` with linear interpolation.
pub fn resample(s: &SampledSignal, target: UniformGrid) -> Result<SampledSignal> {
    resample_with(s, target, Interpolation::Linear)
}

pub fn resample_with(
    s: &SampledSignal,
    target: UniformGrid,
    scheme: Interpolation,
) -> Result<SampledSignal> {
    if target == s.grid {
        return Ok(s.clone());
    }
    if !s.grid.contains_span(&target) {
        return Err(Error::Extrapolation {
            lo: target.start(),
            hi: target.end(),
            src_lo: s.grid.start(),
            src_hi: s.grid.end(),
        });
    }
    let values = match scheme {
        Interpolation::Linear => target.points().map(|x| s.interpolate_or_zero(x)).collect(),
        Interpolation::BandLimited => target.points().map(|x| sinc_series(s, x)).collect(),
    };
    SampledSignal::new(target, values)
}

fn sinc_series(s: &SampledSignal, x: f64) -> Complex64 {
    let f = s.grid.index_of(x);
    if let Some(k) = s.grid.exact_index(x, 1e-12) {
        return s.values[k];
    }
    s.values
        .iter()
        .enumerate()
        .map(|(j, v)| {
            let t = std::f64::consts::PI * (f - j as f64);
            v * (t.sin() / t)
        })
        .sum()
}
