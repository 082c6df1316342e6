//! Symplectic tomograms of analytic signals and signal recovery from them.
//!
//! The tomogram of `q` at real parameters `(mu, nu)` is
//!
//! ```text
//! w(X, mu, nu) = 1 / (2 pi |nu|) * | int q(u) exp(i mu u^2 / (2 nu) - i X u / nu) du |^2
//! ```
//!
//! the probability density of `X = mu u + nu omega` (angular frequency
//! `omega`). Every tomogram of a unit-norm signal integrates to one, and a
//! constant phase on `q` leaves it unchanged, so recovery from tomograms is
//! unique only up to that phase.
//!
//! Writing `(mu, nu) = r (cos phi, sin phi)`, the tomogram is the squared
//! modulus of a fractional Fourier transform of order `2 phi / pi`:
//!
//! ```text
//! w(X, mu, nu) = (1 / r) (2 pi)^{-1/2} |(F^a p)(X / (r sqrt(2 pi)))|^2,
//! p(y) = (2 pi)^{1/4} q(sqrt(2 pi) y)
//! ```
//!
//! which also gives the `nu = 0` limit `w(X, mu, 0) = |q(X / mu)|^2 / |mu|`.

use std::f64::consts::{PI, TAU};
use std::io::Write;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::dft::cis;
use crate::error::{Error, Result};
use crate::frft::{apply_frft_to_grid, reduce_order, FrftMethod};
use crate::grid::UniformGrid;
use crate::signal::SampledSignal;

/// Smallest `|nu|` accepted by the direct formula.
pub const MIN_DIRECT_NU: f64 = 1e-6;
/// Values in `[-NEGATIVITY_FLOOR, 0)` are rounding noise and clamp to zero.
pub const NEGATIVITY_FLOOR: f64 = 1e-12;
/// Scale `c` on the FrFT argument `X / (r sqrt(2 pi) c)` in the bridge.
pub const BRIDGE_ARGUMENT_SCALE: f64 = 1.0;
/// Amplitude `c'` multiplying `|F^a p|^2 / r` in the bridge, `(2 pi)^{-1/2}`.
pub const BRIDGE_AMPLITUDE_SCALE: f64 = 0.398_942_280_401_432_7;
/// Decay of the `mu` integrand at the grid edges above which reconstruction warns.
pub const MU_EDGE_WARNING: f64 = 1e-3;
/// Second-to-first singular value ratio above which a correlation matrix is
/// reported as not rank one.
pub const RANK_ONE_WARNING: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TomographyParams {
    mu: f64,
    nu: f64,
}

impl TomographyParams {
    pub fn new(mu: f64, nu: f64) -> Result<Self> {
        if !mu.is_finite() {
            return Err(Error::NonFiniteParameter("mu"));
        }
        if !nu.is_finite() {
            return Err(Error::NonFiniteParameter("nu"));
        }
        if mu == 0.0 && nu == 0.0 {
            return Err(Error::ZeroParameters);
        }
        Ok(Self { mu, nu })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn radius(&self) -> f64 {
        self.mu.hypot(self.nu)
    }

    /// `atan2(nu, mu)` in `(-pi, pi]`.
    pub fn angle(&self) -> f64 {
        self.nu.atan2(self.mu)
    }
}

/// Samples of `w(X, mu, nu)` on a grid of `X`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tomogram {
    params: TomographyParams,
    x_grid: UniformGrid,
    values: Vec<f64>,
}

impl Tomogram {
    /// Panics if `values.len() != x_grid.count()`.
    pub fn new(params: TomographyParams, x_grid: UniformGrid, mut values: Vec<f64>) -> Self {
        assert_eq!(values.len(), x_grid.count(), "tomogram length mismatch");
        for v in values.iter_mut() {
            if *v < 0.0 && *v >= -NEGATIVITY_FLOOR {
                *v = 0.0;
            }
        }
        Self {
            params,
            x_grid,
            values,
        }
    }

    pub fn params(&self) -> &TomographyParams {
        &self.params
    }

    pub fn x_grid(&self) -> &UniformGrid {
        &self.x_grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `sum w * dX`.
    pub fn mass(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.x_grid.step()
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_value(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Tomogram) -> Result<f64> {
        if self.x_grid != other.x_grid {
            return Err(Error::GridMismatch);
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }

    /// `sum w(X) exp(i X) dX`, the characteristic function at unit argument.
    fn characteristic(&self) -> Complex64 {
        self.x_grid
            .points()
            .zip(&self.values)
            .map(|(x, w)| cis(x) * *w)
            .sum::<Complex64>()
            * self.x_grid.step()
    }
}

/// Direct quadrature of the tomogram integral at every `X` in `x_grid`.
pub fn tomogram(s: &SampledSignal, p: TomographyParams, x_grid: UniformGrid) -> Result<Tomogram> {
    let nu = p.nu;
    if nu.abs() < MIN_DIRECT_NU {
        return Err(Error::SmallNu(nu));
    }
    let grid = s.grid();
    let h = grid.step();
    let chirped: Vec<(f64, Complex64)> = grid
        .points()
        .zip(s.values())
        .map(|(u, q)| (u, q * cis(p.mu * u * u / (2.0 * nu))))
        .collect();
    let pref = h * h / (TAU * nu.abs());
    let values = (0..x_grid.count())
        .into_par_iter()
        .map(|i| {
            let x = x_grid.point(i) / nu;
            let amp: Complex64 = chirped.iter().map(|(u, c)| c * cis(-x * u)).sum();
            amp.norm_sqr() * pref
        })
        .collect();
    Ok(Tomogram::new(p, x_grid, values))
}

/// Tomogram through the fractional Fourier transform, valid for every
/// `(mu, nu) != (0, 0)` including `nu = 0`.
pub fn tomogram_via_frft(
    s: &SampledSignal,
    p: TomographyParams,
    x_grid: UniformGrid,
) -> Result<Tomogram> {
    tomogram_via_frft_with(s, p, x_grid, FrftMethod::Quadrature)
}

pub fn tomogram_via_frft_with(
    s: &SampledSignal,
    p: TomographyParams,
    x_grid: UniformGrid,
    method: FrftMethod,
) -> Result<Tomogram> {
    let r = p.radius();
    let order = reduce_order(2.0 * p.angle() / PI)?;
    let root = TAU.sqrt();
    let rescaled = SampledSignal::new(
        s.grid().scaled(1.0 / root)?,
        s.values().iter().map(|q| q * root.sqrt()).collect(),
    )?;
    let v_grid = x_grid.scaled(1.0 / (r * root * BRIDGE_ARGUMENT_SCALE))?;
    let f = apply_frft_to_grid(&rescaled, order, v_grid, method)?;
    let values = f
        .values()
        .iter()
        .map(|z| z.norm_sqr() * BRIDGE_AMPLITUDE_SCALE / r)
        .collect();
    Ok(Tomogram::new(p, x_grid, values))
}

/// Sampled `q(u) q*(u')` with `entries[i][j]` at `(u_i, u_j)`.
#[derive(Debug, Clone)]
pub struct CorrelationMatrix {
    grid: UniformGrid,
    entries: Vec<Complex64>,
    /// Largest `|mu integrand|` at the `mu` grid edges relative to its peak.
    pub mu_edge_ratio: f64,
}

impl CorrelationMatrix {
    pub fn new(grid: UniformGrid, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != grid.count() * grid.count() {
            return Err(Error::LengthMismatch {
                values: entries.len(),
                grid: grid.count() * grid.count(),
            });
        }
        Ok(Self {
            grid,
            entries,
            mu_edge_ratio: 0.0,
        })
    }

    /// Exact `q q^H` of a known signal.
    pub fn outer_product(q: &SampledSignal) -> Self {
        let v = q.values();
        let entries = v
            .iter()
            .flat_map(|a| v.iter().map(move |b| a * b.conj()))
            .collect();
        Self {
            grid: *q.grid(),
            entries,
            mu_edge_ratio: 0.0,
        }
    }

    pub fn grid(&self) -> &UniformGrid {
        &self.grid
    }

    pub fn len(&self) -> usize {
        self.grid.count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.len() + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        (0..self.len()).map(|i| self.get(i, i)).collect()
    }

    /// `max |C_ij - conj(C_ji)|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.len();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| (self.get(i, j) - self.get(j, i).conj()).norm())
            .fold(0.0, f64::max)
    }

    /// `trace * step`, which equals `||q||^2` for an exact correlation.
    pub fn trace_mass(&self) -> f64 {
        self.diagonal().iter().map(|z| z.re).sum::<f64>() * self.grid.step()
    }

    pub fn max_abs_diff(&self, other: &CorrelationMatrix) -> Result<f64> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn write_dump<W: Write>(&self, out: W) -> std::io::Result<()> {
        crate::io::write_matrix_dump(out, self.len(), self.len(), &self.entries)
    }
}

/// `mu` grid used when none is given: `[-20, 20]` in steps of 1/4.
pub fn default_mu_grid() -> UniformGrid {
    UniformGrid::spanning(-20.0, 20.0, 0.25).expect("valid grid")
}

/// Normalized `X / r` grid used when none is given: `[-25, 25]` in steps of 1/10.
pub fn default_x_grid() -> UniformGrid {
    UniformGrid::spanning(-25.0, 25.0, 0.1).expect("valid grid")
}

/// Recovers `q(u) q*(u')` on `grid` from tomograms through
///
/// ```text
/// q(u) q*(u') = 1/(2 pi) int int w(X, mu, u - u') exp(i (X - mu (u + u') / 2)) dX dmu
/// ```
///
/// `provider(x, mu, nu)` must return the tomogram on the `X` grid `x`. It is
/// called once per `mu` in `mu_grid` and per difference `nu = u - u'`.
/// `x_grid` is given in units of `r = sqrt(mu^2 + nu^2)`: the provider is
/// asked for `X` on `r * x_grid`, which keeps the sampling of every tomogram
/// proportional to its width. The single point `mu = nu = 0`, where the
/// tomogram is a delta function, contributes the common tomogram mass.
pub fn reconstruct_correlation<P>(
    provider: P,
    grid: UniformGrid,
    mu_grid: UniformGrid,
    x_grid: UniformGrid,
) -> Result<CorrelationMatrix>
where
    P: Fn(&UniformGrid, f64, f64) -> Result<Tomogram> + Sync,
{
    let n = grid.count() as isize;
    let h = grid.step();
    let n_mu = mu_grid.count();

    // characteristic[k + n - 1][m] = int w(X, mu_m, k h) exp(iX) dX
    let mut rows: Vec<(Vec<Option<Complex64>>, Vec<f64>)> = (-(n - 1)..n)
        .into_par_iter()
        .map(|k| {
            let nu = k as f64 * h;
            let mut chi = Vec::with_capacity(n_mu);
            let mut masses = Vec::new();
            for mu in mu_grid.points() {
                let r = mu.hypot(nu);
                if r == 0.0 {
                    chi.push(None);
                    continue;
                }
                let xg = x_grid.scaled(r)?;
                let t = provider(&xg, mu, nu)?;
                if t.x_grid() != &xg {
                    return Err(Error::GridMismatch);
                }
                masses.push(t.mass());
                chi.push(Some(t.characteristic()));
            }
            Ok((chi, masses))
        })
        .collect::<Result<_>>()?;

    let mass = {
        let all: Vec<f64> = rows.iter().flat_map(|(_, m)| m.iter().copied()).collect();
        all.iter().sum::<f64>() / all.len().max(1) as f64
    };
    let chi: Vec<Vec<Complex64>> = rows
        .drain(..)
        .map(|(c, _)| {
            c.into_iter()
                .map(|z| z.unwrap_or(Complex64::new(mass, 0.0)))
                .collect()
        })
        .collect();

    let peak = chi.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
    let edge = chi
        .iter()
        .map(|row| row[0].norm().max(row[n_mu - 1].norm()))
        .fold(0.0, f64::max);
    let mu_edge_ratio = if peak > 0.0 { edge / peak } else { 0.0 };
    if mu_edge_ratio > MU_EDGE_WARNING {
        log::warn!(
            "mu integrand has only decayed to {mu_edge_ratio:.2e} of its peak at the grid edges; widen the mu grid"
        );
    }

    let dmu = mu_grid.step();
    let nn = grid.count();
    let mut entries = vec![Complex64::new(0.0, 0.0); nn * nn];
    entries.par_chunks_mut(nn).enumerate().for_each(|(i, row)| {
        for (j, e) in row.iter_mut().enumerate() {
            let center = 0.5 * (grid.point(i) + grid.point(j));
            let k = (i as isize - j as isize + n - 1) as usize;
            let sum: Complex64 = chi[k]
                .iter()
                .zip(mu_grid.points())
                .map(|(c, mu)| c * cis(-mu * center))
                .sum();
            *e = sum * dmu / TAU;
        }
    });
    let mut corr = CorrelationMatrix::new(grid, entries)?;
    corr.mu_edge_ratio = mu_edge_ratio;
    Ok(corr)
}

/// Below this value the largest diagonal entry counts as a zero signal.
pub const MIN_DIAGONAL: f64 = 1e-14;

/// Reads the signal off the column through the largest diagonal entry,
/// fixing the global phase so the sample at that point is real positive.
pub fn reconstruct_signal(corr: &CorrelationMatrix) -> Result<SampledSignal> {
    let n = corr.len();
    let (j_star, d) =
        (0..n)
            .map(|i| (i, corr.get(i, i).re))
            .fold(
                (0, f64::NEG_INFINITY),
                |best, c| if c.1 > best.1 { c } else { best },
            );
    if !(d > MIN_DIAGONAL) {
        return Err(Error::ZeroSignal);
    }
    let ratio = rank_one_deviation(corr);
    if ratio > RANK_ONE_WARNING {
        log::warn!("correlation matrix is not rank one: sigma2/sigma1 = {ratio:.3e}");
    }
    let scale = 1.0 / d.sqrt();
    let mut values: Vec<Complex64> = (0..n).map(|i| corr.get(i, j_star) * scale).collect();
    values[j_star] = Complex64::new(d.sqrt(), 0.0);
    SampledSignal::new(corr.grid, values)
}

/// Ratio of the second to the first singular value.
pub fn rank_one_deviation(corr: &CorrelationMatrix) -> f64 {
    let n = corr.len();
    let m = DMatrix::from_row_slice(n, n, &corr.entries);
    let mut sv: Vec<f64> = m.singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    if sv[0] == 0.0 {
        return 0.0;
    }
    sv.get(1).copied().unwrap_or(0.0) / sv[0]
}
