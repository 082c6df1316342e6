//! Wigner quasidistribution used as an independent check on tomograms.
//!
//! `W(u, omega) = 1/(2 pi) int q(u + tau/2) q*(u - tau/2) exp(-i omega tau) dtau`
//! with angular frequency `omega`, the same convention as the `exp(-i X u / nu)`
//! phase of the tomogram. Integrating `W` along the line
//! `mu u + nu omega = X` gives the tomogram `w(X, mu, nu)`.

use std::f64::consts::TAU;
use std::io::{self, BufWriter, Write};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::dft::scaled_dft_chirp_z;
use crate::grid::UniformGrid;
use crate::signal::SampledSignal;
use crate::tomography::{Tomogram, TomographyParams};

/// `W` sampled on `u_grid x freq_grid`, row-major in `u`.
#[derive(Debug, Clone)]
pub struct WignerMap {
    u_grid: UniformGrid,
    freq_grid: UniformGrid,
    values: Vec<f64>,
    /// Largest imaginary part discarded from the defining sum.
    pub max_imag_residue: f64,
}

impl WignerMap {
    pub fn u_grid(&self) -> &UniformGrid {
        &self.u_grid
    }

    pub fn freq_grid(&self) -> &UniformGrid {
        &self.freq_grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    #[inline]
    pub fn get(&self, i: usize, k: usize) -> f64 {
        self.values[i * self.freq_grid.count() + k]
    }

    /// `int int W du domega`.
    pub fn total(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.u_grid.step() * self.freq_grid.step()
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// `int W domega` at each `u`.
    pub fn time_marginal(&self) -> Vec<f64> {
        let dw = self.freq_grid.step();
        self.values
            .chunks(self.freq_grid.count())
            .map(|row| row.iter().sum::<f64>() * dw)
            .collect()
    }

    /// `int W du` at each `omega`.
    pub fn frequency_marginal(&self) -> Vec<f64> {
        let nf = self.freq_grid.count();
        let du = self.u_grid.step();
        (0..nf)
            .map(|k| {
                (0..self.u_grid.count())
                    .map(|i| self.get(i, k))
                    .sum::<f64>()
                    * du
            })
            .collect()
    }

    /// Bilinear interpolation, zero outside the sampled rectangle.
    pub fn interpolate(&self, u: f64, omega: f64) -> f64 {
        let fu = self.u_grid.index_of(u);
        let fw = self.freq_grid.index_of(omega);
        let (nu, nw) = (self.u_grid.count(), self.freq_grid.count());
        if !(fu >= 0.0 && fw >= 0.0 && fu <= (nu - 1) as f64 && fw <= (nw - 1) as f64) {
            return 0.0;
        }
        let i = (fu.floor() as usize).min(nu - 2);
        let k = (fw.floor() as usize).min(nw - 2);
        let (tu, tw) = (fu - i as f64, fw - k as f64);
        (1.0 - tu) * ((1.0 - tw) * self.get(i, k) + tw * self.get(i, k + 1))
            + tu * ((1.0 - tw) * self.get(i + 1, k) + tw * self.get(i + 1, k + 1))
    }

    /// `u,omega,value` text grid.
    pub fn write_grid_text<W: Write>(&self, out: W) -> io::Result<()> {
        let mut w = BufWriter::new(out);
        for (i, u) in self.u_grid.points().enumerate() {
            for (k, om) in self.freq_grid.points().enumerate() {
                writeln!(w, "{u:?},{om:?},{:?}", self.get(i, k))?;
            }
        }
        w.flush()
    }

    /// Plain (P2) graymap, frequency increasing upward, linear gray scale
    /// from the map minimum to its maximum.
    pub fn write_pgm<W: Write>(&self, out: W) -> io::Result<()> {
        let mut w = BufWriter::new(out);
        let (nu, nw) = (self.u_grid.count(), self.freq_grid.count());
        let lo = self.min_value();
        let hi = self
            .values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        let span = if hi > lo { hi - lo } else { 1.0 };
        writeln!(w, "P2\n{nu} {nw}\n255")?;
        for k in (0..nw).rev() {
            let row: Vec<String> = (0..nu)
                .map(|i| (((self.get(i, k) - lo) / span) * 255.0).round().to_string())
                .collect();
            writeln!(w, "{}", row.join(" "))?;
        }
        w.flush()
    }
}

/// Wigner map of `s` on its own `u` grid and the given frequency grid.
///
/// The lag integral runs over `tau = 2 k step` so that both `u +- tau/2`
/// stay on the sample grid, truncated where either leaves it.
pub fn wigner_map(s: &SampledSignal, freq_grid: UniformGrid) -> WignerMap {
    let grid = *s.grid();
    let n = grid.count();
    let h = grid.step();
    let q = s.values();
    let nf = freq_grid.count();
    let rows: Vec<(Vec<f64>, f64)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let reach = i.min(n - 1 - i);
            let weight = 2.0 * h / TAU;
            let sums = if reach == 0 {
                vec![q[i] * q[i].conj(); nf]
            } else {
                let lags: Vec<Complex64> = (0..=2 * reach)
                    .map(|m| {
                        let k = m as isize - reach as isize;
                        q[(i as isize + k) as usize] * q[(i as isize - k) as usize].conj()
                    })
                    .collect();
                let tau = UniformGrid::new(-2.0 * reach as f64 * h, 2.0 * h, 2 * reach + 1)
                    .expect("valid lag grid");
                scaled_dft_chirp_z(&lags, &tau, &freq_grid, 1.0)
            };
            let imag = sums.iter().map(|z| z.im.abs()).fold(0.0, f64::max) * weight;
            (sums.iter().map(|z| z.re * weight).collect(), imag)
        })
        .collect();
    let max_imag_residue = rows.iter().map(|r| r.1).fold(0.0, f64::max);
    WignerMap {
        u_grid: grid,
        freq_grid,
        values: rows.into_iter().flat_map(|r| r.0).collect(),
        max_imag_residue,
    }
}

/// Integrates `W` over the line `mu u + nu omega = X` for every `X`.
///
/// Points along the line are spaced `min(du, domega) / 2` apart and `W` is
/// interpolated bilinearly; the `1 / r` factor converts arclength to the
/// density in `X`, so the slice carries the same total mass as the map.
pub fn radon_slice(wm: &WignerMap, p: TomographyParams, x_grid: UniformGrid) -> Tomogram {
    let (mu, nu) = (p.mu(), p.nu());
    let r = p.radius();
    let dir = (-nu / r, mu / r);
    let ds_max = 0.5 * wm.u_grid.step().min(wm.freq_grid.step());
    let u_box = (wm.u_grid.start(), wm.u_grid.end());
    let w_box = (wm.freq_grid.start(), wm.freq_grid.end());
    let values = (0..x_grid.count())
        .into_par_iter()
        .map(|i| {
            let x = x_grid.point(i);
            let foot = (x * mu / (r * r), x * nu / (r * r));
            let Some((lo, hi)) = clip(foot.0, dir.0, u_box)
                .and_then(|a| clip(foot.1, dir.1, w_box).map(|b| (a.0.max(b.0), a.1.min(b.1))))
            else {
                return 0.0;
            };
            if hi <= lo {
                return 0.0;
            }
            let steps = ((hi - lo) / ds_max).ceil().max(1.0) as usize;
            let ds = (hi - lo) / steps as f64;
            (0..steps)
                .map(|k| {
                    let s = lo + (k as f64 + 0.5) * ds;
                    wm.interpolate(foot.0 + s * dir.0, foot.1 + s * dir.1)
                })
                .sum::<f64>()
                * ds
                / r
        })
        .collect();
    Tomogram::new(p, x_grid, values)
}

/// Parameter interval on which `p + s d` stays inside `[lo, hi]`.
fn clip(p: f64, d: f64, (lo, hi): (f64, f64)) -> Option<(f64, f64)> {
    if d.abs() < 1e-15 {
        return (p >= lo && p <= hi).then_some((f64::NEG_INFINITY, f64::INFINITY));
    }
    let (a, b) = ((lo - p) / d, (hi - p) / d);
    Some((a.min(b), a.max(b)))
}
