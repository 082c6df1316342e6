//! Harmonic-oscillator propagation and its identity with the fractional
//! Fourier transform.
//!
//! The Green function
//!
//! ```text
//! G(x, y, t) = sqrt(m w / (2 pi i hbar sin wt))
//!              * exp(i m w / (2 hbar) [(x^2 + y^2) cot wt - 2 x y / sin wt])
//! ```
//!
//! is evaluated independently at each `t` on the principal branch of the
//! square root, so it is periodic in `t` with period `2 pi / w` and the
//! Maslov sign picked up by the true evolution across `wt = pi` is not
//! tracked. Under `x = L u`, `L = sqrt(2 pi hbar / (m w))`, `wt = phi`,
//!
//! ```text
//! B_a(u, u') = exp(i phi / 2) * L * G(L u, L u', phi / w),   a = 2 phi / pi
//! ```
//!
//! where `L` is the Jacobian `dy = L du'`. Other potentials would slot in
//! as further kernels of the same shape; only the oscillator is provided.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::dft::cis;
use crate::error::{Error, Result};
use crate::frft::{apply_frft, reduce_order, FrftOrder, NEAR_DEGENERATE_SIN};
use crate::grid::UniformGrid;
use crate::kernel::TransformKernel;
use crate::signal::SampledSignal;

/// Smallest `|sin wt|` for which [`green_kernel`] is defined.
pub const MIN_KERNEL_SIN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorConfig {
    mass: f64,
    omega: f64,
    hbar: f64,
}

impl Default for OscillatorConfig {
    fn default() -> Self {
        Self {
            mass: 1.0,
            omega: 1.0,
            hbar: 1.0,
        }
    }
}

impl OscillatorConfig {
    pub fn new(mass: f64, omega: f64, hbar: f64) -> Result<Self> {
        for (name, v) in [("mass", mass), ("omega", omega), ("hbar", hbar)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(Self { mass, omega, hbar })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// `sqrt(2 pi hbar / (m w))`, the length mapping `u` to `x`.
    pub fn length_scale(&self) -> f64 {
        (TAU * self.hbar / (self.mass * self.omega)).sqrt()
    }

    /// Time at which propagation equals the FrFT of order `a`.
    pub fn time_for_order(&self, a: f64) -> PropagationTime {
        PropagationTime::new(PI * a / (2.0 * self.omega))
    }

    /// `(m w / (pi hbar))^{1/4} exp(-m w (x - x0)^2 / (2 hbar))`.
    pub fn ground_state(&self, grid: UniformGrid, x0: f64) -> Result<SampledSignal> {
        let k = self.mass * self.omega / self.hbar;
        let norm = (k / PI).powf(0.25);
        SampledSignal::from_fn(grid, |x| {
            Complex64::new(norm * (-0.5 * k * (x - x0).powi(2)).exp(), 0.0)
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagationTime {
    pub t: f64,
}

impl PropagationTime {
    pub fn new(t: f64) -> Self {
        Self { t }
    }

    /// `w t`.
    pub fn phase(&self, cfg: &OscillatorConfig) -> f64 {
        cfg.omega * self.t
    }
}

/// `G(x_i, y_j, t)` on `x_grid x y_grid`.
pub fn green_kernel(
    cfg: &OscillatorConfig,
    time: PropagationTime,
    x_grid: UniformGrid,
    y_grid: UniformGrid,
) -> Result<TransformKernel> {
    let (pref, cot, inv_sin, k) = green_parts(cfg, time)?;
    TransformKernel::from_fn(x_grid, y_grid, |x, y| {
        pref * cis(k * ((x * x + y * y) * cot - 2.0 * x * y * inv_sin))
    })
}

/// Prefactor, `cot wt`, `1 / sin wt` and `m w / (2 hbar)`.
fn green_parts(
    cfg: &OscillatorConfig,
    time: PropagationTime,
) -> Result<(Complex64, f64, f64, f64)> {
    let (s, c) = time.phase(cfg).sin_cos();
    if !(s.abs() >= MIN_KERNEL_SIN) {
        return Err(Error::DegenerateTime(s));
    }
    // 1 / i = -i; principal square root.
    let ratio = cfg.mass * cfg.omega / (TAU * cfg.hbar * s);
    let pref = Complex64::new(0.0, -ratio).sqrt();
    Ok((
        pref,
        c / s,
        1.0 / s,
        cfg.mass * cfg.omega / (2.0 * cfg.hbar),
    ))
}

/// `Psi(x, t) = int G(x, y, t) Psi(y, 0) dy` on the grid of `psi0`.
///
/// `t = 0` returns `psi0`. Times with `|sin wt| < NEAR_DEGENERATE_SIN`,
/// including exact multiples of `pi / w`, go through the FrFT identity,
/// `Psi = exp(-i phi / 2) F^a psi0` on the rescaled grid with `phi` the
/// angle reduced into `(-pi, pi]`; this is the limit of the principal-branch
/// kernel from below, so `wt = pi` gives `-i psi0(-x)` and `wt = 2 pi`
/// gives `psi0`.
pub fn propagate(
    cfg: &OscillatorConfig,
    psi0: &SampledSignal,
    time: PropagationTime,
) -> Result<SampledSignal> {
    if time.t == 0.0 {
        return Ok(psi0.clone());
    }
    if !time.t.is_finite() {
        return Err(Error::NonFiniteParameter("t"));
    }
    let phase = time.phase(cfg);
    if phase.sin().abs() < NEAR_DEGENERATE_SIN {
        return propagate_via_frft(cfg, psi0, phase);
    }
    let (pref, cot, inv_sin, k) = green_parts(cfg, time)?;
    let grid = psi0.grid();
    let h = grid.step();
    let values = (0..grid.count())
        .into_par_iter()
        .map(|i| {
            let x = grid.point(i);
            psi0.values()
                .iter()
                .enumerate()
                .map(|(j, q)| {
                    let y = grid.point(j);
                    q * cis(k * ((x * x + y * y) * cot - 2.0 * x * y * inv_sin))
                })
                .sum::<Complex64>()
                * pref
                * h
        })
        .collect();
    SampledSignal::new(*grid, values)
}

fn propagate_via_frft(
    cfg: &OscillatorConfig,
    psi0: &SampledSignal,
    phase: f64,
) -> Result<SampledSignal> {
    let order = reduce_order(phase / FRAC_PI_2)?;
    let l = cfg.length_scale();
    let u = psi0.with_grid(psi0.grid().scaled(1.0 / l)?)?;
    let f = apply_frft(&u, order)?;
    f.with_grid(*psi0.grid())?.scale(cis(-0.5 * order.phi()))
}

/// The FrFT kernel rebuilt from the Green function through the change of
/// variables, the `exp(i phi / 2)` phase and the Jacobian `L`.
pub fn frft_kernel_from_green(
    cfg: &OscillatorConfig,
    order: FrftOrder,
    grid: UniformGrid,
) -> Result<TransformKernel> {
    if order.is_degenerate() {
        return Err(Error::DegenerateOrder(order.a()));
    }
    let l = cfg.length_scale();
    let x_grid = grid.scaled(l)?;
    let g = green_kernel(cfg, cfg.time_for_order(order.a()), x_grid, x_grid)?;
    let factor = cis(0.5 * order.phi()) * l;
    TransformKernel::from_parts(grid, grid, g.entries().iter().map(|e| e * factor).collect())
}

/// Default time step for [`schrodinger_residual`], `1e-4 / w`.
pub fn default_residual_dt(cfg: &OscillatorConfig) -> f64 {
    1e-4 / cfg.omega
}

/// `max |i hbar dPsi/dt + hbar^2/(2m) Psi'' - m w^2 x^2 / 2 Psi|` over interior
/// grid points, with a symmetric time difference of two propagations and a
/// three-point second derivative.
pub fn schrodinger_residual(
    cfg: &OscillatorConfig,
    psi0: &SampledSignal,
    time: PropagationTime,
    dt: f64,
) -> Result<f64> {
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::InvalidConfig(format!(
            "dt must be positive, got {dt}"
        )));
    }
    let now = propagate(cfg, psi0, time)?;
    let fwd = propagate(cfg, psi0, PropagationTime::new(time.t + dt))?;
    let back = propagate(cfg, psi0, PropagationTime::new(time.t - dt))?;
    let grid = psi0.grid();
    let h = grid.step();
    let (m, w, hb) = (cfg.mass, cfg.omega, cfg.hbar);
    let psi = now.values();
    let i_hbar = Complex64::new(0.0, hb);
    let residual = (1..grid.count() - 1)
        .map(|i| {
            let x = grid.point(i);
            let dpsi_dt = (fwd.values()[i] - back.values()[i]) / (2.0 * dt);
            let d2 = (psi[i + 1] - psi[i] * 2.0 + psi[i - 1]) / (h * h);
            (i_hbar * dpsi_dt + d2 * (hb * hb / (2.0 * m)) - psi[i] * (0.5 * m * w * w * x * x))
                .norm()
        })
        .fold(0.0, f64::max);
    Ok(residual)
}
