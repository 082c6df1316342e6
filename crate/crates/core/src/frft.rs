//! Fractional Fourier transform with kernel
//!
//! ```text
//! B_a(u, u') = exp(-i(pi*sgn(sin phi)/4 - phi/2)) |sin phi|^{-1/2}
//!              * exp(i pi (u^2 cot phi - 2 u u' / sin phi + u'^2 cot phi)),   phi = a pi / 2
//! ```
//!
//! At `a = 1` this is the unit-prefactor Fourier kernel `exp(-2 pi i u u')`;
//! `a = 0` and `a = 2` are the identity and parity operators. The
//! transform is a one-parameter unitary group with period 4 in `a`, and the
//! ground Gaussian `2^{1/4} exp(-pi u^2)` is an eigenfunction with
//! eigenvalue exactly 1 for every order (no residual eigenphase).
//!
//! Orders with `|sin phi| < NEAR_DEGENERATE_SIN` are evaluated as
//! `F^{a-1} F^1` through an intermediate frequency grid. Direct quadrature
//! there would alias: the Riemann sum replicates the output with period
//! `|sin phi| / step`, which collapses as `phi` approaches a multiple of pi.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::dft::{cis, scaled_dft_chirp_z};
use crate::error::{Error, Result};
use crate::grid::UniformGrid;
use crate::kernel::TransformKernel;
use crate::signal::SampledSignal;

/// Below this `|sin phi|` the transform is computed by composition.
pub const NEAR_DEGENERATE_SIN: f64 = 0.5;

/// A reduced order `a` in `(-2, 2]` with `phi = a pi / 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrftOrder {
    a: f64,
    phi: f64,
    phi_hat: i8,
}

/// Reduces `a_raw` modulo 4 into `(-2, 2]`.
pub fn reduce_order(a_raw: f64) -> Result<FrftOrder> {
    if !a_raw.is_finite() {
        return Err(Error::NonFiniteParameter("a"));
    }
    let mut a = a_raw - 4.0 * ((a_raw + 2.0) / 4.0).floor();
    if a <= -2.0 {
        a += 4.0;
    }
    if a > 2.0 {
        a -= 4.0;
    }
    let phi_hat = if a == 0.0 || a == 2.0 {
        0
    } else if a > 0.0 {
        1
    } else {
        -1
    };
    Ok(FrftOrder {
        a,
        phi: a * FRAC_PI_2,
        phi_hat,
    })
}

impl FrftOrder {
    pub fn new(a: f64) -> Result<Self> {
        reduce_order(a)
    }

    /// The ordinary Fourier transform, `a = 1`.
    pub fn fourier() -> Self {
        Self {
            a: 1.0,
            phi: FRAC_PI_2,
            phi_hat: 1,
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// `sgn(sin phi)`; zero exactly for `a` in {0, 2}.
    pub fn phi_hat(&self) -> i8 {
        self.phi_hat
    }

    pub fn is_degenerate(&self) -> bool {
        self.phi_hat == 0
    }

    /// `(sin phi, cos phi)`, exact at the quarter-period orders.
    pub fn sin_cos(&self) -> (f64, f64) {
        match self.a {
            0.0 => (0.0, 1.0),
            1.0 => (1.0, 0.0),
            2.0 => (0.0, -1.0),
            -1.0 => (-1.0, 0.0),
            _ => self.phi.sin_cos(),
        }
    }

    pub fn inverse(&self) -> Self {
        reduce_order(-self.a).expect("finite order")
    }

    /// Order of `F^other F^self`.
    pub fn then(&self, other: FrftOrder) -> Self {
        reduce_order(self.a + other.a).expect("finite order")
    }

    /// `exp(-i(pi phi_hat / 4 - phi / 2)) |sin phi|^{-1/2}`.
    fn prefactor(&self) -> Complex64 {
        let (s, _) = self.sin_cos();
        cis(self.phi / 2.0 - FRAC_PI_4 * self.phi_hat as f64) / s.abs().sqrt()
    }
}

/// Evaluation strategy for the kernel sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FrftMethod {
    /// One kernel entry per output/input pair.
    #[default]
    Quadrature,
    /// Chirp multiply, chirp-z Fourier sum, chirp multiply.
    ChirpZ,
}

#[inline]
fn kernel_entry(prefactor: Complex64, cot: f64, inv_sin: f64, u: f64, v: f64) -> Complex64 {
    prefactor * cis(PI * (u * u * cot - 2.0 * u * v * inv_sin + v * v * cot))
}

/// Samples `B_a(u_i, u'_j)` on `grid x grid`. Degenerate orders have no
/// finite kernel and are rejected.
pub fn build_frft_kernel(order: FrftOrder, grid: UniformGrid) -> Result<TransformKernel> {
    if order.is_degenerate() {
        return Err(Error::DegenerateOrder(order.a));
    }
    let (s, c) = order.sin_cos();
    let (cot, inv_sin, pref) = (c / s, 1.0 / s, order.prefactor());
    TransformKernel::from_fn(grid, grid, |u, v| kernel_entry(pref, cot, inv_sin, u, v))
}

/// `F^a q` on the signal's own grid by direct quadrature.
pub fn apply_frft(s: &SampledSignal, order: FrftOrder) -> Result<SampledSignal> {
    apply_frft_to_grid(s, order, *s.grid(), FrftMethod::Quadrature)
}

/// Chirp-z evaluation of [`apply_frft`]; grids whose length is not a power
/// of two fall back to quadrature.
pub fn apply_frft_fast(s: &SampledSignal, order: FrftOrder) -> Result<SampledSignal> {
    if !s.len().is_power_of_two() {
        log::info!(
            "grid length {} is not a power of two; using quadrature FrFT",
            s.len()
        );
        return apply_frft(s, order);
    }
    apply_frft_to_grid(s, order, *s.grid(), FrftMethod::ChirpZ)
}

/// `F^a q` evaluated at the points of an arbitrary uniform `out` grid.
pub fn apply_frft_to_grid(
    s: &SampledSignal,
    order: FrftOrder,
    out: UniformGrid,
    method: FrftMethod,
) -> Result<SampledSignal> {
    SampledSignal::new(out, transform(s.values(), s.grid(), order, &out, method))
}

fn transform(
    values: &[Complex64],
    grid: &UniformGrid,
    order: FrftOrder,
    out: &UniformGrid,
    method: FrftMethod,
) -> Vec<Complex64> {
    if order.is_degenerate() && out == grid {
        return if order.a == 0.0 {
            values.to_vec()
        } else {
            parity(values, grid)
        };
    }
    let (s, _) = order.sin_cos();
    if s.abs() < NEAR_DEGENERATE_SIN {
        let mid = intermediate_grid(grid, out, order);
        log::debug!(
            "FrFT order {} routed through F^1 on a {}-point intermediate grid",
            order.a,
            mid.count()
        );
        let first = kernel_sum(values, grid, FrftOrder::fourier(), &mid, method);
        let rest = reduce_order(order.a - 1.0).expect("finite order");
        return kernel_sum(&first, &mid, rest, out, method);
    }
    kernel_sum(values, grid, order, out, method)
}

/// Frequency grid for the `F^1` leg of a composition. It spans exactly one
/// period `1/step` of the sampled spectrum and is fine enough that the
/// second leg's output replicas (period `|cos phi| / step_mid`) clear the
/// output window plus the largest possible support of `F^a q`.
fn intermediate_grid(input: &UniformGrid, out: &UniformGrid, order: FrftOrder) -> UniformGrid {
    let h = input.step();
    let band = 0.5 / h;
    let reach = input.max_abs().hypot(band) + out.max_abs();
    let (_, c) = order.sin_cos();
    let step_max = c.abs() / reach;
    let n = ((1.0 / (h * step_max)).ceil() as usize).max(2);
    UniformGrid::new(-band, 1.0 / (h * n as f64), n).expect("valid intermediate grid")
}

fn kernel_sum(
    values: &[Complex64],
    grid: &UniformGrid,
    order: FrftOrder,
    out: &UniformGrid,
    method: FrftMethod,
) -> Vec<Complex64> {
    let (s, c) = order.sin_cos();
    let (cot, inv_sin) = (c / s, 1.0 / s);
    let pref = order.prefactor();
    let h = grid.step();
    match method {
        FrftMethod::Quadrature => (0..out.count())
            .into_par_iter()
            .map(|i| {
                let u = out.point(i);
                values
                    .iter()
                    .enumerate()
                    .map(|(j, q)| kernel_entry(pref, cot, inv_sin, u, grid.point(j)) * q)
                    .sum::<Complex64>()
                    * h
            })
            .collect(),
        FrftMethod::ChirpZ => {
            let chirped: Vec<Complex64> = values
                .iter()
                .enumerate()
                .map(|(j, q)| {
                    let v = grid.point(j);
                    q * cis(PI * cot * v * v)
                })
                .collect();
            let sums = scaled_dft_chirp_z(&chirped, grid, out, TAU * inv_sin);
            sums.into_iter()
                .enumerate()
                .map(|(i, z)| {
                    let u = out.point(i);
                    z * pref * h * cis(PI * cot * u * u)
                })
                .collect()
        }
    }
}

/// `q(-u)` on the same grid: exact index reversal where `-u` is a grid
/// point, linear interpolation otherwise, zero outside the span.
fn parity(values: &[Complex64], grid: &UniformGrid) -> Vec<Complex64> {
    let s = SampledSignal::new(*grid, values.to_vec()).expect("validated values");
    grid.points()
        .map(|u| match grid.exact_index(-u, 1e-9) {
            Some(k) => values[k],
            None => s.interpolate_or_zero(-u),
        })
        .collect()
}
