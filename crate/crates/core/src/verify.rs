//! Self-check suite run by `fractomo verify`.
//!
//! Each check measures one identity on the bundled test signals and
//! compares it with a fixed tolerance. Checks that assert a lower bound
//! (fidelity) report the deficit `1 - value` so every row reads
//! `measured <= tolerance`.

use std::collections::HashMap;
use std::f64::consts::TAU;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use num_complex::Complex64;

use crate::dft::cis;
use crate::error::{Error, Result};
use crate::frft::{apply_frft, apply_frft_fast, build_frft_kernel, reduce_order};
use crate::grid::UniformGrid;
use crate::oscillator::{
    frft_kernel_from_green, propagate, schrodinger_residual, OscillatorConfig, PropagationTime,
};
use crate::signal::{fidelity, inner_product, l2_norm, SampledSignal};
use crate::test_signals::{generate_test_signal, TestSignal};
use crate::tomography::{
    default_mu_grid, default_x_grid, reconstruct_correlation, reconstruct_signal, tomogram,
    tomogram_via_frft_with, TomographyParams,
};
use crate::wigner::{radon_slice, wigner_map};
use crate::FrftMethod;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Frft,
    Oscillator,
    Tomography,
    Wigner,
    Reconstruct,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "frft" => Suite::Frft,
            "oscillator" => Suite::Oscillator,
            "tomography" => Suite::Tomography,
            "wigner" => Suite::Wigner,
            "reconstruct" => Suite::Reconstruct,
            "all" => Suite::All,
            other => return Err(Error::InvalidConfig(format!("unknown suite `{other}`"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::Frft => "frft",
            Suite::Oscillator => "oscillator",
            Suite::Tomography => "tomography",
            Suite::Wigner => "wigner",
            Suite::Reconstruct => "reconstruct",
            Suite::All => "all",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.measured <= self.tolerance
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// `name,status,measured,tolerance` CSV.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "name,status,measured,tolerance")?;
        for c in &self.checks {
            let status = if c.passed() { "pass" } else { "fail" };
            writeln!(
                out,
                "{},{status},{:e},{:e}",
                c.name, c.measured, c.tolerance
            )?;
        }
        out.flush()
    }
}

/// Tolerances by check name; overrides replace the defaults.
#[derive(Debug, Clone)]
pub struct Tolerances(HashMap<&'static str, f64>);

impl Default for Tolerances {
    fn default() -> Self {
        Self(HashMap::from([
            ("frft.identity", 0.0),
            ("frft.parity", 1e-10),
            ("frft.fourier_oracle", 1e-6),
            ("frft.unitarity", 1e-6),
            ("frft.additivity", 1e-5),
            ("frft.inversion", 1e-5),
            ("frft.fast_vs_quadrature", 1e-6),
            ("frft.gaussian_modulus", 1e-6),
            ("oscillator.green_frft_identity", 1e-8),
            ("oscillator.unitarity", 1e-6),
            ("oscillator.group_law", 1e-5),
            ("oscillator.period_modulus", 1e-5),
            ("oscillator.schrodinger_residual", 1e-3),
            ("tomography.normalization", 1e-4),
            ("tomography.bridge", 1e-5),
            ("tomography.homogeneity", 1e-6),
            ("tomography.phase_invariance", 1e-12),
            ("wigner.time_marginal", 1e-3),
            ("wigner.radon_crosscheck", 5e-3),
            ("reconstruct.gaussian_infidelity", 1e-2),
            ("reconstruct.hermiticity", 1e-6),
        ]))
    }
}

impl Tolerances {
    pub fn get(&self, name: &str) -> f64 {
        self.0[name]
    }

    /// Applies a `name=value` override.
    pub fn set_override(&mut self, spec: &str) -> Result<()> {
        let (name, value) = spec
            .split_once('=')
            .ok_or_else(|| Error::InvalidConfig(format!("expected name=value, got `{spec}`")))?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| Error::InvalidConfig(format!("bad tolerance `{value}`")))?;
        let key = self
            .0
            .keys()
            .find(|k| **k == name.trim())
            .copied()
            .ok_or_else(|| Error::InvalidConfig(format!("unknown check `{name}`")))?;
        self.0.insert(key, value);
        Ok(())
    }
}

pub fn run_suite(suite: Suite, tol: &Tolerances) -> Result<Report> {
    let mut report = Report::default();
    let mut push = |name: &str, measured: f64| {
        let key = tol.0.keys().find(|k| **k == name).expect("known check");
        log::info!("{name}: {measured:e}");
        report.checks.push(Check {
            name: name.to_string(),
            measured,
            tolerance: tol.0[key],
        });
    };
    let wants = |s: Suite| suite == Suite::All || suite == s;
    if wants(Suite::Frft) {
        frft_checks(&mut push)?;
    }
    if wants(Suite::Oscillator) {
        oscillator_checks(&mut push)?;
    }
    if wants(Suite::Tomography) {
        tomography_checks(&mut push)?;
    }
    if wants(Suite::Wigner) {
        wigner_checks(&mut push)?;
    }
    if wants(Suite::Reconstruct) {
        reconstruct_checks(&mut push)?;
    }
    Ok(report)
}

fn physics_signals() -> Result<Vec<SampledSignal>> {
    TestSignal::ALL
        .iter()
        .map(|&k| generate_test_signal(k, UniformGrid::default_physics()))
        .collect()
}

fn fourier_oracle(s: &SampledSignal) -> Vec<Complex64> {
    let g = s.grid();
    g.points()
        .map(|u| {
            g.points()
                .zip(s.values())
                .map(|(v, q)| q * cis(-TAU * (u * v).fract()))
                .sum::<Complex64>()
                * g.step()
        })
        .collect()
}

fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn frft_checks(push: &mut impl FnMut(&str, f64)) -> Result<()> {
    let signals = physics_signals()?;
    let order = reduce_order;

    let mut identity: f64 = 0.0;
    let mut fourier: f64 = 0.0;
    let mut unitarity: f64 = 0.0;
    let mut fast: f64 = 0.0;
    for s in &signals {
        identity = identity.max(if apply_frft(s, order(0.0)?)? == *s {
            0.0
        } else {
            1.0
        });
        let f1 = apply_frft(s, order(1.0)?)?;
        fourier = fourier.max(max_diff(f1.values(), &fourier_oracle(s)));
        for a in [0.3, -0.3, 0.5, -0.5, 1.0, 1.7, -1.7] {
            let f = apply_frft(s, order(a)?)?;
            unitarity = unitarity.max((l2_norm(&f) - l2_norm(s)).abs() / l2_norm(s));
            fast = fast.max(apply_frft_fast(s, order(a)?)?.max_abs_diff(&f)?);
        }
    }
    push("frft.identity", identity);
    push("frft.fourier_oracle", fourier);
    push("frft.unitarity", unitarity);
    push("frft.fast_vs_quadrature", fast);

    let sym = UniformGrid::centered(1.0 / 64.0, 1025)?;
    let shifted = generate_test_signal(TestSignal::ShiftedGaussian, sym)?;
    let p = apply_frft(&shifted, order(2.0)?)?;
    let parity = sym
        .points()
        .zip(p.values())
        .map(|(u, z)| (z - Complex64::new(crate::test_signals::gaussian(u, -1.0), 0.0)).norm())
        .fold(0.0, f64::max);
    push("frft.parity", parity);

    let mut additivity: f64 = 0.0;
    let mut inversion: f64 = 0.0;
    for &(a, b) in &[(0.4, 0.9), (-0.6, 1.3), (1.2, 1.1), (0.75, -1.6)] {
        for s in signals.iter().take(2) {
            let ab = apply_frft_fast(&apply_frft_fast(s, order(a)?)?, order(b)?)?;
            let direct = apply_frft_fast(s, order(a + b)?)?;
            additivity = additivity.max(ab.max_abs_diff(&direct)?);
            let back = apply_frft_fast(&apply_frft_fast(s, order(a)?)?, order(-a)?)?;
            inversion = inversion.max(back.max_abs_diff(s)?);
        }
    }
    push("frft.additivity", additivity);
    push("frft.inversion", inversion);

    let q = &signals[0];
    let mut modulus: f64 = 0.0;
    for a in [0.1, 0.5, 1.0, 1.5, -0.9] {
        let f = apply_frft_fast(q, order(a)?)?;
        let dev = f
            .values()
            .iter()
            .zip(q.values())
            .map(|(x, y)| (x.norm() - y.norm()).abs())
            .fold(0.0, f64::max);
        modulus = modulus.max(dev);
    }
    push("frft.gaussian_modulus", modulus);
    Ok(())
}

fn oscillator_checks(push: &mut impl FnMut(&str, f64)) -> Result<()> {
    let cfg = OscillatorConfig::default();
    let g256 = UniformGrid::new(-4.0, 1.0 / 32.0, 256)?;
    let mut identity: f64 = 0.0;
    for a in [0.25, 0.5, 1.0, 1.5] {
        let o = reduce_order(a)?;
        identity = identity.max(
            frft_kernel_from_green(&cfg, o, g256)?.max_abs_diff(&build_frft_kernel(o, g256)?)?,
        );
    }
    push("oscillator.green_frft_identity", identity);

    let grid = UniformGrid::default_physics();
    let coherent = cfg.ground_state(grid, 1.0)?;
    let mut unitarity: f64 = 0.0;
    for t in [0.7, 1.3, 2.2, -1.0] {
        let out = propagate(&cfg, &coherent, PropagationTime::new(t))?;
        unitarity = unitarity.max((l2_norm(&out) - 1.0).abs());
    }
    push("oscillator.unitarity", unitarity);

    let mut group: f64 = 0.0;
    for &(t1, t2) in &[(0.7, 0.9), (1.1, 1.6), (-0.8, 2.2)] {
        let two = propagate(
            &cfg,
            &propagate(&cfg, &coherent, PropagationTime::new(t1))?,
            PropagationTime::new(t2),
        )?;
        let one = propagate(&cfg, &coherent, PropagationTime::new(t1 + t2))?;
        group = group.max(two.max_abs_diff(&one)?);
    }
    push("oscillator.group_law", group);

    let period = propagate(&cfg, &coherent, PropagationTime::new(TAU / cfg.omega()))?;
    let modulus = period
        .values()
        .iter()
        .zip(coherent.values())
        .map(|(a, b)| (a.norm() - b.norm()).abs())
        .fold(0.0, f64::max);
    push("oscillator.period_modulus", modulus);

    let residual = schrodinger_residual(&cfg, &coherent, PropagationTime::new(0.7), 1e-4)?;
    push("oscillator.schrodinger_residual", residual);
    Ok(())
}

fn tomography_x_grid(p: TomographyParams) -> Result<UniformGrid> {
    let half = 4.0 * p.mu().abs() + 25.0 * p.nu().abs() + 1.0;
    UniformGrid::spanning(-half, half, 0.05)
}

fn tomography_checks(push: &mut impl FnMut(&str, f64)) -> Result<()> {
    let signals = physics_signals()?;
    let params = [
        (1.0, 1.0),
        (-0.5, 0.8),
        (0.3, -1.2),
        (-1.5, -0.4),
        (0.0, 1.0),
        (2.0, 0.1),
    ];

    let mut norm: f64 = 0.0;
    let mut bridge: f64 = 0.0;
    for s in signals.iter().take(3) {
        for &(mu, nu) in &params {
            let p = TomographyParams::new(mu, nu)?;
            let xg = tomography_x_grid(p)?;
            let direct = tomogram(s, p, xg)?;
            norm = norm.max((direct.mass() - 1.0).abs());
            let via = tomogram_via_frft_with(s, p, xg, FrftMethod::ChirpZ)?;
            bridge = bridge.max(direct.max_abs_diff(&via)?);
        }
    }
    push("tomography.normalization", norm);
    push("tomography.bridge", bridge);

    let q = &signals[3];
    let mut homog: f64 = 0.0;
    let mut phase: f64 = 0.0;
    let rotated = q.scale(Complex64::from_polar(1.0, 1.234))?;
    for &(mu, nu) in &params[..3] {
        let p = TomographyParams::new(mu, nu)?;
        let xg = tomography_x_grid(p)?;
        let base = tomogram(q, p, xg)?;
        let peak = base.max_value();
        for lambda in [2.0, 1.0 / 3.0] {
            let scaled = tomogram(
                q,
                TomographyParams::new(lambda * mu, lambda * nu)?,
                xg.scaled(lambda)?,
            )?;
            for (a, b) in scaled.values().iter().zip(base.values()) {
                homog = homog.max((a * lambda - b).abs() / peak);
            }
        }
        phase = phase.max(tomogram(&rotated, p, xg)?.max_abs_diff(&base)?);
    }
    push("tomography.homogeneity", homog);
    push("tomography.phase_invariance", phase);
    Ok(())
}

fn wigner_checks(push: &mut impl FnMut(&str, f64)) -> Result<()> {
    let freq = UniformGrid::new(-32.0, 1.0 / 16.0, 1024)?;
    let mut marginal: f64 = 0.0;
    let mut cross: f64 = 0.0;
    for kind in [TestSignal::Gaussian, TestSignal::Chirp] {
        let s = generate_test_signal(kind, UniformGrid::default_physics())?;
        let wm = wigner_map(&s, freq);
        for (m, z) in wm.time_marginal().iter().zip(s.values()) {
            marginal = marginal.max((m - z.norm_sqr()).abs());
        }
        let r = 0.5f64.sqrt();
        for (mu, nu) in [(0.0, 1.0), (r, r), (-0.6, 0.8)] {
            let p = TomographyParams::new(mu, nu)?;
            let xg = UniformGrid::spanning(-20.0, 20.0, 0.05)?;
            let slice = radon_slice(&wm, p, xg);
            cross = cross.max(slice.max_abs_diff(&tomogram(&s, p, xg)?)?);
        }
    }
    push("wigner.time_marginal", marginal);
    push("wigner.radon_crosscheck", cross);
    Ok(())
}

fn reconstruct_checks(push: &mut impl FnMut(&str, f64)) -> Result<()> {
    let grid = UniformGrid::new(-4.0, 1.0 / 16.0, 128)?;
    let q = generate_test_signal(TestSignal::Gaussian, grid)?;
    let provider = |xg: &UniformGrid, mu: f64, nu: f64| {
        tomogram_via_frft_with(&q, TomographyParams::new(mu, nu)?, *xg, FrftMethod::ChirpZ)
    };
    let corr = reconstruct_correlation(provider, grid, default_mu_grid(), default_x_grid())?;
    push("reconstruct.hermiticity", corr.hermiticity_defect());
    let rec = reconstruct_signal(&corr)?;
    push(
        "reconstruct.gaussian_infidelity",
        (1.0 - fidelity(&rec, &q)?).max(0.0),
    );
    Ok(())
}

/// Eigenvalue `<q, F^a q>` of the unit Gaussian, exposed for documentation
/// examples; it is 1 for every order.
pub fn gaussian_eigenvalue(a: f64) -> Result<Complex64> {
    let q = generate_test_signal(TestSignal::Gaussian, UniformGrid::default_physics())?;
    inner_product(&q, &apply_frft_fast(&q, reduce_order(a)?)?)
}
