//! The named, normalized signals used by the examples, the CLI and the
//! verification suite.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::UniformGrid;
use crate::signal::SampledSignal;

/// Chirp rate of [`TestSignal::Chirp`].
pub const CHIRP_RATE: f64 = 1.0;
/// Center of [`TestSignal::ShiftedGaussian`].
pub const SHIFT: f64 = 1.0;
/// Half separation of the [`TestSignal::TwoGaussian`] lobes.
pub const LOBE_OFFSET: f64 = 1.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TestSignal {
    /// `2^{1/4} exp(-pi u^2)`.
    Gaussian,
    /// The Gaussian centered at `u = 1`.
    ShiftedGaussian,
    /// Lobes at `u = -1.5` and `u = +1.5`, the second carrying a phase `i`.
    TwoGaussian,
    /// `exp(i pi u^2)` times the Gaussian.
    Chirp,
}

impl TestSignal {
    pub const ALL: [TestSignal; 4] = [
        TestSignal::Gaussian,
        TestSignal::ShiftedGaussian,
        TestSignal::TwoGaussian,
        TestSignal::Chirp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TestSignal::Gaussian => "gaussian",
            TestSignal::ShiftedGaussian => "shifted-gaussian",
            TestSignal::TwoGaussian => "two-gaussian",
            TestSignal::Chirp => "chirp",
        }
    }
}

impl fmt::Display for TestSignal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TestSignal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown test signal `{s}`")))
    }
}

/// Unit-norm Gaussian `2^{1/4} exp(-pi (u - center)^2)`.
pub fn gaussian(u: f64, center: f64) -> f64 {
    2f64.powf(0.25) * (-PI * (u - center).powi(2)).exp()
}

pub fn generate_test_signal(kind: TestSignal, grid: UniformGrid) -> Result<SampledSignal> {
    match kind {
        TestSignal::Gaussian => {
            SampledSignal::from_fn(grid, |u| Complex64::new(gaussian(u, 0.0), 0.0))
        }
        TestSignal::ShiftedGaussian => {
            SampledSignal::from_fn(grid, |u| Complex64::new(gaussian(u, SHIFT), 0.0))
        }
        TestSignal::TwoGaussian => SampledSignal::from_fn(grid, |u| {
            Complex64::new(gaussian(u, -LOBE_OFFSET), gaussian(u, LOBE_OFFSET))
        })?
        .normalized(),
        TestSignal::Chirp => SampledSignal::from_fn(grid, |u| {
            Complex64::from_polar(gaussian(u, 0.0), PI * CHIRP_RATE * u * u)
        }),
    }
}
