//! Fractional Fourier transforms, harmonic-oscillator propagation and
//! symplectic tomography of sampled analytic signals.
//!
//! The three are facets of one operator family: the FrFT kernel is the
//! oscillator Green function in rescaled variables, and every tomogram is
//! the squared modulus of an FrFT. The crate evaluates each independently
//! and checks the identities numerically.
//!
//! ```
//! use fractomo::{apply_frft, generate_test_signal, reduce_order, l2_norm, TestSignal, UniformGrid};
//!
//! let q = generate_test_signal(TestSignal::ShiftedGaussian, UniformGrid::default_physics()).unwrap();
//! let f = apply_frft(&q, reduce_order(0.5).unwrap()).unwrap();
//! assert!((l2_norm(&f) - 1.0).abs() < 1e-6);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod dft;
pub mod error;
pub mod frft;
pub mod grid;
pub mod io;
pub mod kernel;
pub mod oscillator;
pub mod signal;
pub mod test_signals;
pub mod tomography;
pub mod verify;
pub mod wigner;

pub use error::{Error, Result};
pub use frft::{
    apply_frft, apply_frft_fast, apply_frft_to_grid, build_frft_kernel, reduce_order, FrftMethod,
    FrftOrder,
};
pub use grid::UniformGrid;
pub use kernel::TransformKernel;
pub use oscillator::{
    frft_kernel_from_green, green_kernel, propagate, schrodinger_residual, OscillatorConfig,
    PropagationTime,
};
pub use signal::{
    fidelity, inner_product, l2_norm, resample, resample_with, Interpolation, NormStatus,
    SampledSignal,
};
pub use test_signals::{generate_test_signal, TestSignal};
pub use tomography::{
    reconstruct_correlation, reconstruct_signal, tomogram, tomogram_via_frft,
    tomogram_via_frft_with, CorrelationMatrix, Tomogram, TomographyParams,
};
pub use wigner::{radon_slice, wigner_map, WignerMap};
