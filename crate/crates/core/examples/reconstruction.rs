//! Recovers signals from their tomograms and reports fidelity.

use fractomo::tomography::{default_mu_grid, default_x_grid, rank_one_deviation};
use fractomo::{
    fidelity, generate_test_signal, reconstruct_correlation, reconstruct_signal,
    tomogram_via_frft_with, FrftMethod, TestSignal, TomographyParams, UniformGrid,
};

fn main() -> fractomo::Result<()> {
    let grid = UniformGrid::new(-4.0, 1.0 / 16.0, 128)?;
    for kind in [TestSignal::Gaussian, TestSignal::TwoGaussian] {
        let q = generate_test_signal(kind, grid)?;
        let provider = |xg: &UniformGrid, mu: f64, nu: f64| {
            tomogram_via_frft_with(&q, TomographyParams::new(mu, nu)?, *xg, FrftMethod::ChirpZ)
        };
        let corr = reconstruct_correlation(provider, grid, default_mu_grid(), default_x_grid())?;
        let rec = reconstruct_signal(&corr)?;
        println!(
            "{kind:<13} fidelity {:.10}  hermiticity {:.1e}  rank-one deviation {:.1e}",
            fidelity(&rec, &q)?,
            corr.hermiticity_defect(),
            rank_one_deviation(&corr)
        );
    }
    Ok(())
}
