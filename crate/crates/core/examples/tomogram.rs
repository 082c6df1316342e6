//! Tomograms of the two-Gaussian superposition, by direct integral and
//! through the FrFT, across the four quadrants of (mu, nu).

use fractomo::{
    generate_test_signal, tomogram, tomogram_via_frft, TestSignal, TomographyParams, UniformGrid,
};

fn main() -> fractomo::Result<()> {
    let q = generate_test_signal(TestSignal::TwoGaussian, UniformGrid::default_physics())?;
    let xg = UniformGrid::spanning(-20.0, 20.0, 0.02)?;
    for (mu, nu) in [
        (1.0, 0.5),
        (-1.0, 0.5),
        (-0.5, -1.0),
        (0.7, -0.7),
        (1.0, 0.0),
    ] {
        let p = TomographyParams::new(mu, nu)?;
        let bridge = tomogram_via_frft(&q, p, xg)?;
        let line = match tomogram(&q, p, xg) {
            Ok(direct) => format!("direct vs bridge {:.2e}", direct.max_abs_diff(&bridge)?),
            Err(e) => format!("direct: {e}"),
        };
        println!(
            "({mu:+.1}, {nu:+.1})  mass {:.8}  peak {:.4}  {line}",
            bridge.mass(),
            bridge.max_value()
        );
    }
    Ok(())
}
