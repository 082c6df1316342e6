//! Wigner map of a chirp, its PGM heatmap, and Radon slices compared with
//! direct tomograms.

use std::fs::File;

use fractomo::{
    generate_test_signal, radon_slice, tomogram, wigner_map, TestSignal, TomographyParams,
    UniformGrid,
};

fn main() -> fractomo::Result<()> {
    let q = generate_test_signal(TestSignal::Chirp, UniformGrid::default_physics())?;
    let wm = wigner_map(&q, UniformGrid::new(-32.0, 1.0 / 16.0, 1024)?);
    println!("total {:.8}  min {:.4}", wm.total(), wm.min_value());

    let path = std::env::temp_dir().join("fractomo_chirp_wigner.pgm");
    wm.write_pgm(File::create(&path)?)?;
    println!("heatmap written to {}", path.display());

    let xg = UniformGrid::spanning(-15.0, 15.0, 0.05)?;
    for (mu, nu) in [(0.0, 1.0), (0.6, 0.8), (-1.0, 0.5)] {
        let p = TomographyParams::new(mu, nu)?;
        let diff = radon_slice(&wm, p, xg).max_abs_diff(&tomogram(&q, p, xg)?)?;
        println!("({mu:+.1}, {nu:+.1})  radon vs direct {diff:.2e}");
    }
    Ok(())
}
