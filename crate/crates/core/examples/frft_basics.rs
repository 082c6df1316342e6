//! Fractional Fourier transforms of a shifted Gaussian at a few orders.

use fractomo::{
    apply_frft, apply_frft_fast, generate_test_signal, l2_norm, reduce_order, TestSignal,
    UniformGrid,
};

fn main() -> fractomo::Result<()> {
    let q = generate_test_signal(TestSignal::ShiftedGaussian, UniformGrid::default_physics())?;
    println!(
        "{:>6} {:>12} {:>12} {:>14}",
        "a", "norm", "centre", "fast-vs-slow"
    );
    for a in [0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0] {
        let order = reduce_order(a)?;
        let f = apply_frft(&q, order)?;
        let centre: f64 = f
            .grid()
            .points()
            .zip(f.values())
            .map(|(u, z)| u * z.norm_sqr())
            .sum::<f64>()
            * f.grid().step();
        let fast = apply_frft_fast(&q, order)?.max_abs_diff(&f)?;
        println!("{a:>6} {:>12.9} {centre:>12.6} {fast:>14.2e}", l2_norm(&f));
    }
    Ok(())
}
