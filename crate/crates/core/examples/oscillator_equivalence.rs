//! The oscillator propagator and the FrFT kernel are the same matrix after
//! rescaling; a coherent state swings along the classical orbit.

use std::f64::consts::PI;

use fractomo::{
    build_frft_kernel, frft_kernel_from_green, propagate, reduce_order, schrodinger_residual,
    OscillatorConfig, PropagationTime, UniformGrid,
};

fn main() -> fractomo::Result<()> {
    let cfg = OscillatorConfig::new(1.0, 2.0, 1.0)?;
    let grid = UniformGrid::new(-4.0, 1.0 / 32.0, 256)?;
    for a in [0.25, 0.5, 1.0, 1.5] {
        let order = reduce_order(a)?;
        let diff = frft_kernel_from_green(&cfg, order, grid)?
            .max_abs_diff(&build_frft_kernel(order, grid)?)?;
        println!("a = {a:<4}  max |G-derived - FrFT| = {diff:.2e}");
    }

    let psi = cfg.ground_state(UniformGrid::default_physics(), 1.5)?;
    for k in 0..=8 {
        let t = PropagationTime::new(k as f64 * PI / (4.0 * cfg.omega()));
        let out = propagate(&cfg, &psi, t)?;
        let mean: f64 = out
            .grid()
            .points()
            .zip(out.values())
            .map(|(x, z)| x * z.norm_sqr())
            .sum::<f64>()
            * out.grid().step();
        println!("t = {:.4}  <x> = {mean:+.6}", t.t);
    }
    let r = schrodinger_residual(&cfg, &psi, PropagationTime::new(0.4), 1e-4)?;
    println!("Schrodinger residual at t = 0.4: {r:.2e}");
    Ok(())
}
