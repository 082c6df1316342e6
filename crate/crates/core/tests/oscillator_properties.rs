use std::f64::consts::{PI, TAU};

use fractomo::{
    inner_product, l2_norm, propagate, schrodinger_residual, OscillatorConfig, PropagationTime,
    UniformGrid,
};
use num_complex::Complex64;

fn coherent(cfg: &OscillatorConfig, x0: f64) -> fractomo::SampledSignal {
    cfg.ground_state(UniformGrid::default_physics(), x0)
        .unwrap()
}

#[test]
fn evolution_is_unitary() {
    for cfg in [
        OscillatorConfig::default(),
        OscillatorConfig::new(2.0, 1.5, 0.8).unwrap(),
    ] {
        let psi = coherent(&cfg, 0.8);
        for t in [0.1, 0.6, 1.4, 2.9, -0.5] {
            let out = propagate(&cfg, &psi, PropagationTime::new(t / cfg.omega())).unwrap();
            assert!((l2_norm(&out) - 1.0).abs() < 1e-6, "t={t}");
        }
    }
}

#[test]
fn group_law_without_branch_wrap() {
    let cfg = OscillatorConfig::default();
    let psi = coherent(&cfg, 1.0);
    for (t1, t2) in [(0.3, 0.4), (0.7, 0.9), (1.1, 1.6), (-0.8, 2.2)] {
        let two = propagate(
            &cfg,
            &propagate(&cfg, &psi, PropagationTime::new(t1)).unwrap(),
            PropagationTime::new(t2),
        )
        .unwrap();
        let one = propagate(&cfg, &psi, PropagationTime::new(t1 + t2)).unwrap();
        assert!(two.max_abs_diff(&one).unwrap() < 1e-5, "({t1}, {t2})");
    }
}

#[test]
fn group_law_across_the_wrap_flips_sign() {
    let cfg = OscillatorConfig::default();
    let psi = coherent(&cfg, 1.0);
    let (t1, t2) = (2.0, 1.8);
    let two = propagate(
        &cfg,
        &propagate(&cfg, &psi, PropagationTime::new(t1)).unwrap(),
        PropagationTime::new(t2),
    )
    .unwrap();
    let one = propagate(&cfg, &psi, PropagationTime::new(t1 + t2)).unwrap();
    assert!(
        two.max_abs_diff(&one.scale(Complex64::new(-1.0, 0.0)).unwrap())
            .unwrap()
            < 1e-5
    );
}

#[test]
fn full_period_returns_the_initial_state() {
    let cfg = OscillatorConfig::new(1.0, 2.0, 1.0).unwrap();
    let psi = coherent(&cfg, 0.5);
    let out = propagate(&cfg, &psi, PropagationTime::new(TAU / cfg.omega())).unwrap();
    let overlap = inner_product(&psi, &out).unwrap();
    assert!((overlap.norm() - 1.0).abs() < 1e-9);
    assert!(overlap.arg().abs() < 1e-9);
}

#[test]
fn half_period_reflects_with_phase() {
    let cfg = OscillatorConfig::default();
    let psi = cfg
        .ground_state(UniformGrid::centered(1.0 / 64.0, 1025).unwrap(), 1.3)
        .unwrap();
    let out = propagate(&cfg, &psi, PropagationTime::new(PI)).unwrap();
    let n = psi.len();
    for i in 0..n {
        let expected = psi.values()[n - 1 - i] * Complex64::new(0.0, -1.0);
        assert!((out.values()[i] - expected).norm() < 1e-9);
    }
}

#[test]
fn coherent_state_centre_follows_the_classical_orbit() {
    let cfg = OscillatorConfig::default();
    let psi = coherent(&cfg, 1.5);
    for t in [0.5, 1.0, 2.5] {
        let out = propagate(&cfg, &psi, PropagationTime::new(t)).unwrap();
        let mean: f64 = out
            .grid()
            .points()
            .zip(out.values())
            .map(|(x, z)| x * z.norm_sqr())
            .sum::<f64>()
            * out.grid().step();
        assert!((mean - 1.5 * t.cos()).abs() < 1e-8, "t={t}");
    }
}

#[test]
fn schrodinger_residual_is_small_and_second_order() {
    let cfg = OscillatorConfig::default();
    let t = PropagationTime::new(1.1);
    let residuals: Vec<f64> = [(1.0 / 16.0, 256), (1.0 / 32.0, 512), (1.0 / 64.0, 1024)]
        .into_iter()
        .map(|(h, n)| {
            let g = UniformGrid::new(-8.0, h, n).unwrap();
            schrodinger_residual(&cfg, &cfg.ground_state(g, 0.7).unwrap(), t, 1e-4).unwrap()
        })
        .collect();
    assert!(residuals[2] < 1e-3);
    for w in residuals.windows(2) {
        let order = (w[0] / w[1]).log2();
        assert!((1.8..2.2).contains(&order), "{residuals:?}");
    }
}
