use std::f64::consts::TAU;

use fractomo::tomography::{BRIDGE_AMPLITUDE_SCALE, BRIDGE_ARGUMENT_SCALE};
use fractomo::{
    apply_frft_to_grid, generate_test_signal, reduce_order, tomogram, tomogram_via_frft,
    FrftMethod, SampledSignal, TestSignal, TomographyParams, UniformGrid,
};
use num_complex::Complex64;

fn physics(kind: TestSignal) -> SampledSignal {
    generate_test_signal(kind, UniformGrid::default_physics()).unwrap()
}

fn x_grid(mu: f64, nu: f64) -> UniformGrid {
    let half = 4.0 * mu.abs() + 25.0 * nu.abs() + 2.0;
    UniformGrid::spanning(-half, half, 0.02).unwrap()
}

#[test]
fn tomograms_are_normalized_and_nonnegative() {
    for kind in TestSignal::ALL {
        let q = physics(kind);
        for (mu, nu) in [(0.0, 1.0), (1.0, 0.1), (-0.4, -0.9)] {
            let w = tomogram(&q, TomographyParams::new(mu, nu).unwrap(), x_grid(mu, nu)).unwrap();
            assert!((w.mass() - 1.0).abs() < 1e-4, "{kind} ({mu}, {nu})");
            assert!(w.min_value() >= 0.0);
        }
    }
}

#[test]
fn tomogram_is_homogeneous_of_degree_minus_one() {
    let q = physics(TestSignal::TwoGaussian);
    let (mu, nu) = (0.7, -0.6);
    let xg = x_grid(mu, nu);
    let base = tomogram(&q, TomographyParams::new(mu, nu).unwrap(), xg).unwrap();
    for lambda in [3.0, 0.25] {
        let p = TomographyParams::new(lambda * mu, lambda * nu).unwrap();
        let scaled = tomogram(&q, p, xg.scaled(lambda).unwrap()).unwrap();
        for (s, b) in scaled.values().iter().zip(base.values()) {
            assert!((s * lambda - b).abs() < 1e-10, "lambda={lambda}");
        }
    }
    let flipped = tomogram(&q, TomographyParams::new(-mu, -nu).unwrap(), xg).unwrap();
    for (f, b) in flipped.values().iter().zip(base.values().iter().rev()) {
        assert!((f - b).abs() < 1e-10);
    }
}

#[test]
fn global_phase_does_not_change_tomograms() {
    let q = physics(TestSignal::Chirp);
    let r = q.scale(Complex64::from_polar(1.0, -2.2)).unwrap();
    let p = TomographyParams::new(0.5, 0.5).unwrap();
    let a = tomogram(&q, p, x_grid(0.5, 0.5)).unwrap();
    let b = tomogram(&r, p, x_grid(0.5, 0.5)).unwrap();
    assert!(a.max_abs_diff(&b).unwrap() <= 1e-12);
}

#[test]
fn bridge_agrees_with_direct_formula_in_all_quadrants() {
    let q = physics(TestSignal::TwoGaussian);
    for (mu, nu) in [(1.0, 0.5), (-1.0, 0.5), (-0.3, -1.2), (0.8, -0.7)] {
        let p = TomographyParams::new(mu, nu).unwrap();
        let xg = x_grid(mu, nu);
        let direct = tomogram(&q, p, xg).unwrap();
        let bridge = tomogram_via_frft(&q, p, xg).unwrap();
        assert!(direct.max_abs_diff(&bridge).unwrap() < 1e-5, "({mu}, {nu})");
    }
}

#[test]
fn position_axis_tomogram_is_the_scaled_intensity() {
    let q = physics(TestSignal::ShiftedGaussian);
    let mu = 1.5;
    let xg = UniformGrid::spanning(-6.0, 6.0, 0.05).unwrap();
    let w = tomogram_via_frft(&q, TomographyParams::new(mu, 0.0).unwrap(), xg).unwrap();
    for (x, v) in xg.points().zip(w.values()) {
        let u: f64 = x / mu;
        let exact = 2f64.sqrt() * (-2.0 * std::f64::consts::PI * (u - 1.0).powi(2)).exp() / mu;
        assert!((v - exact).abs() < 1e-8, "x={x}");
    }
}

/// Fits `w = c' |F^a p(X / (r sqrt(2 pi) c))|^2 / r` to the direct tomogram:
/// `c` by golden-section search on the residual, `c'` by linear least squares.
fn fit_bridge_constants(q: &SampledSignal, mu: f64, nu: f64) -> (f64, f64) {
    let p = TomographyParams::new(mu, nu).unwrap();
    let xg = x_grid(mu, nu);
    let direct = tomogram(q, p, xg).unwrap();
    let r = p.radius();
    let root = TAU.sqrt();
    let rescaled = SampledSignal::new(
        q.grid().scaled(1.0 / root).unwrap(),
        q.values().iter().map(|z| z * root.sqrt()).collect(),
    )
    .unwrap();
    let order = reduce_order(2.0 * nu.atan2(mu) / std::f64::consts::PI).unwrap();
    let fit = |c: f64| {
        let vg = xg.scaled(1.0 / (r * root * c)).unwrap();
        let f = apply_frft_to_grid(&rescaled, order, vg, FrftMethod::ChirpZ).unwrap();
        let g: Vec<f64> = f.values().iter().map(|z| z.norm_sqr() / r).collect();
        let amp = g
            .iter()
            .zip(direct.values())
            .map(|(g, w)| g * w)
            .sum::<f64>()
            / g.iter().map(|g| g * g).sum::<f64>();
        let resid: f64 = g
            .iter()
            .zip(direct.values())
            .map(|(g, w)| (amp * g - w).powi(2))
            .sum();
        (resid, amp)
    };
    let (mut lo, mut hi) = (0.5, 2.0);
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..80 {
        let a = hi - phi * (hi - lo);
        let b = lo + phi * (hi - lo);
        if fit(a).0 < fit(b).0 {
            hi = b;
        } else {
            lo = a;
        }
    }
    let c = 0.5 * (lo + hi);
    (c, fit(c).1)
}

#[test]
fn fitted_bridge_constants_match_the_closed_form() {
    let q = physics(TestSignal::TwoGaussian);
    for (mu, nu) in [(0.6, 0.9), (-1.1, 0.4)] {
        let (c, c_amp) = fit_bridge_constants(&q, mu, nu);
        assert!((c - BRIDGE_ARGUMENT_SCALE).abs() < 1e-6, "c = {c}");
        assert!(
            (c_amp - BRIDGE_AMPLITUDE_SCALE).abs() < 1e-6,
            "c' = {c_amp}"
        );
    }
    assert!((BRIDGE_AMPLITUDE_SCALE - 1.0 / TAU.sqrt()).abs() < 1e-16);
}

#[test]
fn small_nu_is_rejected_by_direct_formula_only() {
    let q = physics(TestSignal::Gaussian);
    let p = TomographyParams::new(1.0, 1e-9).unwrap();
    let xg = x_grid(1.0, 0.0);
    assert!(matches!(
        tomogram(&q, p, xg),
        Err(fractomo::Error::SmallNu(_))
    ));
    assert!((tomogram_via_frft(&q, p, xg).unwrap().mass() - 1.0).abs() < 1e-6);
}
