//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//!
//! Oracles are written here from closed forms rather than reusing library
//! internals.

use std::f64::consts::{PI, TAU};
use std::process::ExitCode;
use std::time::Instant;

use fractomo::{
    apply_frft, build_frft_kernel, fidelity, frft_kernel_from_green, generate_test_signal, l2_norm,
    propagate, radon_slice, reconstruct_correlation, reconstruct_signal, reduce_order,
    schrodinger_residual, tomogram, tomogram_via_frft, tomogram_via_frft_with, wigner_map,
    FrftMethod, OscillatorConfig, PropagationTime, SampledSignal, TestSignal, TomographyParams,
    UniformGrid,
};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cis(x: f64) -> Complex64 {
    Complex64::new(x.cos(), x.sin())
}

fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn check(cond: bool, msg: String) -> Outcome {
    if cond {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn signal(kind: TestSignal, grid: UniformGrid) -> SampledSignal {
    generate_test_signal(kind, grid).unwrap()
}

/// `sqrt(1 - i cot phi) exp(i pi (cot phi (u^2 + v^2) - 2 u v / sin phi))`.
fn kernel_oracle(a: f64, u: f64, v: f64) -> Complex64 {
    let phi = a * PI / 2.0;
    let (s, c) = phi.sin_cos();
    let cot = c / s;
    Complex64::new(1.0, -cot).sqrt() * cis(PI * (cot * (u * u + v * v) - 2.0 * u * v / s))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let grid = UniformGrid::centered(1.0 / 64.0, 1024).unwrap();
    let mut msgs = Vec::new();
    let mut ok = true;
    for kind in TestSignal::ALL {
        let q = signal(kind, grid);
        let id = apply_frft(&q, reduce_order(0.0).unwrap()).unwrap();
        let bitwise = id
            .values()
            .iter()
            .zip(q.values())
            .all(|(x, y)| x.re.to_bits() == y.re.to_bits() && x.im.to_bits() == y.im.to_bits());
        ok &= bitwise;

        let sym = UniformGrid::new(-8.0, 1.0 / 64.0, 1025).unwrap();
        let qs = signal(kind, sym);
        let par = apply_frft(&qs, reduce_order(2.0).unwrap()).unwrap();
        let reversed: Vec<Complex64> = qs.values().iter().rev().copied().collect();
        let parity = max_diff(par.values(), &reversed);
        ok &= parity <= 1e-10;

        let h = grid.step();
        let oracle: Vec<Complex64> = grid
            .points()
            .map(|u| {
                grid.points()
                    .zip(q.values())
                    .map(|(v, z)| z * cis(-TAU * (u * v).rem_euclid(1.0)))
                    .sum::<Complex64>()
                    * h
            })
            .collect();
        let f1 = apply_frft(&q, reduce_order(1.0).unwrap()).unwrap();
        let fourier = max_diff(f1.values(), &oracle);
        ok &= fourier <= 1e-6;
        msgs.push(format!(
            "{kind}: bitwise={bitwise} parity={parity:.1e} fourier={fourier:.1e}"
        ));
    }
    let secs = start.elapsed().as_secs_f64();
    check(ok && secs < 5.0, format!("{}; {secs:.2}s", msgs.join(", ")))
}

fn criterion_2() -> Outcome {
    let grid = UniformGrid::new(-4.0, 1.0 / 32.0, 256).unwrap();
    let mut worst: f64 = 0.0;
    let mut worst_oracle: f64 = 0.0;
    for cfg in [
        OscillatorConfig::default(),
        OscillatorConfig::new(2.0, 0.5, 0.7).unwrap(),
    ] {
        for a in [0.25, 0.5, 1.0, 1.5] {
            let order = reduce_order(a).unwrap();
            let from_green = frft_kernel_from_green(&cfg, order, grid).unwrap();
            let frft = build_frft_kernel(order, grid).unwrap();
            worst = worst.max(from_green.max_abs_diff(&frft).unwrap());
            for i in 0..grid.count() {
                for j in 0..grid.count() {
                    let o = kernel_oracle(a, grid.point(i), grid.point(j));
                    worst_oracle = worst_oracle.max((from_green.get(i, j) - o).norm());
                }
            }
        }
    }
    check(
        worst <= 1e-8 && worst_oracle <= 1e-8,
        format!("green vs frft {worst:.1e}, green vs closed form {worst_oracle:.1e}"),
    )
}

fn criterion_3() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    let grid = UniformGrid::default_physics();
    let signals: Vec<_> = TestSignal::ALL.iter().map(|&k| signal(k, grid)).collect();
    let mut norm: f64 = 0.0;
    let mut add: f64 = 0.0;
    let mut inv: f64 = 0.0;
    for trial in 0..12 {
        let a: f64 = rng.gen_range(-2.0..2.0);
        let b: f64 = rng.gen_range(-2.0..2.0);
        let q = &signals[trial % signals.len()];
        let fa = apply_frft(q, reduce_order(a).unwrap()).unwrap();
        norm = norm.max((l2_norm(&fa) - l2_norm(q)).abs() / l2_norm(q));
        let fab = apply_frft(&fa, reduce_order(b).unwrap()).unwrap();
        let direct = apply_frft(q, reduce_order(a + b).unwrap()).unwrap();
        add = add.max(fab.max_abs_diff(&direct).unwrap());
        let back = apply_frft(&fa, reduce_order(-a).unwrap()).unwrap();
        inv = inv.max(back.max_abs_diff(q).unwrap());
    }
    check(
        norm <= 1e-6 && add <= 1e-5 && inv <= 1e-5,
        format!("norm {norm:.1e}, additivity {add:.1e}, inversion {inv:.1e}"),
    )
}

fn x_grid_for(mu: f64, nu: f64) -> UniformGrid {
    let half = 4.0 * mu.abs() + 25.0 * nu.abs() + 2.0;
    UniformGrid::spanning(-half, half, 0.01).unwrap()
}

fn criterion_4() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    let grid = UniformGrid::default_physics();
    let kinds = [
        TestSignal::Gaussian,
        TestSignal::TwoGaussian,
        TestSignal::Chirp,
    ];
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let mu: f64 = rng.gen_range(-2.0..2.0);
        let nu: f64 = rng.gen_range(0.1..2.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let p = TomographyParams::new(mu, nu).unwrap();
        for kind in kinds {
            let w = tomogram(&signal(kind, grid), p, x_grid_for(mu, nu)).unwrap();
            let mass: f64 = w.values().iter().sum::<f64>() * w.x_grid().step();
            worst = worst.max((mass - 1.0).abs());
        }
    }
    check(
        worst <= 1e-4,
        format!("max |mass - 1| = {worst:.1e} over 60 tomograms"),
    )
}

fn criterion_5() -> Outcome {
    let grid = UniformGrid::default_physics();
    let points = [
        (1.0, 1.0),
        (0.3, 1.7),
        (-0.8, 0.6),
        (-1.5, 0.2),
        (-0.7, -1.1),
        (-0.2, -0.5),
        (1.2, -0.4),
        (0.5, -2.0),
    ];
    let mut worst: f64 = 0.0;
    for kind in TestSignal::ALL {
        let q = signal(kind, grid);
        for (mu, nu) in points {
            let p = TomographyParams::new(mu, nu).unwrap();
            let xg = x_grid_for(mu, nu);
            let direct = tomogram(&q, p, xg).unwrap();
            let bridge = tomogram_via_frft(&q, p, xg).unwrap();
            worst = worst.max(direct.max_abs_diff(&bridge).unwrap());
        }
    }
    check(
        worst <= 1e-5,
        format!("max-abs {worst:.1e} at 8 points x 4 signals"),
    )
}

fn criterion_6() -> Outcome {
    let grid = UniformGrid::new(-4.0, 1.0 / 16.0, 128).unwrap();
    let mut fids = Vec::new();
    for kind in [TestSignal::Gaussian, TestSignal::TwoGaussian] {
        let q = signal(kind, grid);
        let provider = |xg: &UniformGrid, mu: f64, nu: f64| {
            tomogram_via_frft_with(&q, TomographyParams::new(mu, nu)?, *xg, FrftMethod::ChirpZ)
        };
        let corr = reconstruct_correlation(
            provider,
            grid,
            fractomo::tomography::default_mu_grid(),
            fractomo::tomography::default_x_grid(),
        )
        .unwrap();
        fids.push(fidelity(&reconstruct_signal(&corr).unwrap(), &q).unwrap());
    }

    let q = signal(TestSignal::Chirp, UniformGrid::default_physics());
    let mut phase: f64 = 0.0;
    for theta in [0.7, 2.0, -2.9] {
        let rotated = SampledSignal::new(
            *q.grid(),
            q.values().iter().map(|z| z * cis(theta)).collect(),
        )
        .unwrap();
        for (mu, nu) in [(0.4, 1.0), (-1.0, 0.3)] {
            let p = TomographyParams::new(mu, nu).unwrap();
            let xg = x_grid_for(mu, nu);
            let a = tomogram(&q, p, xg).unwrap();
            let b = tomogram(&rotated, p, xg).unwrap();
            phase = phase.max(a.max_abs_diff(&b).unwrap());
        }
    }
    check(
        fids[0] >= 0.99 && fids[1] >= 0.98 && phase <= 1e-12,
        format!(
            "fidelity gaussian {:.8}, two-gaussian {:.8}; phase invariance {phase:.1e}",
            fids[0], fids[1]
        ),
    )
}

fn criterion_7() -> Outcome {
    let grid = UniformGrid::default_physics();
    let freq = UniformGrid::new(-32.0, 1.0 / 16.0, 1024).unwrap();
    let xg = UniformGrid::spanning(-15.0, 15.0, 0.05).unwrap();
    let mut worst: f64 = 0.0;
    for kind in TestSignal::ALL {
        let q = signal(kind, grid);
        let wm = wigner_map(&q, freq);
        for (mu, nu) in [(0.0, 1.0), (0.6, 0.8), (-1.0, 0.5)] {
            let p = TomographyParams::new(mu, nu).unwrap();
            let slice = radon_slice(&wm, p, xg);
            worst = worst.max(slice.max_abs_diff(&tomogram(&q, p, xg).unwrap()).unwrap());
        }
    }

    // Closed form for the unit Gaussian: W(u, w) = exp(-2 pi u^2 - w^2 / (2 pi)) / pi.
    let wm = wigner_map(&signal(TestSignal::Gaussian, grid), freq);
    let mut analytic: f64 = 0.0;
    for i in (0..grid.count()).step_by(7) {
        for k in (0..freq.count()).step_by(5) {
            let (u, w) = (grid.point(i), freq.point(k));
            let exact = (-2.0 * PI * u * u - w * w / TAU).exp() / PI;
            analytic = analytic.max((wm.get(i, k) - exact).abs());
        }
    }
    check(
        worst <= 5e-3 && analytic <= 1e-6,
        format!("radon vs direct {worst:.1e}; gaussian closed form {analytic:.1e}"),
    )
}

fn criterion_8() -> Outcome {
    let cfg = OscillatorConfig::default();
    let t = PropagationTime::new(0.7);
    let fine = UniformGrid::default_physics();
    let coherent = |g: UniformGrid| cfg.ground_state(g, 1.0).unwrap();
    let residual = schrodinger_residual(&cfg, &coherent(fine), t, 1e-4).unwrap();

    let mut rs = Vec::new();
    for (step, count) in [(1.0 / 8.0, 128), (1.0 / 16.0, 256), (1.0 / 32.0, 512)] {
        let g = UniformGrid::new(-8.0, step, count).unwrap();
        rs.push(schrodinger_residual(&cfg, &coherent(g), t, step * 0.05).unwrap());
    }
    let orders: Vec<f64> = rs.windows(2).map(|w| (w[0] / w[1]).log2()).collect();
    let second = orders.iter().all(|p| (1.7..=2.3).contains(p));

    let psi = propagate(&cfg, &coherent(fine), t).unwrap();
    check(
        residual <= 1e-3 && second && (l2_norm(&psi) - 1.0).abs() < 1e-9,
        format!(
            "residual {residual:.1e}; refinement residuals {:?}, observed orders {:?}",
            rs.iter().map(|r| format!("{r:.2e}")).collect::<Vec<_>>(),
            orders.iter().map(|p| format!("{p:.2}")).collect::<Vec<_>>()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("FrFT special cases a=0, a=2, a=1", criterion_1),
        ("Green function equals FrFT kernel", criterion_2),
        ("unitarity, additivity and inversion", criterion_3),
        ("tomogram normalization", criterion_4),
        ("direct tomogram equals FrFT bridge", criterion_5),
        (
            "reconstruction round trip and phase invariance",
            criterion_6,
        ),
        ("Wigner Radon slices match tomograms", criterion_7),
        ("Schrodinger residual and convergence", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} criterion {} ({name}): {detail} [{secs:.1}s]", i + 1);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
