//! Non-uniform-scale discrete Fourier sums between two uniform grids.
//!
//! Computes `out_k = sum_j c_j exp(-i beta x_j y_k)` where `x_j` and `y_k`
//! live on arbitrary uniform grids. The direct form costs `N*M` complex
//! exponentials; the chirp-z form rewrites `j*k = (j^2 + k^2 - (k-j)^2)/2`
//! and evaluates the resulting convolution with a zero-padded FFT.

use std::cell::RefCell;

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;

use crate::grid::UniformGrid;

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

#[inline]
pub(crate) fn cis(phase: f64) -> Complex64 {
    let (s, c) = phase.sin_cos();
    Complex64::new(c, s)
}

/// Reference evaluation, one complex exponential per term.
pub fn scaled_dft_direct(
    input: &[Complex64],
    in_grid: &UniformGrid,
    out_grid: &UniformGrid,
    beta: f64,
) -> Vec<Complex64> {
    assert_eq!(input.len(), in_grid.count());
    (0..out_grid.count())
        .into_par_iter()
        .map(|k| {
            let y = out_grid.point(k);
            input
                .iter()
                .enumerate()
                .map(|(j, c)| c * cis(-beta * in_grid.point(j) * y))
                .sum()
        })
        .collect()
}

/// Bluestein evaluation of the same sum in `O((N + M) log(N + M))`.
pub fn scaled_dft_chirp_z(
    input: &[Complex64],
    in_grid: &UniformGrid,
    out_grid: &UniformGrid,
    beta: f64,
) -> Vec<Complex64> {
    let n = in_grid.count();
    let m = out_grid.count();
    assert_eq!(input.len(), n);
    let (x0, hx) = (in_grid.start(), in_grid.step());
    let (y0, hy) = (out_grid.start(), out_grid.step());
    let alpha = beta * hx * hy;
    let len = (n + m - 1).next_power_of_two();

    let mut a = vec![Complex64::new(0.0, 0.0); len];
    for (j, (slot, c)) in a.iter_mut().zip(input).enumerate() {
        let jf = j as f64;
        *slot = c * cis(-beta * y0 * hx * jf - 0.5 * alpha * jf * jf);
    }
    let mut b = vec![Complex64::new(0.0, 0.0); len];
    for (i, slot) in b.iter_mut().enumerate().take(m) {
        let f = i as f64;
        *slot = cis(0.5 * alpha * f * f);
    }
    for i in 1..n {
        let f = i as f64;
        b[len - i] = cis(0.5 * alpha * f * f);
    }

    PLANNER.with(|p| {
        let mut planner = p.borrow_mut();
        let fwd = planner.plan_fft_forward(len);
        let inv = planner.plan_fft_inverse(len);
        fwd.process(&mut a);
        fwd.process(&mut b);
        for (x, y) in a.iter_mut().zip(&b) {
            *x *= y;
        }
        inv.process(&mut a);
    });

    let scale = 1.0 / len as f64;
    (0..m)
        .map(|k| {
            let kf = k as f64;
            a[k] * scale * cis(-beta * x0 * y0 - beta * x0 * hy * kf - 0.5 * alpha * kf * kf)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    #[test]
    fn matches_plain_dft_on_reciprocal_grid() {
        let n = 16;
        let g = UniformGrid::new(0.0, 1.0, n).unwrap();
        let input: Vec<Complex64> = (0..n)
            .map(|j| Complex64::new(j as f64, -(j as f64).sqrt()))
            .collect();
        let beta = std::f64::consts::TAU / n as f64;
        let mut expect = input.clone();
        FftPlanner::new().plan_fft_forward(n).process(&mut expect);
        assert!(max_diff(&scaled_dft_chirp_z(&input, &g, &g, beta), &expect) < 1e-10);
        assert!(max_diff(&scaled_dft_direct(&input, &g, &g, beta), &expect) < 1e-10);
    }

    proptest! {
        #[test]
        fn chirp_z_agrees_with_direct(
            n in 2usize..40, m in 2usize..40,
            x0 in -5.0f64..5.0, hx in 0.01f64..0.5,
            y0 in -5.0f64..5.0, hy in 0.01f64..0.5,
            beta in -20.0f64..20.0,
            seed in 0u64..1000,
        ) {
            let gi = UniformGrid::new(x0, hx, n).unwrap();
            let go = UniformGrid::new(y0, hy, m).unwrap();
            let input: Vec<Complex64> = (0..n)
                .map(|j| {
                    let t = (seed as f64 + 1.3 * j as f64).sin();
                    Complex64::new(t, (t * 7.0).cos())
                })
                .collect();
            let d = scaled_dft_direct(&input, &gi, &go, beta);
            let f = scaled_dft_chirp_z(&input, &gi, &go, beta);
            prop_assert!(max_diff(&d, &f) < 1e-9 * n as f64);
        }
    }
}
