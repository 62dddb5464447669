// Copyright 2026 The choquard developers
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

//! Fourier coefficients of the Riesz kernel on the periodic box.
//!
//! For the ball-truncated kernel `A |x|^(alpha-N) 1{|x| < R}` the radial
//! transform reduces to
//!
//! ```text
//! K(rho) = A sigma_(N-1) rho^-alpha F(rho R),   F(X) = int_0^X t^(alpha-1) phi_N(t) dt
//! ```
//!
//! with `phi_1 = cos`, `phi_2 = J_0` and `phi_3 = sin(t)/t`. With `R = L/2`
//! the argument `rho R = pi |k|` depends only on the integer wave vector,
//! so the table rescales exactly as `L^alpha` when the box is dilated.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

use super::params::{sphere_area, ProblemParams, RieszConstant, RieszKernel};
use crate::spectral::GridSpec;

const GAUSS_ORDER: usize = 16;
const SERIES_CUTOFF: f64 = 1.0;

/// Multiplier table for `params` on `grid`, in frequency storage order.
pub(crate) fn riesz_multiplier(grid: &GridSpec, params: &ProblemParams) -> Arc<Vec<f64>> {
    type Key = (GridSpec, u64, RieszKernel);
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<Vec<f64>>>>> = OnceLock::new();
    let key = (*grid, params.alpha().to_bits(), params.kernel());
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return t.clone();
    }
    let table = Arc::new(match params.kernel() {
        RieszKernel::Truncated => truncated_table(grid, params.alpha()),
        RieszKernel::MeanFree => mean_free_table(grid, params.alpha()),
    });
    cache
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert(key, table.clone());
    table
}

fn mean_free_table(grid: &GridSpec, alpha: f64) -> Vec<f64> {
    grid.xi_sq()
        .into_iter()
        .map(|s| if s == 0.0 { 0.0 } else { s.powf(-0.5 * alpha) })
        .collect()
}

fn truncated_table(grid: &GridSpec, alpha: f64) -> Vec<f64> {
    let dim = grid.dim();
    let n2 = grid.wave_number_sq();
    let mut distinct: Vec<u64> = n2.iter().copied().filter(|&n| n > 0).collect();
    distinct.sort_unstable();
    distinct.dedup();

    let args: Vec<f64> = distinct.iter().map(|&n| PI * (n as f64).sqrt()).collect();
    let integrals = cumulative_radial_integrals(dim, alpha, &args);
    let prefactor = RieszConstant::new(dim, alpha).value() * sphere_area(dim);
    let radius = 0.5 * grid.box_len();
    let rho_unit = 2.0 * PI / grid.box_len();

    let mut values: HashMap<u64, f64> = distinct
        .iter()
        .zip(&integrals)
        .map(|(&n, &f)| {
            let rho = rho_unit * (n as f64).sqrt();
            (n, prefactor * rho.powf(-alpha) * f)
        })
        .collect();
    values.insert(0, prefactor * radius.powf(alpha) / alpha);
    n2.iter().map(|n| values[n]).collect()
}

/// Power series of `phi_N` around zero: coefficient of `t^(2k)`.
fn series_coefficient(dim: usize, k: usize) -> f64 {
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let fact = |n: usize| (1..=n).fold(1.0, |acc, i| acc * i as f64);
    match dim {
        1 => sign / fact(2 * k),
        2 => sign / (4f64.powi(k as i32) * fact(k) * fact(k)),
        _ => sign / fact(2 * k + 1),
    }
}

fn phi(dim: usize, t: f64) -> f64 {
    match dim {
        1 => t.cos(),
        2 => libm::j0(t),
        _ => t.sin() / t,
    }
}

/// `int_0^a t^(alpha-1) phi(t) dt` by termwise integration, for `a <= 1`.
fn series_integral(dim: usize, alpha: f64, a: f64) -> f64 {
    let mut sum = 0.0;
    for k in 0..30 {
        let e = alpha + 2.0 * k as f64;
        let term = series_coefficient(dim, k) * a.powf(e) / e;
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// `F(X)` for each `X` in the ascending list `args`.
pub(crate) fn cumulative_radial_integrals(dim: usize, alpha: f64, args: &[f64]) -> Vec<f64> {
    let (nodes, weights) = gauss_legendre(GAUSS_ORDER);
    let integrand = |t: f64| t.powf(alpha - 1.0) * phi(dim, t);
    let panel = |a: f64, b: f64| -> f64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        nodes
            .iter()
            .zip(&weights)
            .map(|(&x, &w)| w * integrand(mid + half * x))
            .sum::<f64>()
            * half
    };

    let mut out = Vec::with_capacity(args.len());
    let mut total = 0.0;
    let mut pos = 0.0;
    for &x in args {
        debug_assert!(x >= pos);
        if pos < SERIES_CUTOFF {
            let a = x.min(SERIES_CUTOFF);
            total = series_integral(dim, alpha, a);
            pos = a;
        }
        while pos < x {
            let next = (pos + 1.0).min(x);
            total += panel(pos, next);
            pos = next;
        }
        out.push(total);
    }
    out
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadrature_integrates_polynomials() {
        let (x, w) = gauss_legendre(GAUSS_ORDER);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        let m30: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(30)).sum();
        assert!((m30 - 2.0 / 31.0).abs() < 1e-14);
    }

    #[test]
    fn radial_integrals_closed_forms() {
        let xs = [0.5, PI, 2.0 * PI, 7.3, 40.0];
        // N = 1, alpha = 1: int cos = sin X
        let f = cumulative_radial_integrals(1, 1.0, &xs);
        for (x, v) in xs.iter().zip(&f) {
            assert!((v - x.sin()).abs() < 1e-14, "{x}");
        }
        // N = 3, alpha = 2: int sin = 1 - cos X
        let f = cumulative_radial_integrals(3, 2.0, &xs);
        for (x, v) in xs.iter().zip(&f) {
            assert!((v - (1.0 - x.cos())).abs() < 1e-13, "{x}");
        }
        // N = 3, alpha = 1: sine integral, Si(pi)
        let f = cumulative_radial_integrals(3, 1.0, &[PI]);
        assert!((f[0] - 1.851_937_051_982_466_2).abs() < 1e-14);
    }

    #[test]
    fn bessel_integral_reference_values() {
        // int_0^X J0(t) dt from an independent adaptive quadrature
        let f = cumulative_radial_integrals(2, 1.0, &[PI, 10.0, 100.0]);
        assert!((f[0] - 1.347_526_314_673_990_2).abs() < 1e-12, "{}", f[0]);
        assert!((f[1] - 1.067_011_303_956_736_8).abs() < 1e-12, "{}", f[1]);
        assert!((f[2] - 0.922_662_556_960_166).abs() < 1e-11, "{}", f[2]);
    }

    #[test]
    fn singular_weight_series() {
        // N = 1, alpha = 1/2: int_0^X t^-1/2 cos t = sqrt(2 pi) C(sqrt(2X/pi)), Fresnel C
        let f = cumulative_radial_integrals(1, 0.5, &[0.5, 7.3]);
        assert!((f[0] - 1.379_265_075_868_429_5).abs() < 1e-13, "{}", f[0]);
        assert!((f[1] - 1.551_596_539_973_304_3).abs() < 1e-13, "{}", f[1]);
    }
}
