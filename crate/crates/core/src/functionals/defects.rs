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

use serde::{Deserialize, Serialize};

use super::params::ProblemParams;
use super::riesz::riesz_convolve_unchecked;
use crate::error::{Error, Result};
use crate::spectral::{quadratic_form_a, quadratic_form_b, sqrt_op_fast, Field};

/// `|u|^p` sample-wise.
pub(crate) fn abs_pow(u: &Field, p: f64) -> Field {
    u.map(|v| v.abs().powf(p))
}

/// `|u|^(p-2) u = sign(u) |u|^(p-1)`, zero where `u` vanishes.
fn odd_pow(v: f64, p: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v.signum() * v.abs().powf(p - 1.0)
    }
}

/// The nonlocal term `(I_alpha * |u|^p) |u|^(p-2) u` on the right of the equation.
pub fn choquard_term(u: &Field, params: &ProblemParams) -> Result<Field> {
    u.check_finite()?;
    Ok(choquard_term_unchecked(u, params))
}

pub(crate) fn choquard_term_unchecked(u: &Field, params: &ProblemParams) -> Field {
    let p = params.p();
    let potential = riesz_convolve_unchecked(&abs_pow(u, p), params);
    let vals = potential
        .values()
        .iter()
        .zip(u.values())
        .map(|(&w, &v)| w * odd_pow(v, p))
        .collect();
    Field::from_raw(*u.grid(), vals)
}

/// `D(u) = int (I_alpha * |u|^p) |u|^p`, reported raw (see [`RieszKernel`](super::RieszKernel)).
pub fn dterm(u: &Field, params: &ProblemParams) -> Result<f64> {
    u.check_finite()?;
    Ok(dterm_unchecked(u, params))
}

pub(crate) fn dterm_unchecked(u: &Field, params: &ProblemParams) -> f64 {
    let density = abs_pow(u, params.p());
    pairing(&density, params)
}

/// `h^N sum_j (I_alpha * f)_j f_j`.
fn pairing(f: &Field, params: &ProblemParams) -> f64 {
    let w = riesz_convolve_unchecked(f, params);
    let s: f64 = w.values().iter().zip(f.values()).map(|(a, b)| a * b).sum();
    s * f.grid().cell_volume()
}

/// `K(u) = 2p (I_alpha * |u|^p) |u|^(p-2) u`, the L2 gradient of [`dterm`].
pub fn dterm_gradient(u: &Field, params: &ProblemParams) -> Result<Field> {
    let two_p = 2.0 * params.p();
    Ok(choquard_term(u, params)?.scaled(two_p))
}

/// `S(u) = A(u)/2 - D(u)/(2p)`.
pub fn action(u: &Field, params: &ProblemParams) -> Result<f64> {
    let d = dterm(u, params)?;
    Ok(0.5 * quadratic_form_a(u) - d / (2.0 * params.p()))
}

fn normalized(defect: f64, a: f64) -> f64 {
    defect / a.max(f64::MIN_POSITIVE)
}

/// `(A(u) - D(u)) / A(u)`: vanishes on solutions (pairing with `u`).
pub fn nehari_defect(u: &Field, params: &ProblemParams) -> Result<f64> {
    let a = quadratic_form_a(u);
    let d = dterm(u, params)?;
    Ok(normalized(a - d, a))
}

/// Dilation derivative of the action, normalized by `A(u)`:
///
/// `P(u) = (N A(u) - B(u)) / 2 - (N + alpha) D(u) / (2p)`.
///
/// With `u_s(x) = u(x/s)`, `A(u_s)` has derivative `N A - B` at `s = 1` and
/// `D(u_s) = s^(N+alpha) D(u)`, so `P(u) = d/ds S(u_s)` at `s = 1`.
pub fn pohozaev_defect(u: &Field, params: &ProblemParams) -> Result<f64> {
    let n = u.grid().dim() as f64;
    let a = quadratic_form_a(u);
    let b = quadratic_form_b(u);
    let d = dterm(u, params)?;
    let p = 0.5 * (n * a - b) - (n + params.alpha()) / (2.0 * params.p()) * d;
    Ok(normalized(p, a))
}

/// `D(v) / (int |v|^(2Np/(N+alpha)))^((N+alpha)/N)`, bounded above by HLS.
pub fn hls_ratio(v: &Field, params: &ProblemParams) -> Result<f64> {
    v.check_finite()?;
    if v.is_zero() {
        return Err(Error::ZeroField);
    }
    let n = v.grid().dim() as f64;
    let q = params.hls_exponent();
    let s: f64 = v.values().iter().map(|x| x.abs().powf(q)).sum();
    let lq = s * v.grid().cell_volume();
    Ok(dterm_unchecked(v, params) / lq.powf((n + params.alpha()) / n))
}

/// `|D(w + g_m) - D(g_m) - D(w)|` with `g_m` the circular shift of `g` by
/// `shift` cells along the first axis.
pub fn brezis_lieb_gap(w: &Field, g: &Field, shift: usize, params: &ProblemParams) -> Result<f64> {
    w.ensure_same_grid(g)?;
    w.check_finite()?;
    g.check_finite()?;
    if shift >= w.grid().points() {
        return Err(Error::InvalidParams(format!(
            "shift {shift} outside [0, {})",
            w.grid().points()
        )));
    }
    let gm = g.shifted(&[shift as i64]);
    let wm = w.axpy(1.0, &gm)?;
    let d_wm = dterm_unchecked(&wm, params);
    let d_gm = dterm_unchecked(&gm, params);
    let d_w = dterm_unchecked(w, params);
    Ok((d_wm - d_gm - d_w).abs())
}

/// `||sqrt_op u - (I_alpha * |u|^p)|u|^(p-2)u|| / ||sqrt_op u||` in L2.
pub fn equation_residual(u: &Field, params: &ProblemParams) -> Result<f64> {
    u.check_finite()?;
    let lhs = sqrt_op_fast(u);
    let rhs = choquard_term_unchecked(u, params);
    Ok(relative_gap(&lhs, &rhs, 1.0))
}

/// `||a - t b|| / ||a||`, zero when `a` vanishes.
pub(crate) fn relative_gap(a: &Field, b: &Field, t: f64) -> f64 {
    let (num, den) = a
        .values()
        .iter()
        .zip(b.values())
        .fold((0.0, 0.0), |(n, d), (&x, &y)| (n + (x - t * y).powi(2), d + x * x));
    if den == 0.0 {
        0.0
    } else {
        (num / den).sqrt()
    }
}

/// Residual and identity defects of a candidate solution.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificates {
    pub residual: f64,
    pub nehari: f64,
    pub pohozaev: f64,
}

pub fn certify(u: &Field, params: &ProblemParams) -> Result<Certificates> {
    Ok(Certificates {
        residual: equation_residual(u, params)?,
        nehari: nehari_defect(u, params)?,
        pohozaev: pohozaev_defect(u, params)?,
    })
}
