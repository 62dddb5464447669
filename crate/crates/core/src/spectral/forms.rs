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

//! Inner products, Bessel-type multipliers and the two quadratic forms.

use super::fft::{filter_real, weighted_power};
use super::field::{forward_transform, inverse_transform, Field};
use super::tables::symbol_tables;
use crate::error::Result;

/// `h^N sum_j u_j v_j`.
pub fn l2_inner(u: &Field, v: &Field) -> Result<f64> {
    u.ensure_same_grid(v)?;
    let s: f64 = u.values().iter().zip(v.values()).map(|(a, b)| a * b).sum();
    Ok(s * u.grid().cell_volume())
}

pub fn l2_norm(u: &Field) -> f64 {
    let s: f64 = u.values().iter().map(|a| a * a).sum();
    (s * u.grid().cell_volume()).sqrt()
}

/// `L^-N sum_k |U_k|^2`, the spectral side of the discrete Plancherel identity.
pub fn spectral_l2_sq(u: &Field) -> Result<f64> {
    let spec = forward_transform(u)?;
    let s: f64 = spec.coeffs().iter().map(|c| c.norm_sqr()).sum();
    Ok(s / u.grid().volume())
}

/// Applies `(1 + |xi|^2)^(1/2)`, the operator on the left of the equation.
pub fn sqrt_op(u: &Field) -> Result<Field> {
    let spec = forward_transform(u)?.apply_symbol(|xi| (1.0 + xi * xi).sqrt())?;
    inverse_transform(&spec)
}

/// Applies `(1 + |xi|^2)^(1/4)`, whose L2 norm is the H^(1/2) norm.
pub fn quarter_op(u: &Field) -> Result<Field> {
    let spec = forward_transform(u)?.apply_symbol(|xi| (1.0 + xi * xi).powf(0.25))?;
    inverse_transform(&spec)
}

/// Applies `(1 + |xi|^2)^(-1/2)`.
pub fn inv_sqrt_op(u: &Field) -> Result<Field> {
    let spec = forward_transform(u)?.apply_symbol(|xi| 1.0 / (1.0 + xi * xi).sqrt())?;
    inverse_transform(&spec)
}

/// `A(u) = L^-N sum_k (1 + |xi_k|^2)^(1/2) |U_k|^2`.
pub fn quadratic_form_a(u: &Field) -> f64 {
    let g = u.grid();
    let t = symbol_tables(g);
    weighted_power(g, u.values(), &t.sqrt_op) * g.cell_volume() / g.len() as f64
}

/// `B(u) = L^-N sum_k |xi_k|^2 (1 + |xi_k|^2)^(-1/2) |U_k|^2`.
pub fn quadratic_form_b(u: &Field) -> f64 {
    let g = u.grid();
    let t = symbol_tables(g);
    weighted_power(g, u.values(), &t.dilation) * g.cell_volume() / g.len() as f64
}

// Table-driven variants used in the solver loop; inputs are trusted finite.

pub(crate) fn sqrt_op_fast(u: &Field) -> Field {
    let g = *u.grid();
    let t = symbol_tables(&g);
    Field::from_raw(g, filter_real(&g, u.values(), &t.sqrt_op))
}

pub(crate) fn inv_sqrt_op_fast(u: &Field) -> Field {
    let g = *u.grid();
    let t = symbol_tables(&g);
    Field::from_raw(g, filter_real(&g, u.values(), &t.inv_sqrt_op))
}
