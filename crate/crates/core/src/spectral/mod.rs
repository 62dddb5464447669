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

//! Fields on a periodic box and exact Fourier multipliers.
//!
//! Transform convention: `U(xi) = int u(x) exp(-i xi.x) dx` with angular
//! frequency, discretized as `h^N sum_j u(x_j) exp(-i xi_k . x_j)` over the
//! physical sample positions. Under this convention the operator
//! `(-Delta + 1)^(1/2)` has symbol `(1 + |xi|^2)^(1/2)`.

mod fft;
mod field;
mod forms;
mod grid;
pub(crate) mod tables;

pub(crate) use fft::filter_real;
pub use field::{forward_transform, inverse_transform, Field, SpectralField, HERMITIAN_TOL};
pub(crate) use forms::{inv_sqrt_op_fast, sqrt_op_fast};
pub use forms::{
    inv_sqrt_op, l2_inner, l2_norm, quadratic_form_a, quadratic_form_b, quarter_op,
    spectral_l2_sq, sqrt_op,
};
pub use grid::GridSpec;
