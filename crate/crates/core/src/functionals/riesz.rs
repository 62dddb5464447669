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

use rayon::prelude::*;

use super::kernel::riesz_multiplier;
use super::params::{sphere_area, ProblemParams};
use crate::error::{Error, Result};
use crate::spectral::{filter_real, Field};

/// Largest grid the O(M^(2N)) direct sum accepts without `force`.
pub const DIRECT_POINT_LIMIT: usize = 4096;

/// Spectral evaluation of `I_alpha * v` with the kernel selected in `params`.
pub fn riesz_convolve(v: &Field, params: &ProblemParams) -> Result<Field> {
    v.check_finite()?;
    Ok(riesz_convolve_unchecked(v, params))
}

pub(crate) fn riesz_convolve_unchecked(v: &Field, params: &ProblemParams) -> Field {
    let g = *v.grid();
    let table = riesz_multiplier(&g, params);
    Field::from_raw(g, filter_real(&g, v.values(), &table))
}

/// The Fourier multiplier used by [`riesz_convolve`], in frequency order.
pub fn riesz_symbol(grid: &crate::spectral::GridSpec, params: &ProblemParams) -> Vec<f64> {
    riesz_multiplier(grid, params).as_ref().clone()
}

/// Brute-force free-space quadrature of `I_alpha * v` at every sample.
///
/// Off-diagonal cells use the midpoint rule; the singular self cell is
/// replaced by the ball of equal volume, on which the kernel integrates to
/// `A sigma_(N-1) r_h^alpha / alpha`. No periodic images are summed. Each
/// output point is accumulated in a fixed order, so the result does not
/// depend on how rayon partitions the work.
pub fn riesz_convolve_direct(v: &Field, params: &ProblemParams, force: bool) -> Result<Field> {
    v.check_finite()?;
    let g = *v.grid();
    let n = g.len();
    if n > DIRECT_POINT_LIMIT && !force {
        return Err(Error::SizeGuard {
            points: n,
            limit: DIRECT_POINT_LIMIT,
        });
    }
    let dim = g.dim();
    let d = dim as f64;
    let alpha = params.alpha();
    let a = params.riesz_constant().value();
    let h = g.spacing();
    let h_n = g.cell_volume();
    let r_h = h * libm::tgamma(0.5 * d + 1.0).powf(1.0 / d) / std::f64::consts::PI.sqrt();
    let self_weight = a * sphere_area(dim) * r_h.powf(alpha) / alpha;
    let exponent = 0.5 * (alpha - d);

    let positions: Vec<[f64; 3]> = (0..n).map(|j| g.position(j)).collect();
    let values = v.values();
    let out: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|i| {
            let xi = positions[i];
            let mut acc = 0.0;
            for (j, xj) in positions.iter().enumerate() {
                if j == i || values[j] == 0.0 {
                    continue;
                }
                let r2: f64 = (0..dim).map(|ax| (xi[ax] - xj[ax]).powi(2)).sum();
                acc += r2.powf(exponent) * values[j];
            }
            a * acc * h_n + values[i] * self_weight
        })
        .collect();
    Ok(Field::from_raw(g, out))
}
