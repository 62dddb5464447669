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

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How the Riesz potential is realized on the periodic box.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RieszKernel {
    /// The free-space kernel cut off at radius `L/2` and periodized. Its
    /// Fourier coefficients are the exact transform of the truncated kernel,
    /// so interactions closer than `L/2` are reproduced without image or
    /// zero-mode offsets.
    #[default]
    Truncated,
    /// The bare multiplier `|xi|^-alpha` with the `xi = 0` mode dropped.
    MeanFree,
}

/// Exponent data `(alpha, p)` in dimension `N` together with the
/// existence and nonexistence thresholds in `p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProblemParams {
    dim: usize,
    alpha: f64,
    p: f64,
    kernel: RieszKernel,
}

impl ProblemParams {
    pub fn new(dim: usize, alpha: f64, p: f64) -> Result<Self> {
        Self::with_kernel(dim, alpha, p, RieszKernel::default())
    }

    pub fn with_kernel(dim: usize, alpha: f64, p: f64, kernel: RieszKernel) -> Result<Self> {
        if !(1..=3).contains(&dim) {
            return Err(Error::InvalidParams(format!("dimension {dim} not in 1..=3")));
        }
        let n = dim as f64;
        if !(alpha > 0.0 && alpha < n) {
            return Err(Error::InvalidParams(format!("alpha = {alpha} must lie in (0, {n})")));
        }
        if !(p.is_finite() && p > 1.0) {
            return Err(Error::InvalidParams(format!("p = {p} must exceed 1")));
        }
        Ok(ProblemParams {
            dim,
            alpha,
            p,
            kernel,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn kernel(&self) -> RieszKernel {
        self.kernel
    }

    /// `(N + alpha) / N`: ground states exist strictly above this.
    pub fn p_lower_exist(&self) -> f64 {
        (self.dim as f64 + self.alpha) / self.dim as f64
    }

    /// `(N + alpha) / (N - 1)`: no solutions at or above this (infinite for N = 1).
    pub fn p_upper(&self) -> f64 {
        let n = self.dim as f64;
        if self.dim == 1 {
            f64::INFINITY
        } else {
            (n + self.alpha) / (n - 1.0)
        }
    }

    /// `(N + alpha) / (N + 1)`: no solutions at or below this.
    pub fn p_lower_nonexist(&self) -> f64 {
        let n = self.dim as f64;
        (n + self.alpha) / (n + 1.0)
    }

    pub fn in_existence_window(&self) -> bool {
        self.p > self.p_lower_exist() && self.p < self.p_upper()
    }

    /// True when `p` is covered by the nonexistence statement.
    pub fn in_nonexistence_range(&self) -> bool {
        self.p <= self.p_lower_nonexist() || self.p >= self.p_upper()
    }

    /// Exponent `2Np / (N + alpha)` of the Lebesgue norm in the HLS bound.
    pub fn hls_exponent(&self) -> f64 {
        2.0 * self.dim as f64 * self.p / (self.dim as f64 + self.alpha)
    }

    pub fn riesz_constant(&self) -> RieszConstant {
        RieszConstant::new(self.dim, self.alpha)
    }
}

/// `A_{N,alpha} = Gamma((N - alpha)/2) / (2^alpha pi^(N/2) Gamma(alpha/2))`,
/// the normalization making `A |x|^(alpha - N)` transform to `|xi|^-alpha`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RieszConstant(f64);

impl RieszConstant {
    pub fn new(dim: usize, alpha: f64) -> Self {
        let n = dim as f64;
        let value = libm::tgamma(0.5 * (n - alpha))
            / (2f64.powf(alpha) * PI.powf(0.5 * n) * libm::tgamma(0.5 * alpha));
        RieszConstant(value)
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

/// Surface area of the unit sphere in `R^N`, `2 pi^(N/2) / Gamma(N/2)`.
pub fn sphere_area(dim: usize) -> f64 {
    let n = dim as f64;
    2.0 * PI.powf(0.5 * n) / libm::tgamma(0.5 * n)
}
