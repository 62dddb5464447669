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

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::fft::{fft_nd, origin_phase, Direction};
use super::grid::GridSpec;
use crate::error::{Error, Result};

/// Relative tolerance on the imaginary residue of an inverse transform.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Real samples of a function on a [`GridSpec`], row-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Field {
    grid: GridSpec,
    values: Vec<f64>,
}

/// Fourier coefficients `U(xi_k) = h^N sum_j u(x_j) exp(-i xi_k . x_j)`,
/// stored in FFT wrap order.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralField {
    grid: GridSpec,
    coeffs: Vec<Complex64>,
}

impl Field {
    pub fn new(grid: GridSpec, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidGrid(format!(
                "expected {} samples, got {}",
                grid.len(),
                values.len()
            )));
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Field { grid, values })
    }

    /// Builds a field without checking finiteness. Length is still asserted.
    pub(crate) fn from_raw(grid: GridSpec, values: Vec<f64>) -> Self {
        assert_eq!(values.len(), grid.len());
        Field { grid, values }
    }

    pub fn zeros(grid: GridSpec) -> Self {
        Field {
            grid,
            values: vec![0.0; grid.len()],
        }
    }

    pub fn constant(grid: GridSpec, c: f64) -> Self {
        Field {
            grid,
            values: vec![c; grid.len()],
        }
    }

    /// Samples `f(x)` at every grid point; `x` carries `dim` meaningful entries.
    pub fn from_fn(grid: GridSpec, f: impl Fn(&[f64]) -> f64) -> Self {
        let values = (0..grid.len())
            .map(|flat| {
                let x = grid.position(flat);
                f(&x[..grid.dim()])
            })
            .collect();
        Field { grid, values }
    }

    /// `amplitude * exp(-|x - center|^2 / width^2)` with `center` taken
    /// as a displacement in the periodic box.
    pub fn gaussian(grid: GridSpec, center: &[f64], width: f64, amplitude: f64) -> Self {
        let l = grid.box_len();
        Field::from_fn(grid, |x| {
            let r2: f64 = x
                .iter()
                .enumerate()
                .map(|(a, &xa)| {
                    let c = center.get(a).copied().unwrap_or(0.0);
                    let d = xa - c;
                    let d = d - l * (d / l).round();
                    d * d
                })
                .sum();
            amplitude * (-r2 / (width * width)).exp()
        })
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn check_finite(&self) -> Result<()> {
        match self.values.iter().position(|v| !v.is_finite()) {
            Some(index) => Err(Error::NonFinite { index }),
            None => Ok(()),
        }
    }

    pub fn ensure_same_grid(&self, other: &Field) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch {
                left: self.grid.to_string(),
                right: other.grid.to_string(),
            });
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0.0)
    }

    pub fn scaled(&self, t: f64) -> Field {
        self.map(|v| t * v)
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Field {
        Field {
            grid: self.grid,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    /// `self + t * other`.
    pub fn axpy(&self, t: f64, other: &Field) -> Result<Field> {
        self.ensure_same_grid(other)?;
        Ok(Field {
            grid: self.grid,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + t * b)
                .collect(),
        })
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Flat index of the largest `|u|` (first one on ties).
    pub fn argmax_abs(&self) -> usize {
        let mut best = 0;
        for (i, v) in self.values.iter().enumerate() {
            if v.abs() > self.values[best].abs() {
                best = i;
            }
        }
        best
    }

    /// Circular shift: the output at index `j` is the input at `j - shift`.
    pub fn shifted(&self, shift: &[i64]) -> Field {
        let m = self.grid.points() as i64;
        let dim = self.grid.dim();
        let mut out = vec![0.0; self.values.len()];
        for (flat, &v) in self.values.iter().enumerate() {
            let idx = self.grid.unflatten(flat);
            let mut target = [0usize; 3];
            for a in 0..dim {
                let s = shift.get(a).copied().unwrap_or(0);
                target[a] = (idx[a] as i64 + s).rem_euclid(m) as usize;
            }
            out[self.grid.flatten(&target[..dim])] = v;
        }
        Field {
            grid: self.grid,
            values: out,
        }
    }

    /// Same samples reinterpreted on another grid with the same lattice shape.
    pub fn regridded(&self, grid: GridSpec) -> Result<Field> {
        if grid.dim() != self.grid.dim() || grid.points() != self.grid.points() {
            return Err(Error::GridMismatch {
                left: self.grid.to_string(),
                right: grid.to_string(),
            });
        }
        Ok(Field {
            grid,
            values: self.values.clone(),
        })
    }
}

impl SpectralField {
    pub fn new(grid: GridSpec, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != grid.len() {
            return Err(Error::InvalidGrid(format!(
                "expected {} coefficients, got {}",
                grid.len(),
                coeffs.len()
            )));
        }
        if let Some(index) = coeffs.iter().position(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(Error::NonFinite { index });
        }
        Ok(SpectralField { grid, coeffs })
    }

    pub fn zeros(grid: GridSpec) -> Self {
        SpectralField {
            grid,
            coeffs: vec![Complex64::default(); grid.len()],
        }
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Flat index of the frequency `-k` (mod M) for flat index `k`.
    pub fn mirror_index(&self, flat: usize) -> usize {
        let m = self.grid.points();
        let idx = self.grid.unflatten(flat);
        let mut neg = [0usize; 3];
        for a in 0..self.grid.dim() {
            neg[a] = (m - idx[a]) % m;
        }
        self.grid.flatten(&neg[..self.grid.dim()])
    }

    /// `max_k |U(-k) - conj U(k)| / max_k |U(k)|` (zero for the zero field).
    pub fn hermitian_defect(&self) -> f64 {
        let scale = self.coeffs.iter().fold(0.0f64, |m, c| m.max(c.norm()));
        if scale == 0.0 {
            return 0.0;
        }
        let worst = (0..self.coeffs.len())
            .map(|k| (self.coeffs[self.mirror_index(k)] - self.coeffs[k].conj()).norm())
            .fold(0.0f64, f64::max);
        worst / scale
    }

    /// Multiplies every coefficient by `m(|xi_k|)`.
    pub fn apply_symbol(&self, m: impl Fn(f64) -> f64) -> Result<SpectralField> {
        let xi_sq = self.grid.xi_sq();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (index, (c, s)) in self.coeffs.iter().zip(xi_sq).enumerate() {
            let factor = m(s.sqrt());
            if !factor.is_finite() {
                return Err(Error::BadMultiplier { index });
            }
            coeffs.push(c * factor);
        }
        Ok(SpectralField {
            grid: self.grid,
            coeffs,
        })
    }
}

/// Quadrature approximation of the continuum transform `int u exp(-i xi.x) dx`.
pub fn forward_transform(u: &Field) -> Result<SpectralField> {
    u.check_finite()?;
    let grid = u.grid;
    let mut buf: Vec<Complex64> = u.values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    fft_nd(&grid, &mut buf, Direction::Forward);
    let h_n = grid.cell_volume();
    for (k, c) in buf.iter_mut().enumerate() {
        *c *= h_n * origin_phase(&grid, k);
    }
    Ok(SpectralField { grid, coeffs: buf })
}

/// `u(x_j) = L^-N sum_k U_k exp(i xi_k . x_j)`, rejecting inputs whose
/// imaginary residue exceeds [`HERMITIAN_TOL`] relative to the output size.
pub fn inverse_transform(spec: &SpectralField) -> Result<Field> {
    let grid = spec.grid;
    let mut buf: Vec<Complex64> = spec
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| c * origin_phase(&grid, k))
        .collect();
    fft_nd(&grid, &mut buf, Direction::Inverse);
    let scale = 1.0 / grid.volume();
    let re_max = buf.iter().fold(0.0f64, |m, c| m.max(c.re.abs()));
    let im_max = buf.iter().fold(0.0f64, |m, c| m.max(c.im.abs()));
    let magnitude = re_max.max(im_max);
    if magnitude > 0.0 && im_max > HERMITIAN_TOL * magnitude {
        return Err(Error::NotHermitian {
            residue: im_max / magnitude,
        });
    }
    Ok(Field {
        grid,
        values: buf.iter().map(|c| c.re * scale).collect(),
    })
}
