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
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A periodic box `[-L/2, L/2)^N` sampled by `M` points per axis.
///
/// Samples sit at `x_j = -L/2 + j h` with `h = L / M`. Frequencies use the
/// usual FFT wrap order: index `k` maps to the signed integer `k` for
/// `k < M/2` and `k - M` otherwise, and to the angular frequency
/// `2 pi k / L`. Values are stored row-major, last axis fastest.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct GridSpec {
    dim: usize,
    points: usize,
    #[serde(rename = "box")]
    box_len: f64,
}

impl GridSpec {
    pub const MIN_POINTS: usize = 8;

    pub fn new(dim: usize, points: usize, box_len: f64) -> Result<Self> {
        if !(1..=3).contains(&dim) {
            return Err(Error::InvalidGrid(format!("dimension {dim} not in 1..=3")));
        }
        if points < Self::MIN_POINTS || !points.is_multiple_of(2) {
            return Err(Error::InvalidGrid(format!(
                "points per axis must be even and >= {}, got {points}",
                Self::MIN_POINTS
            )));
        }
        if !(box_len.is_finite() && box_len > 0.0) {
            return Err(Error::InvalidGrid(format!("box length must be positive, got {box_len}")));
        }
        points
            .checked_pow(dim as u32)
            .filter(|n| n.checked_mul(16).is_some())
            .ok_or_else(|| Error::InvalidGrid(format!("{points}^{dim} points do not fit in memory")))?;
        Ok(GridSpec { dim, points, box_len })
    }

    /// Re-checks the invariants, for values that arrived through serde.
    pub fn validated(self) -> Result<Self> {
        GridSpec::new(self.dim, self.points, self.box_len)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn box_len(&self) -> f64 {
        self.box_len
    }

    /// Total number of samples, `M^N`.
    pub fn len(&self) -> usize {
        self.points.pow(self.dim as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> f64 {
        self.box_len / self.points as f64
    }

    /// Quadrature weight `h^N`.
    pub fn cell_volume(&self) -> f64 {
        self.spacing().powi(self.dim as i32)
    }

    /// Box volume `L^N`.
    pub fn volume(&self) -> f64 {
        self.box_len.powi(self.dim as i32)
    }

    /// The same lattice on a box scaled by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        GridSpec::new(self.dim, self.points, self.box_len * factor)
    }

    /// Coordinate of sample `j` along any axis.
    pub fn coord(&self, j: usize) -> f64 {
        -0.5 * self.box_len + j as f64 * self.spacing()
    }

    /// Signed wave number for FFT index `k`.
    pub fn wave_number(&self, k: usize) -> i64 {
        if k < self.points / 2 {
            k as i64
        } else {
            k as i64 - self.points as i64
        }
    }

    /// Angular frequency `2 pi k~ / L` for FFT index `k`.
    pub fn frequency(&self, k: usize) -> f64 {
        2.0 * PI / self.box_len * self.wave_number(k) as f64
    }

    pub(crate) fn strides(&self) -> [usize; 3] {
        let m = self.points;
        match self.dim {
            1 => [1, 0, 0],
            2 => [m, 1, 0],
            _ => [m * m, m, 1],
        }
    }

    /// Multi-index of a flat position.
    pub fn unflatten(&self, mut flat: usize) -> [usize; 3] {
        let mut idx = [0usize; 3];
        for axis in (0..self.dim).rev() {
            idx[axis] = flat % self.points;
            flat /= self.points;
        }
        idx
    }

    pub fn flatten(&self, idx: &[usize]) -> usize {
        idx.iter()
            .take(self.dim)
            .fold(0, |acc, &i| acc * self.points + i)
    }

    /// Position of a flat sample index.
    pub fn position(&self, flat: usize) -> [f64; 3] {
        let idx = self.unflatten(flat);
        let mut x = [0.0; 3];
        for axis in 0..self.dim {
            x[axis] = self.coord(idx[axis]);
        }
        x
    }

    /// Integer `|k~|^2` for every frequency, in storage order.
    pub fn wave_number_sq(&self) -> Vec<u64> {
        (0..self.len())
            .map(|flat| {
                let idx = self.unflatten(flat);
                (0..self.dim)
                    .map(|a| {
                        let k = self.wave_number(idx[a]);
                        (k * k) as u64
                    })
                    .sum()
            })
            .collect()
    }

    /// `|xi_k|^2` for every frequency, in storage order.
    pub fn xi_sq(&self) -> Vec<f64> {
        let scale = (2.0 * PI / self.box_len).powi(2);
        self.wave_number_sq()
            .into_iter()
            .map(|n| scale * n as f64)
            .collect()
    }

    pub(crate) fn key(&self) -> (usize, usize, u64) {
        (self.dim, self.points, self.box_len.to_bits())
    }
}

impl PartialEq for GridSpec {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for GridSpec {}

impl Hash for GridSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state)
    }
}

impl std::fmt::Display for GridSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "N={} M={} L={}", self.dim, self.points, self.box_len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_grids() {
        assert!(GridSpec::new(0, 16, 1.0).is_err());
        assert!(GridSpec::new(4, 16, 1.0).is_err());
        assert!(GridSpec::new(2, 6, 1.0).is_err());
        assert!(GridSpec::new(2, 17, 1.0).is_err());
        assert!(GridSpec::new(2, 16, 0.0).is_err());
        assert!(GridSpec::new(2, 16, f64::NAN).is_err());
    }

    #[test]
    fn lattice_geometry() {
        let g = GridSpec::new(2, 16, 8.0).unwrap();
        assert_eq!(g.len(), 256);
        assert_eq!(g.spacing(), 0.5);
        assert_eq!(g.coord(0), -4.0);
        assert_eq!(g.coord(8), 0.0);
        assert_eq!(g.wave_number(7), 7);
        assert_eq!(g.wave_number(8), -8);
        assert_eq!(g.wave_number(15), -1);
        let flat = g.flatten(&[3, 5]);
        assert_eq!(flat, 3 * 16 + 5);
        assert_eq!(&g.unflatten(flat)[..2], &[3, 5]);
    }
}
