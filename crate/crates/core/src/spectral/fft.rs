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

//! N-dimensional complex FFT over row-major grids.
//!
//! Plans come from one process-wide `FftPlanner` behind a mutex; each call
//! runs sequentially over lines, so results do not depend on the thread
//! count.

use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use super::grid::GridSpec;

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Direction {
    Forward,
    Inverse,
}

fn plan(len: usize, dir: Direction) -> Arc<dyn Fft<f64>> {
    static PLANNER: OnceLock<Mutex<FftPlanner<f64>>> = OnceLock::new();
    let planner = PLANNER.get_or_init(|| Mutex::new(FftPlanner::new()));
    let mut planner = planner.lock().unwrap_or_else(|e| e.into_inner());
    match dir {
        Direction::Forward => planner.plan_fft_forward(len),
        Direction::Inverse => planner.plan_fft_inverse(len),
    }
}

/// Unnormalized in-place DFT along every axis.
pub(crate) fn fft_nd(grid: &GridSpec, data: &mut [Complex64], dir: Direction) {
    let m = grid.points();
    debug_assert_eq!(data.len(), grid.len());
    let fft = plan(m, dir);
    let mut scratch = vec![Complex64::default(); fft.get_inplace_scratch_len()];
    let strides = grid.strides();
    let mut line = vec![Complex64::default(); m];
    for &stride in &strides[..grid.dim()] {
        if stride == 1 {
            fft.process_with_scratch(data, &mut scratch);
            continue;
        }
        let block = stride * m;
        for start in (0..data.len()).step_by(block) {
            for offset in 0..stride {
                let base = start + offset;
                for (j, slot) in line.iter_mut().enumerate() {
                    *slot = data[base + j * stride];
                }
                fft.process_with_scratch(&mut line, &mut scratch);
                for (j, value) in line.iter().enumerate() {
                    data[base + j * stride] = *value;
                }
            }
        }
    }
}

/// `(-1)^(k_1 + ... + k_N)`: the phase from the sample origin at `-L/2`.
pub(crate) fn origin_phase(grid: &GridSpec, flat: usize) -> f64 {
    let idx = grid.unflatten(flat);
    let parity: usize = idx.iter().take(grid.dim()).sum();
    if parity.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Applies a real multiplier (indexed like the frequency lattice) to a real
/// field and returns the real part. Physical scalings cancel.
pub(crate) fn filter_real(grid: &GridSpec, values: &[f64], multiplier: &[f64]) -> Vec<f64> {
    let mut buf: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    fft_nd(grid, &mut buf, Direction::Forward);
    for (c, &m) in buf.iter_mut().zip(multiplier) {
        *c *= m;
    }
    fft_nd(grid, &mut buf, Direction::Inverse);
    let norm = 1.0 / grid.len() as f64;
    buf.iter().map(|c| c.re * norm).collect()
}

/// `sum_k multiplier_k |DFT(u)_k|^2`, unnormalized.
pub(crate) fn weighted_power(grid: &GridSpec, values: &[f64], multiplier: &[f64]) -> f64 {
    let mut buf: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    fft_nd(grid, &mut buf, Direction::Forward);
    buf.iter().zip(multiplier).map(|(c, &m)| m * c.norm_sqr()).sum()
}
