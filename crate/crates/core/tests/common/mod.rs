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

#![allow(dead_code)]

use choquard::spectral::{Field, GridSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Sum of a few Gaussians with random centers, widths and signed amplitudes.
pub fn smooth_field(grid: GridSpec, rng: &mut ChaCha8Rng) -> Field {
    bumps(grid, rng, -1.0)
}

/// Like [`smooth_field`] with positive amplitudes only.
pub fn positive_field(grid: GridSpec, rng: &mut ChaCha8Rng) -> Field {
    bumps(grid, rng, 0.2)
}

fn bumps(grid: GridSpec, rng: &mut ChaCha8Rng, low: f64) -> Field {
    let l = grid.box_len();
    let mut values = vec![0.0; grid.len()];
    for _ in 0..4 {
        let center: Vec<f64> = (0..grid.dim()).map(|_| rng.random_range(-l / 4.0..l / 4.0)).collect();
        let width = rng.random_range(l / 12.0..l / 5.0);
        let amp = rng.random_range(low..1.0);
        let bump = Field::gaussian(grid, &center, width, amp);
        for (v, b) in values.iter_mut().zip(bump.values()) {
            *v += b;
        }
    }
    Field::new(grid, values).unwrap()
}

pub fn white_noise(grid: GridSpec, rng: &mut ChaCha8Rng) -> Field {
    Field::new(grid, (0..grid.len()).map(|_| rng.random_range(-1.0..1.0)).collect()).unwrap()
}

pub fn rel_max_diff(a: &Field, b: &Field) -> f64 {
    let num = a
        .values()
        .iter()
        .zip(b.values())
        .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
    num / b.max_abs().max(f64::MIN_POSITIVE)
}
