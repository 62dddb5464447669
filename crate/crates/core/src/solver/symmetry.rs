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

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spectral::{forward_transform, inverse_transform, Field, SpectralField};

/// Periodic centroid of `|u|^2` per axis, in cells; `None` along axes where the profile is flat.
fn centroids(u: &Field) -> Result<Vec<Option<f64>>> {
    u.check_finite()?;
    if u.is_zero() {
        return Err(Error::ZeroField);
    }
    let g = u.grid();
    let m = g.points();
    let dim = g.dim();
    let (cos_t, sin_t): (Vec<f64>, Vec<f64>) =
        (0..m).map(|j| (TAU * j as f64 / m as f64).sin_cos()).map(|(s, c)| (c, s)).unzip();
    let mut c = [0.0f64; 3];
    let mut s = [0.0f64; 3];
    let mut total = 0.0;
    for (flat, &v) in u.values().iter().enumerate() {
        let w = v * v;
        total += w;
        let idx = g.unflatten(flat);
        for a in 0..dim {
            c[a] += w * cos_t[idx[a]];
            s[a] += w * sin_t[idx[a]];
        }
    }
    Ok((0..dim)
        .map(|a| {
            if c[a].hypot(s[a]) <= 1e-12 * total {
                None
            } else {
                Some(s[a].atan2(c[a]) * m as f64 / TAU)
            }
        })
        .collect())
}

/// Whole-cell shift that moves the periodic centroid of `|u|^2` to index `M/2`.
pub fn centering_shift(u: &Field) -> Result<Vec<i64>> {
    let m = u.grid().points();
    let half = (m / 2) as i64;
    Ok(centroids(u)?
        .into_iter()
        .map(|c| match c {
            None => 0,
            Some(c) => {
                let shift = (m as f64 / 2.0 - c).round() as i64;
                (shift + half).rem_euclid(m as i64) - half
            }
        })
        .collect())
}

/// Fraction of a cell, per axis, that moves the centroid onto the nearest grid point.
pub(crate) fn subcell_offset(u: &Field) -> Result<Vec<f64>> {
    Ok(centroids(u)?.into_iter().map(|c| c.map_or(0.0, |c| c.round() - c)).collect())
}

/// Band-limited translation of `u` by `delta` cells per axis. The Nyquist
/// coefficient takes the real factor `cos(pi delta)`, which keeps the output real.
pub(crate) fn subcell_shifted(u: &Field, delta: &[f64]) -> Result<Field> {
    let g = *u.grid();
    let m = g.points();
    let spec = forward_transform(u)?;
    let coeffs = spec
        .coeffs()
        .iter()
        .enumerate()
        .map(|(flat, &c)| {
            let idx = g.unflatten(flat);
            let mut factor = Complex64::new(1.0, 0.0);
            for (a, &d) in delta.iter().enumerate() {
                factor *= if 2 * idx[a] == m {
                    Complex64::new((PI * d).cos(), 0.0)
                } else {
                    Complex64::from_polar(1.0, -TAU * g.wave_number(idx[a]) as f64 * d / m as f64)
                };
            }
            c * factor
        })
        .collect();
    inverse_transform(&SpectralField::new(g, coeffs)?)
}

/// Circularly shift `u` so the centroid of `|u|^2` sits within one cell of the box center.
pub fn recenter(u: &Field) -> Result<Field> {
    let shift = centering_shift(u)?;
    Ok(if shift.iter().all(|&s| s == 0) { u.clone() } else { u.shifted(&shift) })
}

/// Images of a lattice point under the hyperoctahedral group acting about index `M/2`.
fn orbit(idx: &[usize], m: usize, out: &mut Vec<[usize; 3]>) {
    out.clear();
    let dim = idx.len();
    let mut perm: Vec<usize> = (0..dim).collect();
    loop {
        for flips in 0..(1usize << dim) {
            let mut img = [0usize; 3];
            for a in 0..dim {
                let j = idx[perm[a]];
                img[a] = if flips >> a & 1 == 1 { (m - j) % m } else { j };
            }
            out.push(img);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Average of `u` over axis permutations and reflections `x -> -x` about the box center.
///
/// Every orbit is averaged once, in a fixed order, and the mean is written to
/// all of its points, so the output is bitwise invariant and a second
/// application returns it unchanged.
pub fn symmetrize(u: &Field) -> Result<Field> {
    u.check_finite()?;
    let g = *u.grid();
    let m = g.points();
    let dim = g.dim();
    let vals = u.values();
    let mut out = vec![f64::NAN; vals.len()];
    let mut images = Vec::new();
    let mut flats = Vec::new();
    for flat in 0..vals.len() {
        if !out[flat].is_nan() {
            continue;
        }
        let idx = g.unflatten(flat);
        orbit(&idx[..dim], m, &mut images);
        flats.clear();
        flats.extend(images.iter().map(|img| g.flatten(&img[..dim])));
        // the smallest point of the orbit anchors the sum
        let anchor = vals[*flats.iter().min().expect("orbit is never empty")];
        let n = flats.len() as f64;
        let mean = anchor + flats.iter().map(|&f| vals[f] - anchor).sum::<f64>() / n;
        for &f in &flats {
            out[f] = mean;
        }
    }
    Field::new(g, out)
}

/// `(sum u^2)^2 / (M^N sum u^4)`: one for a flat field, `1 / M^N` for a single spike.
pub fn participation_ratio(u: &Field) -> f64 {
    let (s2, s4) = u
        .values()
        .iter()
        .fold((0.0, 0.0), |(a, b), &v| (a + v * v, b + v * v * v * v));
    if s4 == 0.0 {
        return 0.0;
    }
    s2 * s2 / (u.grid().len() as f64 * s4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{l2_norm, GridSpec};

    #[test]
    fn centered_gaussian_stays_put() {
        let g = GridSpec::new(2, 32, 10.0).unwrap();
        let u = Field::gaussian(g, &[0.0, 0.0], 1.0, 1.0);
        assert_eq!(centering_shift(&u).unwrap(), vec![0, 0]);
        let off = u.shifted(&[8, 0]);
        let back = recenter(&off).unwrap();
        assert_eq!(back.values(), u.values());
    }

    #[test]
    fn recenter_across_the_boundary() {
        let g = GridSpec::new(1, 16, 8.0).unwrap();
        let u = Field::gaussian(g, &[3.9], 0.6, 1.0);
        let c = recenter(&u).unwrap();
        assert!(c.argmax_abs().abs_diff(8) <= 1);
        assert!(recenter(&Field::zeros(g)).is_err());
    }

    #[test]
    fn group_orders() {
        let mut out = Vec::new();
        orbit(&[1, 2, 3], 8, &mut out);
        assert_eq!(out.len(), 48);
        orbit(&[1, 2], 8, &mut out);
        assert_eq!(out.len(), 8);
    }

    #[test]
    fn symmetrize_is_an_exact_projection() {
        let g = GridSpec::new(2, 16, 6.0).unwrap();
        let u = Field::from_fn(g, |x| (x[0] + 0.3 * x[1]).sin() + (-x[0] * x[0]).exp() * x[1]);
        let s = symmetrize(&u).unwrap();
        let ss = symmetrize(&s).unwrap();
        assert_eq!(s.values(), ss.values());
        assert!(l2_norm(&s) <= l2_norm(&u));
        let radial = Field::gaussian(g, &[0.0, 0.0], 1.3, 2.0);
        let r = symmetrize(&radial).unwrap();
        for (a, b) in r.values().iter().zip(radial.values()) {
            assert!((a - b).abs() <= 1e-15);
        }
    }

    #[test]
    fn participation_extremes() {
        let g = GridSpec::new(2, 8, 4.0).unwrap();
        assert!((participation_ratio(&Field::constant(g, 3.0)) - 1.0).abs() < 1e-15);
        let mut spike = vec![0.0; g.len()];
        spike[9] = 5.0;
        let pr = participation_ratio(&Field::new(g, spike).unwrap());
        assert!((pr - 1.0 / 64.0).abs() < 1e-15);
    }

    #[test]
    fn subcell_shift_moves_a_gaussian_onto_the_grid() {
        let g = GridSpec::new(2, 64, 16.0).unwrap();
        let h = g.spacing();
        let off = Field::gaussian(g, &[0.3 * h, -0.2 * h], 1.5, 1.0);
        let delta = subcell_offset(&off).unwrap();
        assert!((delta[0] + 0.3).abs() < 1e-9 && (delta[1] - 0.2).abs() < 1e-9);
        let on = subcell_shifted(&off, &delta).unwrap();
        let exact = Field::gaussian(g, &[0.0, 0.0], 1.5, 1.0);
        let err = on.values().iter().zip(exact.values()).fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        assert!(err < 1e-12);
        assert!(subcell_offset(&on).unwrap().iter().all(|d| d.abs() < 1e-9));
    }

    #[test]
    fn whole_cell_subcell_shift_is_the_lattice_shift() {
        let g = GridSpec::new(2, 16, 8.0).unwrap();
        let u = Field::gaussian(g, &[1.0, -0.5], 1.0, 1.0).map(|x| x * (1.0 + x));
        let a = subcell_shifted(&u, &[2.0, -1.0]).unwrap();
        let b = u.shifted(&[2, -1]);
        let err = a.values().iter().zip(b.values()).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
        assert!(err < 1e-14);
    }
}
