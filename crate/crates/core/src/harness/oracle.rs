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

use crate::error::Result;
use crate::functionals::{riesz_convolve, riesz_convolve_direct, ProblemParams};
use crate::spectral::{Field, GridSpec};

/// Where a sample sits relative to the box center, by max-norm distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Region {
    /// `|x|_inf <= L/6`
    InteriorThird,
    /// `L/6 < |x|_inf <= L/3`
    Middle,
    Outer,
}

impl Region {
    fn of(x: &[f64], l: f64) -> Region {
        let r = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if r <= l / 6.0 {
            Region::InteriorThird
        } else if r <= l / 3.0 {
            Region::Middle
        } else {
            Region::Outer
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionError {
    pub region: Region,
    pub samples: usize,
    /// `||spectral - direct|| / ||direct||` over the region (zero when both vanish).
    pub relative_l2: f64,
    /// `max |spectral - direct| / max |direct|` over the region.
    pub relative_max: f64,
}

/// Spectral against direct Riesz convolution of one field.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleComparison {
    pub grid: GridSpec,
    pub alpha: f64,
    pub regions: Vec<RegionError>,
}

impl OracleComparison {
    pub fn interior_error(&self) -> f64 {
        self.regions
            .iter()
            .find(|r| r.region == Region::InteriorThird)
            .map_or(0.0, |r| r.relative_l2)
    }
}

/// Compares [`riesz_convolve`] with [`riesz_convolve_direct`] on `v`, region by region.
pub fn oracle_comparison(v: &Field, params: &ProblemParams, force: bool) -> Result<OracleComparison> {
    let direct = riesz_convolve_direct(v, params, force)?;
    let spectral = riesz_convolve(v, params)?;
    let g = *v.grid();
    let l = g.box_len();
    let mut regions = Vec::new();
    for region in [Region::InteriorThird, Region::Middle, Region::Outer] {
        let (mut n, mut num, mut den, mut dmax, mut rmax) = (0usize, 0.0, 0.0, 0.0f64, 0.0f64);
        for (j, (a, b)) in spectral.values().iter().zip(direct.values()).enumerate() {
            let x = g.position(j);
            if Region::of(&x[..g.dim()], l) != region {
                continue;
            }
            n += 1;
            num += (a - b) * (a - b);
            den += b * b;
            dmax = dmax.max((a - b).abs());
            rmax = rmax.max(b.abs());
        }
        if n == 0 {
            continue;
        }
        let ratio = |x: f64, y: f64| if y == 0.0 { if x == 0.0 { 0.0 } else { f64::INFINITY } } else { x / y };
        regions.push(RegionError {
            region,
            samples: n,
            relative_l2: ratio(num.sqrt(), den.sqrt()),
            relative_max: ratio(dmax, rmax),
        });
    }
    Ok(OracleComparison {
        grid: g,
        alpha: params.alpha(),
        regions,
    })
}
