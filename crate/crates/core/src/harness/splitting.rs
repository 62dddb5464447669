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

use crate::error::{Error, Result};
use crate::functionals::{brezis_lieb_gap, dterm, ProblemParams};
use crate::spectral::{Field, GridSpec};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SplittingRow {
    pub shift: usize,
    /// Separation of the two profile centers, `shift * h`.
    pub distance: f64,
    pub gap: f64,
    /// `gap / D(w)`.
    pub relative_gap: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SplittingTable {
    pub grid: GridSpec,
    pub widths: (f64, f64),
    pub d_w: f64,
    pub rows: Vec<SplittingRow>,
}

impl SplittingTable {
    /// Gaps never grow as the shift grows.
    pub fn is_non_increasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].gap <= w[0].gap)
    }

    pub fn final_relative_gap(&self) -> Option<f64> {
        self.rows.last().map(|r| r.relative_gap)
    }

    pub const CSV_HEADER: &'static str = "shift,distance,gap,relative_gap";

    pub fn csv_lines(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| format!("{},{},{:e},{:e}", r.shift, r.distance, r.gap, r.relative_gap))
            .collect()
    }
}

/// Gap `|D(w + g_m) - D(g_m) - D(w)|` for two centered unit-height Gaussians
/// `exp(-|x|^2 / width^2)`, with `g` moved by each shift along the first axis.
pub fn brezis_lieb_demo(
    params: &ProblemParams,
    grid: GridSpec,
    widths: (f64, f64),
    shifts: &[usize],
) -> Result<SplittingTable> {
    let grid = grid.validated()?;
    let half = grid.points() / 2;
    if shifts.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParams("shifts must be strictly increasing".into()));
    }
    if let Some(&s) = shifts.iter().find(|&&s| s > half) {
        return Err(Error::InvalidParams(format!("shift {s} exceeds M/2 = {half}")));
    }
    let origin = vec![0.0; grid.dim()];
    let w = Field::gaussian(grid, &origin, widths.0, 1.0);
    let g = Field::gaussian(grid, &origin, widths.1, 1.0);
    let d_w = dterm(&w, params)?;
    let rows = shifts
        .iter()
        .map(|&shift| {
            let gap = brezis_lieb_gap(&w, &g, shift, params)?;
            Ok(SplittingRow {
                shift,
                distance: shift as f64 * grid.spacing(),
                gap,
                relative_gap: gap / d_w,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SplittingTable {
        grid,
        widths,
        d_w,
        rows,
    })
}
