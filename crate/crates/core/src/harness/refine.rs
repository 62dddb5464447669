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
use crate::functionals::ProblemParams;
use crate::solver::{solve_ground_state, Classification, Init, SolverConfig};
use crate::spectral::GridSpec;

/// Largest number of grid points a refinement level may have.
pub const REFINE_POINT_LIMIT: usize = 1 << 22;

/// How `(L, M)` grows from one level to the next.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RefinementSchedule {
    /// `(L, M) -> (2L, 2M)`: box and resolution together at fixed spacing.
    #[default]
    Simultaneous,
    /// `(L, M) -> (L, 2M) -> (2L, 2M) -> ...`: resolution and box in turn.
    Alternating,
}

impl RefinementSchedule {
    pub fn levels(self, base: GridSpec, levels: usize) -> Result<Vec<GridSpec>> {
        let mut out = vec![base.validated()?];
        for k in 1..levels {
            let prev = out[k - 1];
            let double_box = match self {
                RefinementSchedule::Simultaneous => true,
                RefinementSchedule::Alternating => k % 2 == 0,
            };
            let l = if double_box { 2.0 * prev.box_len() } else { prev.box_len() };
            let m = if double_box && self == RefinementSchedule::Alternating {
                prev.points()
            } else {
                2 * prev.points()
            };
            out.push(GridSpec::new(prev.dim(), m, l)?);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RefinementRow {
    pub level: usize,
    #[serde(rename = "L")]
    pub box_len: f64,
    #[serde(rename = "M")]
    pub points: usize,
    #[serde(rename = "mp")]
    pub mp_estimate: f64,
    pub residual: f64,
    pub pohozaev: f64,
    pub classification: Classification,
    /// `|mp - mp_prev| / mp` against the previous level.
    pub relative_change: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RefinementTable {
    pub schedule: RefinementSchedule,
    pub rows: Vec<RefinementRow>,
}

impl RefinementTable {
    pub fn changes(&self) -> Vec<f64> {
        self.rows.iter().filter_map(|r| r.relative_change).collect()
    }

    /// Consecutive changes never grow.
    pub fn is_monotone(&self) -> bool {
        self.changes().windows(2).all(|w| w[1] <= w[0])
    }

    pub fn final_change(&self) -> Option<f64> {
        self.changes().last().copied()
    }

    pub const CSV_HEADER: &'static str = "level,L,M,mp,relative_change,residual,pohozaev,classification";

    pub fn csv_lines(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| {
                format!(
                    "{},{},{},{:.16e},{},{:e},{:e},{}",
                    r.level,
                    r.box_len,
                    r.points,
                    r.mp_estimate,
                    r.relative_change.map_or(String::new(), |c| format!("{c:e}")),
                    r.residual,
                    r.pohozaev,
                    r.classification
                )
            })
            .collect()
    }
}

/// Solves on successively refined grids from the centered Gaussian and
/// tabulates `M_p` and the Pohozaev defect per level.
pub fn refinement_study(
    params: &ProblemParams,
    base: GridSpec,
    levels: usize,
    config: &SolverConfig,
    schedule: RefinementSchedule,
) -> Result<RefinementTable> {
    if levels == 0 {
        return Err(Error::InvalidConfig("a refinement study needs at least one level".into()));
    }
    let grids = schedule.levels(base, levels)?;
    let finest = grids.iter().map(|g| g.len()).max().unwrap_or(0);
    if finest > REFINE_POINT_LIMIT {
        return Err(Error::SizeGuard {
            points: finest,
            limit: REFINE_POINT_LIMIT,
        });
    }
    let mut rows: Vec<RefinementRow> = Vec::with_capacity(levels);
    for (level, grid) in grids.into_iter().enumerate() {
        let (_, report) = solve_ground_state(Init::Gaussian, params, config, grid)?;
        let relative_change = rows
            .last()
            .map(|prev| (report.mp_estimate - prev.mp_estimate).abs() / report.mp_estimate);
        rows.push(RefinementRow {
            level,
            box_len: grid.box_len(),
            points: grid.points(),
            mp_estimate: report.mp_estimate,
            residual: report.residual,
            pohozaev: report.pohozaev,
            classification: report.classification,
            relative_change,
        });
    }
    Ok(RefinementTable { schedule, rows })
}
