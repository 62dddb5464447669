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

use std::time::Instant;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functionals::{ProblemParams, RieszKernel};
use crate::solver::{solve_ground_state, Init, SolverConfig};
use crate::spectral::{Field, GridSpec};

/// Cartesian product of grids, `alpha` and `p` values, each solved `repeats` times.
///
/// Repeat 0 starts from the centered Gaussian; later repeats start from
/// random bumps seeded per row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepPlan {
    pub grids: Vec<GridSpec>,
    pub alphas: Vec<f64>,
    pub ps: Vec<f64>,
    #[serde(default)]
    pub config: SolverConfig,
    #[serde(default = "one")]
    pub repeats: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub kernel: RieszKernel,
}

fn one() -> usize {
    1
}

/// One solve of a sweep. Failed solves keep their key and carry the error text.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    #[serde(rename = "N")]
    pub dim: usize,
    pub alpha: f64,
    pub p: f64,
    #[serde(rename = "L")]
    pub box_len: f64,
    #[serde(rename = "M")]
    pub points: usize,
    pub repeat: usize,
    pub seed: u64,
    #[serde(rename = "mp")]
    pub mp_estimate: f64,
    pub residual: f64,
    pub nehari: f64,
    pub pohozaev: f64,
    /// One of the four run classifications, or `error`.
    pub classification: String,
    pub iters: usize,
    pub effective_cells: f64,
    #[serde(rename = "seconds")]
    pub wall_time_seconds: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl SweepRow {
    /// Fixed CSV header.
    pub const CSV_HEADER: &'static str = "N,alpha,p,L,M,mp,residual,nehari,pohozaev,classification,seconds";

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{:e},{:e},{:e},{:e},{},{:.3}",
            self.dim,
            self.alpha,
            self.p,
            self.box_len,
            self.points,
            self.mp_estimate,
            self.residual,
            self.nehari,
            self.pohozaev,
            self.classification,
            self.wall_time_seconds
        )
    }

    /// Snapshot file name `{N}d_a{alpha}_p{p}_M{M}.chqf`, suffixed by the repeat index after the first.
    pub fn snapshot_name(&self) -> String {
        let base = format!("{}d_a{}_p{}_M{}", self.dim, self.alpha, self.p, self.points);
        if self.repeat == 0 {
            format!("{base}.chqf")
        } else {
            format!("{base}_r{}.chqf", self.repeat)
        }
    }
}

struct Case {
    index: usize,
    grid: GridSpec,
    alpha: f64,
    p: f64,
    repeat: usize,
}

impl SweepPlan {
    pub fn validate(&self) -> Result<()> {
        self.config.validate()?;
        if self.repeats == 0 && !(self.grids.is_empty() || self.alphas.is_empty() || self.ps.is_empty()) {
            return Err(Error::InvalidConfig("repeats must be at least 1".into()));
        }
        for g in &self.grids {
            g.validated()?;
            for &alpha in &self.alphas {
                for &p in &self.ps {
                    ProblemParams::with_kernel(g.dim(), alpha, p, self.kernel)?;
                }
            }
        }
        Ok(())
    }

    fn cases(&self) -> Vec<Case> {
        let mut out = Vec::new();
        for &grid in &self.grids {
            for &alpha in &self.alphas {
                for &p in &self.ps {
                    for repeat in 0..self.repeats {
                        out.push(Case {
                            index: out.len(),
                            grid,
                            alpha,
                            p,
                            repeat,
                        });
                    }
                }
            }
        }
        out
    }

    /// Seed of the row at `index`, independent of scheduling.
    pub fn row_seed(&self, index: usize) -> u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        rng.next_u64()
    }
}

fn run_case(plan: &SweepPlan, case: &Case) -> (SweepRow, Option<Field>) {
    let seed = plan.row_seed(case.index);
    let mut row = SweepRow {
        dim: case.grid.dim(),
        alpha: case.alpha,
        p: case.p,
        box_len: case.grid.box_len(),
        points: case.grid.points(),
        repeat: case.repeat,
        seed,
        mp_estimate: f64::NAN,
        residual: f64::NAN,
        nehari: f64::NAN,
        pohozaev: f64::NAN,
        classification: "error".into(),
        iters: 0,
        effective_cells: f64::NAN,
        wall_time_seconds: 0.0,
        error: None,
    };
    let start = Instant::now();
    let outcome = ProblemParams::with_kernel(case.grid.dim(), case.alpha, case.p, plan.kernel).and_then(|params| {
        let config = plan.config.clone().with_seed(seed);
        let init = if case.repeat == 0 { Init::Gaussian } else { Init::Random };
        solve_ground_state(init, &params, &config, case.grid)
    });
    row.wall_time_seconds = start.elapsed().as_secs_f64();
    match outcome {
        Ok((w, report)) => {
            row.mp_estimate = report.mp_estimate;
            row.residual = report.residual;
            row.nehari = report.nehari;
            row.pohozaev = report.pohozaev;
            row.classification = report.classification.to_string();
            row.iters = report.iters;
            row.effective_cells = report.effective_cells;
            (row, Some(w))
        }
        Err(e) => {
            row.error = Some(e.to_string());
            (row, None)
        }
    }
}

/// Runs every case of the plan in parallel; rows come back in plan order
/// (grid, alpha, p, repeat) together with the constrained minimizers.
pub fn sweep_with_fields(plan: &SweepPlan) -> Result<Vec<(SweepRow, Option<Field>)>> {
    plan.validate()?;
    let cases = plan.cases();
    Ok(cases.par_iter().map(|c| run_case(plan, c)).collect())
}

/// Rows of [`sweep_with_fields`].
pub fn sweep(plan: &SweepPlan) -> Result<Vec<SweepRow>> {
    Ok(sweep_with_fields(plan)?.into_iter().map(|(r, _)| r).collect())
}
