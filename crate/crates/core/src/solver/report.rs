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

use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome of a constrained run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Converged,
    Concentrating,
    Spreading,
    Maxiter,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Converged => "converged",
            Classification::Concentrating => "concentrating",
            Classification::Spreading => "spreading",
            Classification::Maxiter => "maxiter",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Summary of a solve. Defects refer to the rescaled solution `u`, the
/// histories to the constrained iterates `w`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionReport {
    /// `A(w)` at the final constrained iterate.
    pub mp_estimate: f64,
    pub residual: f64,
    pub nehari: f64,
    pub pohozaev: f64,
    pub iters: usize,
    pub classification: Classification,
    pub participation_ratio_history: Vec<f64>,
    pub linf_history: Vec<f64>,
    /// `A(w)` after every accepted step, starting from the initial iterate.
    pub energy_history: Vec<f64>,
    /// Multiplier `A(w) / p` of the constraint.
    pub lambda: f64,
    /// The step collapsed below round-off before the tolerance was met.
    pub stalled: bool,
    /// Participation ratio times the number of grid points at the end of the run.
    pub effective_cells: f64,
    /// Smallest relative distance to the deflation targets, per iteration.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub deflation_history: Vec<f64>,
}

/// Iterate state recorded when a run hits non-finite values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AbortState {
    pub iteration: usize,
    pub tau: f64,
    pub energy: f64,
    pub residual: f64,
    pub linf: f64,
    pub reason: String,
}

impl fmt::Display for AbortState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "solver aborted at iteration {}: {} (tau={:e}, A={:e}, residual={:e}, max|u|={:e})",
            self.iteration, self.reason, self.tau, self.energy, self.residual, self.linf
        )
    }
}
