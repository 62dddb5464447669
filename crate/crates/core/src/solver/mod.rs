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

//! Constrained minimization of `A` on `{D = 1}` and the passage to solutions.
//!
//! ```
//! use choquard::functionals::ProblemParams;
//! use choquard::solver::{solve_ground_state, Classification, Init, SolverConfig};
//! use choquard::spectral::GridSpec;
//!
//! let grid = GridSpec::new(2, 32, 16.0)?;
//! let params = ProblemParams::new(2, 1.0, 2.0)?;
//! let (w, report) = solve_ground_state(Init::Gaussian, &params, &SolverConfig::default(), grid)?;
//! assert_eq!(report.classification, Classification::Converged);
//! assert!(w.values().iter().all(|&v| v > 0.0));
//! # Ok::<(), choquard::Error>(())
//! ```

mod config;
mod flow;
mod report;
mod symmetry;

pub use config::{Init, SolverConfig};
pub use flow::{
    constrained_gradient, deflated_solve, distance_to_known, normalize_to_constraint,
    rescale_to_solution, sign_aligned, solve_ground_state, trend, CONSTRAINT_TOL,
    DISTINCT_THRESHOLD, SPREAD_RATIO, TREND_FACTOR,
};
pub use report::{AbortState, Classification, SolutionReport};
pub use symmetry::{centering_shift, participation_ratio, recenter, symmetrize};
