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

//! Experiment drivers: run classification, parameter sweeps, refinement
//! studies, the splitting table and the Riesz oracle comparison.

mod classify;
mod oracle;
mod refine;
mod splitting;
mod sweep;

pub use crate::solver::participation_ratio;
pub use classify::classify_run;
pub use oracle::{oracle_comparison, OracleComparison, Region, RegionError};
pub use refine::{
    refinement_study, RefinementRow, RefinementSchedule, RefinementTable, REFINE_POINT_LIMIT,
};
pub use splitting::{brezis_lieb_demo, SplittingRow, SplittingTable};
pub use sweep::{sweep, sweep_with_fields, SweepPlan, SweepRow};
