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

use crate::error::{Error, Result};
use crate::solver::{trend, Classification, SolutionReport, SolverConfig};

/// Classifies a finished run from its histories and final residual.
///
/// Precedence: concentrating, spreading, converged, maxiter.
pub fn classify_run(report: &SolutionReport, config: &SolverConfig) -> Result<Classification> {
    if report.participation_ratio_history.is_empty() || report.linf_history.is_empty() {
        return Err(Error::InvalidConfig("run histories are empty".into()));
    }
    if let Some(c) = trend(&report.participation_ratio_history, &report.linf_history) {
        return Ok(c);
    }
    Ok(if report.residual <= config.tol {
        Classification::Converged
    } else {
        Classification::Maxiter
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(pr: Vec<f64>, linf: Vec<f64>, residual: f64) -> SolutionReport {
        SolutionReport {
            mp_estimate: 1.0,
            residual,
            nehari: 0.0,
            pohozaev: 0.0,
            iters: pr.len(),
            classification: Classification::Maxiter,
            participation_ratio_history: pr,
            linf_history: linf,
            energy_history: vec![],
            lambda: 0.5,
            stalled: false,
            effective_cells: 1.0,
            deflation_history: vec![],
        }
    }

    #[test]
    fn threshold_constructions() {
        let cfg = SolverConfig::default();
        let flat = report(vec![0.3; 5], vec![1.0; 5], 0.1 * cfg.tol);
        assert_eq!(classify_run(&flat, &cfg).unwrap(), Classification::Converged);
        let stuck = report(vec![0.3; 5], vec![1.0; 5], 1.0);
        assert_eq!(classify_run(&stuck, &cfg).unwrap(), Classification::Maxiter);
        let linf = vec![1.0, 2.0, 4.0, 8.0, 16.0];
        let pr = vec![1.0, 0.5, 0.25, 0.125, 1.0 / 16.0];
        let conc = report(pr, linf.clone(), 0.0);
        assert_eq!(classify_run(&conc, &cfg).unwrap(), Classification::Concentrating);
        let spread = report(vec![0.05, 0.2, 0.9], vec![16.0, 4.0, 1.0], 0.0);
        assert_eq!(classify_run(&spread, &cfg).unwrap(), Classification::Spreading);
        assert!(classify_run(&report(vec![], vec![], 0.0), &cfg).is_err());
    }
}
