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
use crate::spectral::Field;

/// Step control and stopping rules for the constrained flow.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SolverConfig {
    /// Initial step; the step is never grown past `10 * tau0`.
    pub tau0: f64,
    /// Step shrink factor on a rejected step, in `(0, 1)`.
    pub backtrack: f64,
    /// Step growth factor on an accepted step, `>= 1`.
    pub grow: f64,
    /// Relative Euler-Lagrange residual at which the run counts as converged.
    pub tol: f64,
    pub max_iter: usize,
    /// Recenter every this many accepted steps; `0` turns it off.
    pub recenter_every: usize,
    /// Apply `(1 + |xi|^2)^(-1/2)` to the raw gradient.
    pub precondition: bool,
    /// Known solutions to steer away from. Not part of the serialized config.
    #[serde(skip)]
    pub deflation_targets: Vec<Field>,
    /// Project every iterate onto fields invariant under axis permutations and reflections.
    pub symmetrize: bool,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tau0: 0.1,
            backtrack: 0.5,
            grow: 1.5,
            tol: 1e-9,
            max_iter: 2000,
            recenter_every: 25,
            precondition: true,
            deflation_targets: Vec::new(),
            symmetrize: false,
            seed: 0,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if !(self.tau0 > 0.0 && self.tau0.is_finite()) {
            return bad(format!("tau0 must be positive, got {}", self.tau0));
        }
        if !(self.backtrack > 0.0 && self.backtrack < 1.0) {
            return bad(format!("backtrack must lie in (0, 1), got {}", self.backtrack));
        }
        if !(self.grow >= 1.0 && self.grow.is_finite()) {
            return bad(format!("grow must be at least 1, got {}", self.grow));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return bad(format!("tol must be positive, got {}", self.tol));
        }
        if self.max_iter == 0 {
            return bad("max_iter must be at least 1".into());
        }
        for t in &self.deflation_targets {
            t.check_finite()?;
        }
        Ok(())
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Starting point of a solve.
#[derive(Clone, Debug)]
pub enum Init {
    /// Centered Gaussian of width `L/8`.
    Gaussian,
    /// A few smooth positive bumps at positions drawn from `SolverConfig::seed`.
    Random,
    Field(Field),
}
