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

use thiserror::Error;

/// Errors raised by the spectral, functional and solver layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid problem parameters: {0}")]
    InvalidParams(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("fields live on different grids ({left} vs {right})")]
    GridMismatch { left: String, right: String },

    #[error("non-finite value at sample {index}")]
    NonFinite { index: usize },

    #[error("spectral field is not Hermitian: imaginary residue {residue:.3e} (relative)")]
    NotHermitian { residue: f64 },

    #[error("multiplier is not finite at frequency index {index}")]
    BadMultiplier { index: usize },

    #[error("the zero field is not allowed here")]
    ZeroField,

    #[error("field cannot be normalized onto the constraint (D(u) = {value:e})")]
    NotNormalizable { value: f64 },

    #[error("constraint violated: |D(u) - 1| = {deviation:.3e}")]
    ConstraintViolated { deviation: f64 },

    #[error("direct summation on {points} points exceeds the guard of {limit}; force it explicitly")]
    SizeGuard { points: usize, limit: usize },

    #[error("{0}")]
    SolverAbort(Box<crate::solver::AbortState>),

    #[error("malformed field file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
