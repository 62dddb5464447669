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

//! Pseudospectral ground states for the fractional Choquard equation
//!
//! ```text
//! (-Δ + 1)^{1/2} u = (I_α * |u|^p) |u|^{p-2} u     on R^N
//! ```
//!
//! approximated on a periodic box.
//!
//! The crate is layered:
//!
//! - [`spectral`]: grids, fields, FFT transforms and Fourier multipliers.
//! - [`functionals`]: the Riesz convolution, the constraint `D`, its
//!   gradient, and the defect functionals used as certificates.
//! - [`solver`]: normalized gradient flow on `{D = 1}`, rescaling, symmetrization
//!   and deflation.
//! - [`harness`]: run classification, sweeps, refinement studies and the
//!   splitting demonstration.
//! - [`io`]: the binary field format, configuration documents and manifests.
//!
//! ```
//! use choquard::functionals::{dterm, ProblemParams};
//! use choquard::spectral::{quadratic_form_a, Field, GridSpec};
//!
//! let grid = GridSpec::new(2, 32, 12.0)?;
//! let params = ProblemParams::new(2, 1.0, 2.0)?;
//! let u = Field::gaussian(grid, &[0.0, 0.0], 1.5, 1.0);
//! assert!(quadratic_form_a(&u) > 0.0);
//! assert!(dterm(&u, &params)? > 0.0);
//! # Ok::<(), choquard::Error>(())
//! ```

mod error;
pub mod functionals;
pub mod harness;
pub mod io;
pub mod solver;
pub mod spectral;

pub use error::{Error, Result};

// The guide in `book/` is compiled and run as doc-tests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/grids.md")]
    mod grids {}
    #[doc = include_str!("../../../book/src/riesz.md")]
    mod riesz {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/solver.md")]
    mod solver {}
    #[doc = include_str!("../../../book/src/diagnostics.md")]
    mod diagnostics {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
