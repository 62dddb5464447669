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

//! The nonlocal objects of the problem: the Riesz convolution, the
//! constraint functional `D`, its gradient, and the defect functionals used
//! to certify candidate solutions.

mod defects;
mod kernel;
mod params;
mod riesz;

pub(crate) use defects::{abs_pow, choquard_term_unchecked, relative_gap};
pub use defects::{
    action, brezis_lieb_gap, certify, choquard_term, dterm, dterm_gradient, equation_residual,
    hls_ratio, nehari_defect, pohozaev_defect, Certificates,
};
pub use params::{sphere_area, ProblemParams, RieszConstant, RieszKernel};
pub(crate) use riesz::riesz_convolve_unchecked;
pub use riesz::{riesz_convolve, riesz_convolve_direct, riesz_symbol, DIRECT_POINT_LIMIT};
