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

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::grid::GridSpec;

/// Frequency-lattice tables for the Bessel-type symbols, built once per grid.
pub(crate) struct SymbolTables {
    /// `(1 + |xi|^2)^(1/2)`
    pub sqrt_op: Vec<f64>,
    /// `(1 + |xi|^2)^(-1/2)`
    pub inv_sqrt_op: Vec<f64>,
    /// `|xi|^2 (1 + |xi|^2)^(-1/2)`, the dilation weight.
    pub dilation: Vec<f64>,
}

pub(crate) fn symbol_tables(grid: &GridSpec) -> Arc<SymbolTables> {
    static CACHE: OnceLock<Mutex<HashMap<GridSpec, Arc<SymbolTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut cache = cache.lock().unwrap_or_else(|e| e.into_inner());
    cache
        .entry(*grid)
        .or_insert_with(|| {
            let xi_sq = grid.xi_sq();
            let sqrt_op: Vec<f64> = xi_sq.iter().map(|&s| (1.0 + s).sqrt()).collect();
            let inv_sqrt_op = sqrt_op.iter().map(|&s| 1.0 / s).collect();
            let dilation = xi_sq.iter().zip(&sqrt_op).map(|(&s, &r)| s / r).collect();
            Arc::new(SymbolTables {
                sqrt_op,
                inv_sqrt_op,
                dilation,
            })
        })
        .clone()
}
