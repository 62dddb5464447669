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

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context, Result};
use chrono::{SecondsFormat, Utc};
use choquard::io::{config_hash, write_json, RunConfig, RunManifest};
use choquard::Error;

use crate::{Common, Overrides, Status};

/// Sizes the global rayon pool from `CHOQUARD_THREADS` (unset or `0`: automatic).
pub fn configure_threads() -> Result<()> {
    let n = match std::env::var("CHOQUARD_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| anyhow!("CHOQUARD_THREADS must be a non-negative integer, got {v:?}"))?,
        Err(_) => 0,
    };
    if n > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

/// Exit status for an error: numeric aborts are 3, everything else an input error.
pub fn status_of(e: &anyhow::Error) -> Status {
    match e.downcast_ref::<Error>() {
        Some(Error::SolverAbort(_)) | Some(Error::NonFinite { .. }) => Status::NumericAbort,
        _ => Status::InputError,
    }
}

/// Input error raised by the command layer itself.
pub fn input_error(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(Error::InvalidConfig(msg.into()))
}

pub fn require_config(common: &Common) -> Result<&Path> {
    common
        .config
        .as_deref()
        .ok_or_else(|| input_error("this command needs --config PATH"))
}

/// Loads a run configuration and applies command-line overrides.
pub fn load_run_config(common: &Common, overrides: Option<&Overrides>) -> Result<RunConfig> {
    let path = require_config(common)?;
    let mut cfg = RunConfig::load(path)?;
    if let Some(o) = overrides {
        if let Some(p) = o.p {
            cfg.params.p = p;
        }
        if let Some(a) = o.alpha {
            cfg.params.alpha = a;
        }
        if o.points.is_some() || o.box_len.is_some() {
            cfg.grid = choquard::spectral::GridSpec::new(
                cfg.grid.dim(),
                o.points.unwrap_or(cfg.grid.points()),
                o.box_len.unwrap_or(cfg.grid.box_len()),
            )?;
        }
        if let Some(t) = o.tol {
            cfg.solver.tol = t;
        }
        if let Some(m) = o.max_iter {
            cfg.solver.max_iter = m;
        }
    }
    if let Some(s) = common.seed {
        cfg.solver.seed = s;
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Physics commands work in dimension two and three only.
pub fn require_physical_dim(dim: usize) -> Result<()> {
    if dim < 2 {
        return Err(input_error(format!(
            "dimension {dim} is for plumbing tests only; use N = 2 or 3"
        )));
    }
    Ok(())
}

/// An output directory under construction and the manifest describing it.
pub struct Artifacts {
    dir: PathBuf,
    manifest: RunManifest,
}

impl Artifacts {
    pub fn create(common: &Common, fallback: Option<&Path>, command: &str, config: serde_json::Value, seed: u64) -> Result<Self> {
        let dir = common
            .out
            .clone()
            .or_else(|| fallback.map(Path::to_path_buf))
            .unwrap_or_else(|| PathBuf::from(format!("choquard-{command}")));
        fs::create_dir_all(&dir).with_context(|| format!("cannot create {}", dir.display()))?;
        let manifest = RunManifest {
            tool: "choquard".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: std::env::args().collect::<Vec<_>>().join(" "),
            config_hash: config_hash(&config),
            config,
            seed,
            threads: rayon::current_num_threads(),
            inputs: common.config.iter().cloned().collect(),
            outputs: Vec::new(),
            started: now(),
            finished: String::new(),
        };
        Ok(Artifacts { dir, manifest })
    }

    pub fn add_input(&mut self, path: &Path) {
        self.manifest.inputs.push(path.to_path_buf());
    }

    /// Path of an artifact inside the directory, recorded in the manifest.
    pub fn path(&mut self, name: &str) -> PathBuf {
        let p = self.dir.join(name);
        self.manifest.outputs.push(p.clone());
        p
    }

    pub fn finish(mut self) -> Result<PathBuf> {
        self.manifest.finished = now();
        let path = self.dir.join(RunManifest::FILE_NAME);
        write_json(&path, &self.manifest)?;
        Ok(self.dir)
    }
}

fn now() -> String {
    Utc::now().to_rfc3339_opts(SecondsFormat::Millis, true)
}
