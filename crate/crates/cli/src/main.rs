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

//! Command-line driver: `choquard <solve|check|oracle|sweep|refine|brezislieb|deflate>`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod run;

/// Exit status shared by every subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    /// Non-convergence or a failed soft criterion.
    NotConverged = 1,
    InputError = 2,
    NumericAbort = 3,
}

#[derive(Parser, Debug)]
#[command(name = "choquard", version, about = "Ground states of the fractional Choquard equation on a periodic box")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Common {
    /// JSON configuration (a sweep plan for `sweep`).
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Output directory for artifacts and the manifest.
    #[arg(long, global = true, value_name = "DIR")]
    pub out: Option<PathBuf>,
    /// Overrides the seed of the configuration.
    #[arg(long, global = true, value_name = "U64")]
    pub seed: Option<u64>,
    /// Fail the process on any failed row or level.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Bypass size guards.
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum InitArg {
    Gaussian,
    Random,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimize on the constraint, rescale, and certify the solution.
    Solve(SolveArgs),
    /// Recompute the certificates of a stored field.
    Check(CheckArgs),
    /// Compare the spectral Riesz convolution with the direct sum.
    Oracle(OracleArgs),
    /// Run a sweep plan over grids, alpha and p.
    Sweep(SweepArgs),
    /// Solve on successively refined grids.
    Refine(RefineArgs),
    /// Tabulate the splitting gap of two Gaussians against their separation.
    Brezislieb(SplitArgs),
    /// Search for a solution away from known ones.
    Deflate(DeflateArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Overrides {
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Points per axis.
    #[arg(long)]
    pub points: Option<usize>,
    /// Box side length.
    #[arg(long = "box")]
    pub box_len: Option<f64>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub max_iter: Option<usize>,
    #[arg(long, value_enum, default_value = "gaussian")]
    pub init: InitArg,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[command(flatten)]
    pub overrides: Overrides,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Field file in CHQF format.
    pub solution: PathBuf,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub p: Option<f64>,
    /// Residual threshold for a zero exit status.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    #[arg(long, default_value_t = 32)]
    pub points: usize,
    #[arg(long = "box", default_value_t = 16.0)]
    pub box_len: f64,
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    /// Width of the Gaussian `exp(-|x|^2 / width^2)`.
    #[arg(long, default_value_t = 1.0)]
    pub width: f64,
    /// Use the zero field instead of the Gaussian.
    #[arg(long)]
    pub zero: bool,
    /// Interior-third relative error for a zero exit status.
    #[arg(long, default_value_t = 0.02)]
    pub threshold: f64,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Write a CHQF snapshot per converged row.
    #[arg(long)]
    pub snapshots: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ScheduleArg {
    Simultaneous,
    Alternating,
}

#[derive(Args, Debug)]
pub struct RefineArgs {
    #[arg(long, default_value_t = 3)]
    pub levels: usize,
    #[arg(long, value_enum, default_value = "simultaneous")]
    pub schedule: ScheduleArg,
    /// Largest acceptable relative change between the last two levels.
    #[arg(long, default_value_t = 0.005)]
    pub threshold: f64,
}

#[derive(Args, Debug)]
pub struct SplitArgs {
    /// Widths of the fixed and the moving Gaussian.
    #[arg(long, value_delimiter = ',', num_args = 2, default_values_t = [1.0, 1.0])]
    pub widths: Vec<f64>,
    /// Shifts in cells along the first axis (default `M/8, M/4, M/2`).
    #[arg(long, value_delimiter = ',')]
    pub shifts: Vec<usize>,
    /// Largest acceptable gap at the last shift, relative to `D(w)`.
    #[arg(long, default_value_t = 0.05)]
    pub threshold: f64,
}

#[derive(Args, Debug)]
pub struct DeflateArgs {
    /// Known solutions to steer away from (CHQF files).
    #[arg(long = "found", value_name = "PATH")]
    pub found: Vec<PathBuf>,
    #[command(flatten)]
    pub overrides: Overrides,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = run::configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(Status::InputError as u8);
    }
    let result = match &cli.command {
        Command::Solve(a) => commands::solve(&cli.common, a),
        Command::Check(a) => commands::check(&cli.common, a),
        Command::Oracle(a) => commands::oracle(&cli.common, a),
        Command::Sweep(a) => commands::sweep(&cli.common, a),
        Command::Refine(a) => commands::refine(&cli.common, a),
        Command::Brezislieb(a) => commands::brezislieb(&cli.common, a),
        Command::Deflate(a) => commands::deflate(&cli.common, a),
    };
    let status = match result {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e:#}");
            run::status_of(&e)
        }
    };
    ExitCode::from(status as u8)
}
