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

use anyhow::{Context, Result};
use choquard::functionals::{certify, ProblemParams};
use choquard::harness::{
    brezis_lieb_demo, oracle_comparison, refinement_study, sweep_with_fields, RefinementSchedule,
    SplittingTable, SweepPlan, SweepRow,
};
use choquard::io::{read_field, write_csv, write_field, write_json, RunConfig};
use choquard::solver::{
    deflated_solve, distance_to_known, rescale_to_solution, solve_ground_state, Classification,
    Init, SolutionReport,
};
use choquard::spectral::{Field, GridSpec};
use serde::Serialize;

use crate::run::{input_error, load_run_config, require_config, require_physical_dim, Artifacts};
use crate::{
    CheckArgs, Common, DeflateArgs, InitArg, OracleArgs, RefineArgs, ScheduleArg, SolveArgs,
    SplitArgs, Status, SweepArgs,
};

fn init_of(arg: InitArg) -> Init {
    match arg {
        InitArg::Gaussian => Init::Gaussian,
        InitArg::Random => Init::Random,
    }
}

fn converged(report: &SolutionReport) -> Status {
    if report.classification == Classification::Converged {
        Status::Ok
    } else {
        Status::NotConverged
    }
}

fn print_report(report: &SolutionReport) {
    println!(
        "{}  mp={:.12}  residual={:.3e}  nehari={:.3e}  pohozaev={:.3e}  iters={}  effective_cells={:.1}",
        report.classification,
        report.mp_estimate,
        report.residual,
        report.nehari,
        report.pohozaev,
        report.iters,
        report.effective_cells
    );
}

pub fn solve(common: &Common, args: &SolveArgs) -> Result<Status> {
    let cfg = load_run_config(common, Some(&args.overrides))?;
    require_physical_dim(cfg.grid.dim())?;
    let params = cfg.problem_params()?;
    let mut art = Artifacts::create(common, cfg.output.dir.as_deref(), "solve", cfg.to_value(), cfg.solver.seed)?;
    let (w, report) = solve_ground_state(init_of(args.overrides.init), &params, &cfg.solver, cfg.grid)?;
    let u = rescale_to_solution(&w, report.mp_estimate, &params)?;
    write_field(art.path("solution.chqf"), &u)?;
    write_json(art.path("report.json"), &report)?;
    let dir = art.finish()?;
    print_report(&report);
    println!("artifacts in {}", dir.display());
    Ok(converged(&report))
}

#[derive(Serialize)]
struct CheckOutput {
    solution: String,
    grid: GridSpec,
    alpha: f64,
    p: f64,
    residual: f64,
    nehari: f64,
    pohozaev: f64,
    tol: f64,
    passed: bool,
}

pub fn check(common: &Common, args: &CheckArgs) -> Result<Status> {
    let u = read_field(&args.solution).with_context(|| format!("cannot load {}", args.solution.display()))?;
    let declared = match &common.config {
        Some(path) => Some(RunConfig::load(path)?),
        None => None,
    };
    if let Some(cfg) = &declared {
        if cfg.grid != *u.grid() {
            return Err(input_error(format!(
                "{} holds a field on {}, the configuration declares {}",
                args.solution.display(),
                u.grid(),
                cfg.grid
            )));
        }
    }
    let alpha = args.alpha.or(declared.as_ref().map(|c| c.params.alpha));
    let p = args.p.or(declared.as_ref().map(|c| c.params.p));
    let (Some(alpha), Some(p)) = (alpha, p) else {
        return Err(input_error("check needs alpha and p, from --config or --alpha/--p"));
    };
    let kernel = declared.as_ref().map(|c| c.params.kernel).unwrap_or_default();
    let tol = args.tol.or(declared.as_ref().map(|c| c.solver.tol)).unwrap_or(1e-9);
    let params = ProblemParams::with_kernel(u.grid().dim(), alpha, p, kernel)?;
    let cert = certify(&u, &params)?;
    let out = CheckOutput {
        solution: args.solution.display().to_string(),
        grid: *u.grid(),
        alpha,
        p,
        residual: cert.residual,
        nehari: cert.nehari,
        pohozaev: cert.pohozaev,
        tol,
        passed: cert.residual <= tol,
    };
    println!("{}", serde_json::to_string_pretty(&out)?);
    if common.out.is_some() {
        let mut art = Artifacts::create(common, None, "check", serde_json::to_value(&out)?, 0)?;
        art.add_input(&args.solution);
        write_json(art.path("check.json"), &out)?;
        art.finish()?;
    }
    Ok(if out.passed { Status::Ok } else { Status::NotConverged })
}

pub fn oracle(common: &Common, args: &OracleArgs) -> Result<Status> {
    let grid = GridSpec::new(args.dim, args.points, args.box_len)?;
    let params = ProblemParams::new(args.dim, args.alpha, 2.0)?;
    let v = if args.zero {
        Field::zeros(grid)
    } else {
        Field::gaussian(grid, &[0.0; 3], args.width, 1.0)
    };
    let cmp = oracle_comparison(&v, &params, common.force)?;
    println!("grid {grid}, alpha = {}, A = {:.12e}", args.alpha, params.riesz_constant().value());
    println!("{:<16} {:>8} {:>14} {:>14}", "region", "samples", "rel_l2", "rel_max");
    for r in &cmp.regions {
        let name = serde_json::to_value(r.region)?;
        println!(
            "{:<16} {:>8} {:>14.6e} {:>14.6e}",
            name.as_str().unwrap_or("?"),
            r.samples,
            r.relative_l2,
            r.relative_max
        );
    }
    if common.out.is_some() {
        let echo = serde_json::json!({
            "dim": args.dim, "points": args.points, "box": args.box_len,
            "alpha": args.alpha, "width": args.width, "zero": args.zero,
        });
        let mut art = Artifacts::create(common, None, "oracle", echo, 0)?;
        write_json(art.path("oracle.json"), &cmp)?;
        art.finish()?;
    }
    Ok(if cmp.interior_error() <= args.threshold {
        Status::Ok
    } else {
        Status::NotConverged
    })
}

pub fn sweep(common: &Common, args: &SweepArgs) -> Result<Status> {
    let path = require_config(common)?;
    let text = fs::read_to_string(path).map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
    let mut plan: SweepPlan = serde_json::from_str(&text).map_err(|e| input_error(e.to_string()))?;
    if let Some(s) = common.seed {
        plan.seed = s;
    }
    for g in &plan.grids {
        require_physical_dim(g.dim())?;
    }
    plan.validate()?;
    let mut art = Artifacts::create(common, None, "sweep", serde_json::to_value(&plan)?, plan.seed)?;
    let results = sweep_with_fields(&plan)?;
    let rows: Vec<SweepRow> = results.iter().map(|(r, _)| r.clone()).collect();
    let lines: Vec<String> = rows.iter().map(SweepRow::csv_line).collect();
    write_csv(art.path("sweep.csv"), SweepRow::CSV_HEADER, &lines)?;
    write_json(art.path("sweep.json"), &rows)?;
    if args.snapshots {
        for (row, field) in &results {
            if let Some(w) = field {
                write_field(art.path(&row.snapshot_name()), w)?;
            }
        }
    }
    art.finish()?;
    println!("{}", SweepRow::CSV_HEADER);
    for l in &lines {
        println!("{l}");
    }
    let failed = rows.iter().any(|r| {
        let inside = ProblemParams::with_kernel(r.dim, r.alpha, r.p, plan.kernel)
            .map(|pp| pp.in_existence_window())
            .unwrap_or(false);
        r.error.is_some() || (inside && r.classification != "converged")
    });
    Ok(if common.strict && failed {
        Status::NotConverged
    } else {
        Status::Ok
    })
}

pub fn refine(common: &Common, args: &RefineArgs) -> Result<Status> {
    let cfg = load_run_config(common, None)?;
    require_physical_dim(cfg.grid.dim())?;
    let params = cfg.problem_params()?;
    let schedule = match args.schedule {
        ScheduleArg::Simultaneous => RefinementSchedule::Simultaneous,
        ScheduleArg::Alternating => RefinementSchedule::Alternating,
    };
    let mut art = Artifacts::create(common, cfg.output.dir.as_deref(), "refine", cfg.to_value(), cfg.solver.seed)?;
    let table = refinement_study(&params, cfg.grid, args.levels, &cfg.solver, schedule)?;
    write_csv(art.path("refine.csv"), choquard::harness::RefinementTable::CSV_HEADER, &table.csv_lines())?;
    write_json(art.path("refine.json"), &table)?;
    art.finish()?;
    println!("{}", choquard::harness::RefinementTable::CSV_HEADER);
    for l in table.csv_lines() {
        println!("{l}");
    }
    let all_converged = table.rows.iter().all(|r| r.classification == Classification::Converged);
    let small = table.final_change().is_none_or(|c| c <= args.threshold);
    Ok(if all_converged && table.is_monotone() && small {
        Status::Ok
    } else {
        Status::NotConverged
    })
}

pub fn brezislieb(common: &Common, args: &SplitArgs) -> Result<Status> {
    let cfg = load_run_config(common, None)?;
    require_physical_dim(cfg.grid.dim())?;
    let params = cfg.problem_params()?;
    let m = cfg.grid.points();
    let shifts = if args.shifts.is_empty() {
        vec![m / 8, m / 4, m / 2]
    } else {
        args.shifts.clone()
    };
    let widths = (args.widths[0], args.widths[1]);
    let mut art = Artifacts::create(common, cfg.output.dir.as_deref(), "brezislieb", cfg.to_value(), cfg.solver.seed)?;
    let table = brezis_lieb_demo(&params, cfg.grid, widths, &shifts)?;
    write_csv(art.path("brezislieb.csv"), SplittingTable::CSV_HEADER, &table.csv_lines())?;
    write_json(art.path("brezislieb.json"), &table)?;
    art.finish()?;
    println!("D(w) = {:.12e}", table.d_w);
    println!("{}", SplittingTable::CSV_HEADER);
    for l in table.csv_lines() {
        println!("{l}");
    }
    let small = table.final_relative_gap().is_none_or(|g| g <= args.threshold);
    Ok(if small && table.is_non_increasing() {
        Status::Ok
    } else {
        Status::NotConverged
    })
}

#[derive(Serialize)]
struct DeflationOutput<'a> {
    #[serde(flatten)]
    report: &'a SolutionReport,
    distance_to_known: Option<f64>,
}

pub fn deflate(common: &Common, args: &DeflateArgs) -> Result<Status> {
    let cfg = load_run_config(common, Some(&args.overrides))?;
    require_physical_dim(cfg.grid.dim())?;
    let params = cfg.problem_params()?;
    let found = args
        .found
        .iter()
        .map(|p| read_field(p).with_context(|| format!("cannot load {}", p.display())))
        .collect::<Result<Vec<_>>>()?;
    let mut art = Artifacts::create(common, cfg.output.dir.as_deref(), "deflate", cfg.to_value(), cfg.solver.seed)?;
    for p in &args.found {
        art.add_input(p);
    }
    let (w, report) = deflated_solve(init_of(args.overrides.init), &found, &params, &cfg.solver, cfg.grid)?;
    let distance = if found.is_empty() {
        None
    } else {
        Some(distance_to_known(&w, &found, &params)?)
    };
    let u = rescale_to_solution(&w, report.mp_estimate, &params)?;
    write_field(art.path("solution.chqf"), &u)?;
    write_json(
        art.path("report.json"),
        &DeflationOutput {
            report: &report,
            distance_to_known: distance,
        },
    )?;
    art.finish()?;
    print_report(&report);
    if let Some(d) = distance {
        println!("relative distance to known solutions: {d:.4}");
    }
    Ok(converged(&report))
}
