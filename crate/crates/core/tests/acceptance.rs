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

//! One test per acceptance criterion. Each prints a `criterion N: PASS|FAIL`
//! line with the measured numbers before asserting.

mod common;

use std::f64::consts::PI;

use choquard::functionals::{
    action, dterm, dterm_gradient, hls_ratio, nehari_defect, pohozaev_defect, riesz_convolve,
    riesz_symbol, ProblemParams, RieszKernel,
};
use choquard::harness::{brezis_lieb_demo, oracle_comparison, refinement_study, RefinementSchedule};
use choquard::solver::{
    deflated_solve, distance_to_known, rescale_to_solution, solve_ground_state, Classification,
    Init, SolverConfig,
};
use choquard::spectral::{
    forward_transform, inverse_transform, l2_inner, quadratic_form_a, quarter_op, sqrt_op, Field,
    GridSpec,
};
use common::{rel_max_diff, rng, smooth_field, white_noise};
use rand::Rng;

/// `M_p` at `(N, alpha, p) = (2, 1, 2)` on the finest level of the three-level study.
const MP_FIXTURE: f64 = 3.0180328843150237;

fn verdict(n: u32, title: &str, pass: bool, detail: &str) {
    println!("criterion {n} ({title}): {}  {detail}", if pass { "PASS" } else { "FAIL" });
}

fn planar(p: f64) -> ProblemParams {
    ProblemParams::new(2, 1.0, p).unwrap()
}

#[test]
fn criterion_01_spectral_correctness() {
    let mut worst_trip = 0.0f64;
    for (seed, grid) in [(1, GridSpec::new(1, 64, 5.0)), (2, GridSpec::new(2, 32, 9.0)), (3, GridSpec::new(3, 16, 4.0))] {
        let grid = grid.unwrap();
        let u = white_noise(grid, &mut rng(seed));
        let back = inverse_transform(&forward_transform(&u).unwrap()).unwrap();
        worst_trip = worst_trip.max(rel_max_diff(&back, &u));
    }

    let grid = GridSpec::new(2, 32, 12.0).unwrap();
    let (k1, k2) = (3.0, -2.0);
    let xi = 2.0 * PI / grid.box_len();
    let mode = Field::from_fn(grid, |x| (xi * (k1 * x[0] + k2 * x[1])).cos());
    let s = xi * xi * (k1 * k1 + k2 * k2);
    let mut worst_eig = 0.0f64;
    let mut check = |out: &Field, factor: f64| {
        worst_eig = worst_eig.max(rel_max_diff(out, &mode.scaled(factor)));
    };
    check(&sqrt_op(&mode).unwrap(), (1.0 + s).sqrt());
    check(&quarter_op(&mode).unwrap(), (1.0 + s).powf(0.25));
    let mean_free = ProblemParams::with_kernel(2, 1.0, 2.0, RieszKernel::MeanFree).unwrap();
    check(&riesz_convolve(&mode, &mean_free).unwrap(), s.powf(-0.5));
    let truncated = planar(2.0);
    let symbol = riesz_symbol(&grid, &truncated);
    let k = grid.flatten(&[3, 32 - 2]);
    check(&riesz_convolve(&mode, &truncated).unwrap(), symbol[k]);

    let pass = worst_trip <= 1e-12 && worst_eig <= 1e-12;
    verdict(1, "spectral correctness", pass, &format!("round trip {worst_trip:.2e}, eigenfunctions {worst_eig:.2e}"));
    assert!(pass);
}

#[test]
fn criterion_02_riesz_oracle() {
    let params = planar(2.0);
    let mut errors = Vec::new();
    for (l, m) in [(16.0, 32), (32.0, 64)] {
        let grid = GridSpec::new(2, m, l).unwrap();
        let v = Field::gaussian(grid, &[0.0, 0.0], 1.0, 1.0);
        errors.push(oracle_comparison(&v, &params, false).unwrap().interior_error());
    }
    let pass = errors[0] <= 0.02 && errors[1] < errors[0];
    verdict(
        2,
        "Riesz oracle",
        pass,
        &format!("interior-third relative L2 error {:.4} at L=16, {:.4} at L=32", errors[0], errors[1]),
    );
    assert!(pass);
}

#[test]
fn criterion_03_gradient_checks() {
    let grid = GridSpec::new(2, 32, 10.0).unwrap();
    let params = planar(2.0);
    let eps = 1e-5;
    let mut r = rng(33);
    let (mut worst_a, mut worst_d) = (0.0f64, 0.0f64);
    for _ in 0..10 {
        let u = smooth_field(grid, &mut r);
        let phi = smooth_field(grid, &mut r);
        let plus = u.axpy(eps, &phi).unwrap();
        let minus = u.axpy(-eps, &phi).unwrap();

        let fd_a = (quadratic_form_a(&plus) - quadratic_form_a(&minus)) / (2.0 * eps);
        let pair_a = l2_inner(&sqrt_op(&u).unwrap().scaled(2.0), &phi).unwrap();
        worst_a = worst_a.max((fd_a - pair_a).abs() / pair_a.abs());

        let fd_d = (dterm(&plus, &params).unwrap() - dterm(&minus, &params).unwrap()) / (2.0 * eps);
        let pair_d = l2_inner(&dterm_gradient(&u, &params).unwrap(), &phi).unwrap();
        worst_d = worst_d.max((fd_d - pair_d).abs() / pair_d.abs());
    }
    let pass = worst_a <= 1e-6 && worst_d <= 1e-6;
    verdict(3, "gradient checks", pass, &format!("worst relative mismatch A {worst_a:.2e}, D {worst_d:.2e}"));
    assert!(pass);
}

#[test]
fn criterion_04_ground_state_certificate() {
    let params = planar(2.0);
    let config = SolverConfig::default();
    let mut rows = Vec::new();
    for (l, m) in [(16.0, 64), (32.0, 128)] {
        let grid = GridSpec::new(2, m, l).unwrap();
        let (w, report) = solve_ground_state(Init::Gaussian, &params, &config, grid).unwrap();
        let u = rescale_to_solution(&w, report.mp_estimate, &params).unwrap();
        let nehari = nehari_defect(&u, &params).unwrap();
        let pohozaev = pohozaev_defect(&u, &params).unwrap();
        let one_signed = w.values().iter().all(|&v| v > 0.0);
        rows.push((report, nehari, pohozaev, one_signed));
    }
    let (base, nehari, pohozaev, one_signed) = &rows[0];
    let refined = rows[1].2;
    let pass = base.classification == Classification::Converged
        && base.residual <= 1e-8
        && nehari.abs() <= 1e-6
        && pohozaev.abs() <= 1e-3
        && refined.abs() < pohozaev.abs()
        && *one_signed;
    verdict(
        4,
        "ground-state certificate",
        pass,
        &format!(
            "{} after {} steps, residual {:.2e}, Nehari {:.2e}, Pohozaev {:.2e} -> {:.2e} under doubling, one-signed {}, M_p {:.10}",
            base.classification, base.iters, base.residual, nehari, pohozaev, refined, one_signed, base.mp_estimate
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_05_pohozaev_dilation_form() {
    let grid = GridSpec::new(2, 64, 16.0).unwrap();
    let params = planar(2.0);
    let u = Field::gaussian(grid, &[0.0, 0.0], 1.7, 1.3);
    let eps = 1e-4;
    let s = |lambda: f64| action(&u.regridded(grid.scaled(lambda).unwrap()).unwrap(), &params).unwrap();
    let fd = (s(1.0 + eps) - s(1.0 - eps)) / (2.0 * eps);
    let closed = pohozaev_defect(&u, &params).unwrap() * quadratic_form_a(&u);
    let rel = (fd - closed).abs() / closed.abs();
    let pass = rel <= 1e-6;
    verdict(5, "Pohozaev dilation form", pass, &format!("closed {closed:.10e}, difference quotient {fd:.10e}, relative {rel:.2e}"));
    assert!(pass);
}

#[test]
fn criterion_06_refinement_consistency() {
    let params = planar(2.0);
    let base = GridSpec::new(2, 64, 16.0).unwrap();
    let table = refinement_study(&params, base, 3, &SolverConfig::default(), RefinementSchedule::Simultaneous).unwrap();
    let changes: Vec<String> = table.changes().iter().map(|c| format!("{c:.3e}")).collect();
    let last = table.rows.last().unwrap();
    let fixture_dev = (last.mp_estimate - MP_FIXTURE).abs() / MP_FIXTURE;
    let pass = table.rows.iter().all(|r| r.classification == Classification::Converged)
        && table.is_monotone()
        && table.final_change().is_some_and(|c| c <= 5e-3)
        && fixture_dev <= 1e-9;
    verdict(
        6,
        "refinement consistency",
        pass,
        &format!("relative changes [{}], finest M_p {:.16} (fixture deviation {fixture_dev:.1e})", changes.join(", "), last.mp_estimate),
    );
    assert!(pass);
}

#[test]
fn criterion_07_nonexistence_behavior() {
    let params = planar(3.5);
    let grid = GridSpec::new(2, 128, 16.0).unwrap();
    let (_, report) = solve_ground_state(Init::Gaussian, &params, &SolverConfig::default(), grid).unwrap();
    let pr = &report.participation_ratio_history;
    let linf = &report.linf_history;
    let growth = linf.last().unwrap() / linf[0];
    let shrink = pr[0] / pr.last().unwrap();
    let pass = report.classification == Classification::Concentrating;
    verdict(
        7,
        "nonexistence behavior",
        pass,
        &format!(
            "classified {} after {} steps: max|w| grew x{growth:.2}, participation ratio fell /{shrink:.1}, {:.1} effective cells, Pohozaev {:.3}",
            report.classification, report.iters, report.effective_cells, report.pohozaev
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_08_brezis_lieb_splitting() {
    let params = planar(2.0);
    let grid = GridSpec::new(2, 64, 32.0).unwrap();
    let table = brezis_lieb_demo(&params, grid, (1.0, 1.0), &[8, 16, 32]).unwrap();
    let gaps: Vec<f64> = table.rows.iter().map(|r| r.relative_gap).collect();
    let pass = table.final_relative_gap().unwrap() <= 0.05 && table.is_non_increasing();
    verdict(8, "Brezis-Lieb splitting", pass, &format!("gap / D(w) at shifts 8, 16, 32: {gaps:.4?}"));
    assert!(pass);
}

#[test]
fn criterion_09_invariances() {
    let params = planar(2.0);
    let grid = GridSpec::new(2, 64, 16.0).unwrap();
    let config = SolverConfig::default();
    let (_, base) = solve_ground_state(Init::Gaussian, &params, &config, grid).unwrap();
    let mut r = rng(9);
    let shift = [r.random_range(-20i64..20), r.random_range(-20i64..20)];
    let shifted_init = Field::gaussian(grid, &[0.0, 0.0], 2.0, 1.0).shifted(&shift);
    let (_, moved) = solve_ground_state(Init::Field(shifted_init), &params, &config, grid).unwrap();
    let mp_dev = (moved.mp_estimate - base.mp_estimate).abs() / base.mp_estimate;

    let mut worst_hls = 0.0f64;
    for _ in 0..5 {
        let v = smooth_field(grid, &mut r);
        let h = hls_ratio(&v, &params).unwrap();
        let scaled = hls_ratio(&v.scaled(2.0), &params).unwrap();
        let s = [r.random_range(0i64..64), r.random_range(0i64..64)];
        let moved = hls_ratio(&v.shifted(&s), &params).unwrap();
        worst_hls = worst_hls.max((scaled - h).abs() / h).max((moved - h).abs() / h);
    }
    let pass = mp_dev <= 1e-6 && worst_hls <= 1e-12;
    verdict(
        9,
        "translation and scale invariance",
        pass,
        &format!("M_p shift {shift:?} deviation {mp_dev:.2e}, HLS ratio deviation {worst_hls:.2e}"),
    );
    assert!(pass);
}

#[test]
fn criterion_10_multiplicity_probe_soft() {
    let params = planar(2.0);
    let grid = GridSpec::new(2, 64, 16.0).unwrap();
    let config = SolverConfig {
        symmetrize: true,
        ..SolverConfig::default()
    };
    let (ground, _) = solve_ground_state(Init::Gaussian, &params, &config, grid).unwrap();
    let deflated = SolverConfig { max_iter: 3000, ..config };
    let (w, report) = deflated_solve(Init::Random, std::slice::from_ref(&ground), &params, &deflated, grid).unwrap();
    let distance = distance_to_known(&w, &[ground], &params).unwrap();
    let pass = report.residual <= 1e-6 && distance >= 0.1;
    let detail = format!(
        "{} after {} steps, undeflated residual {:.2e}, relative distance {distance:.3}",
        report.classification, report.iters, report.residual
    );
    if pass {
        verdict(10, "multiplicity probe, soft", true, &detail);
    } else {
        println!("criterion 10 (multiplicity probe, soft): WARN  {detail}");
    }
    assert!(report.residual.is_finite() && distance.is_finite());
}
