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

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::config::{Init, SolverConfig};
use super::report::{AbortState, Classification, SolutionReport};
use super::symmetry::{centering_shift, participation_ratio, subcell_offset, subcell_shifted, symmetrize};
use crate::error::{Error, Result};
use crate::functionals::{
    abs_pow, certify, choquard_term_unchecked, dterm, relative_gap,
    riesz_convolve_unchecked, ProblemParams,
};
use crate::spectral::{
    inv_sqrt_op_fast, l2_norm, quadratic_form_a, sqrt_op_fast, Field, GridSpec,
};

/// Growth of `max|w|` and shrinkage of the participation ratio that mark a run as concentrating.
pub const TREND_FACTOR: f64 = 10.0;
/// Participation ratio above which a flattening run counts as spreading.
pub const SPREAD_RATIO: f64 = 0.5;
/// Relative distance a deflated solution must keep from every known one.
pub const DISTINCT_THRESHOLD: f64 = 0.1;
/// Sub-cell centroid offsets below this many cells are left alone when recentering.
const SUBCELL_MIN: f64 = 1e-6;
/// Tolerance on `|D(u) - 1|` for inputs declared to lie on the constraint.
pub const CONSTRAINT_TOL: f64 = 1e-8;

/// Returns `t u` with `t = D(u)^(-1/(2p))`, so that `D(t u) = 1`.
pub fn normalize_to_constraint(u: &Field, params: &ProblemParams) -> Result<Field> {
    let d = dterm(u, params)?;
    if !(d > 0.0 && d.is_finite()) {
        return Err(Error::NotNormalizable { value: d });
    }
    if d == 1.0 {
        return Ok(u.clone());
    }
    Ok(u.scaled(d.powf(-1.0 / (2.0 * params.p()))))
}

/// Descent direction on `{D = 1}` and the multiplier `lambda = A(u)/p`.
///
/// The raw gradient is `r = sqrt_op(u) - lambda p K(u)` with
/// `K(u) = (I_alpha * |u|^p)|u|^(p-2)u`, which is L2-orthogonal to `u`
/// whenever `D(u) = 1`.
pub fn constrained_gradient(
    u: &Field,
    params: &ProblemParams,
    config: &SolverConfig,
) -> Result<(Field, f64)> {
    let d = dterm(u, params)?;
    if (d - 1.0).abs() > CONSTRAINT_TOL {
        return Err(Error::ConstraintViolated {
            deviation: (d - 1.0).abs(),
        });
    }
    let a = quadratic_form_a(u);
    let lambda = a / params.p();
    let r = sqrt_op_fast(u).axpy(-a, &choquard_term_unchecked(u, params))?;
    let g = if config.precondition { inv_sqrt_op_fast(&r) } else { r };
    Ok((g, lambda))
}

/// `u = mp^(1/(2p-2)) w`, the solution of the equation attached to a constrained minimizer.
pub fn rescale_to_solution(w: &Field, mp: f64, params: &ProblemParams) -> Result<Field> {
    let p = params.p();
    if p <= 1.0 {
        return Err(Error::InvalidParams(format!("rescaling needs p > 1, got {p}")));
    }
    if !(mp > 0.0 && mp.is_finite()) {
        return Err(Error::InvalidParams(format!("rescaling needs mp > 0, got {mp}")));
    }
    Ok(w.scaled(mp.powf(1.0 / (2.0 * p - 2.0))))
}

/// Flips the sign so the largest-magnitude sample is positive.
pub fn sign_aligned(w: &Field) -> Field {
    let v = w.values()[w.argmax_abs()];
    if v < 0.0 {
        w.scaled(-1.0)
    } else {
        w.clone()
    }
}

/// Trend classification from the iterate histories, if either detector fires.
pub fn trend(pr: &[f64], linf: &[f64]) -> Option<Classification> {
    let (&pr0, &pr1) = (pr.first()?, pr.last()?);
    let (&l0, &l1) = (linf.first()?, linf.last()?);
    if l1 >= TREND_FACTOR * l0 && pr0 >= TREND_FACTOR * pr1 {
        return Some(Classification::Concentrating);
    }
    if pr1 >= SPREAD_RATIO && pr1 > pr0 && l0 >= TREND_FACTOR * l1 {
        return Some(Classification::Spreading);
    }
    None
}

/// A point on the constraint together with what the next step needs.
struct State {
    u: Field,
    energy: f64,
    pu: Field,
    kt: Field,
}

impl State {
    /// Normalizes `v` onto the constraint, reusing one Riesz convolution for `D` and `K`.
    fn on_constraint(v: Field, params: &ProblemParams) -> std::result::Result<State, Error> {
        let p = params.p();
        let potential = riesz_convolve_unchecked(&abs_pow(&v, p), params);
        let h_n = v.grid().cell_volume();
        let mut d = 0.0;
        for (w, x) in potential.values().iter().zip(v.values()) {
            d += w * x.abs().powf(p);
        }
        d *= h_n;
        if !d.is_finite() {
            return Err(Error::NonFinite { index: 0 });
        }
        if d <= 0.0 {
            return Err(Error::NotNormalizable { value: d });
        }
        let t = d.powf(-1.0 / (2.0 * p));
        let u = v.scaled(t);
        let pu = sqrt_op_fast(&u);
        let kt_scale = t.powf(2.0 * p - 1.0);
        let kt = Field::from_raw(
            *v.grid(),
            potential
                .values()
                .iter()
                .zip(v.values())
                .map(|(&w, &x)| {
                    if x == 0.0 {
                        0.0
                    } else {
                        kt_scale * w * x.signum() * x.abs().powf(p - 1.0)
                    }
                })
                .collect(),
        );
        let energy = h_n * u.values().iter().zip(pu.values()).map(|(a, b)| a * b).sum::<f64>();
        if !energy.is_finite() {
            return Err(Error::NonFinite { index: 0 });
        }
        Ok(State { u, energy, pu, kt })
    }

    fn raw_gradient(&self) -> Field {
        Field::from_raw(
            *self.u.grid(),
            self.pu
                .values()
                .iter()
                .zip(self.kt.values())
                .map(|(a, k)| a - self.energy * k)
                .collect(),
        )
    }

    fn residual(&self) -> f64 {
        relative_gap(&self.pu, &self.kt, self.energy)
    }

    fn shifted(&self, shift: &[i64]) -> State {
        State {
            u: self.u.shifted(shift),
            energy: self.energy,
            pu: self.pu.shifted(shift),
            kt: self.kt.shifted(shift),
        }
    }
}

fn initial_field(init: Init, grid: GridSpec, seed: u64) -> Result<Field> {
    let l = grid.box_len();
    match init {
        Init::Gaussian => Ok(Field::gaussian(grid, &[0.0; 3], l / 8.0, 1.0)),
        Init::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut values = vec![0.0; grid.len()];
            for _ in 0..3 {
                let center: Vec<f64> = (0..grid.dim()).map(|_| rng.random_range(-l / 4.0..l / 4.0)).collect();
                let width = rng.random_range(l / 16.0..l / 6.0);
                let amp = rng.random_range(0.5..1.0);
                let bump = Field::gaussian(grid, &center, width, amp);
                for (v, b) in values.iter_mut().zip(bump.values()) {
                    *v += b;
                }
            }
            Field::new(grid, values)
        }
        Init::Field(f) => {
            f.check_finite()?;
            Ok(f)
        }
    }
}

/// Targets rescaled onto the constraint, with their negatives (the equation is odd).
fn deflation_set(targets: &[Field], grid: &GridSpec, params: &ProblemParams) -> Result<Vec<Field>> {
    let mut out = Vec::with_capacity(2 * targets.len());
    for t in targets {
        if t.grid() != grid {
            return Err(Error::GridMismatch {
                left: grid.to_string(),
                right: t.grid().to_string(),
            });
        }
        let w = normalize_to_constraint(t, params)?;
        out.push(w.scaled(-1.0));
        out.push(w);
    }
    Ok(out)
}

fn distance_sq(a: &Field, b: &Field) -> f64 {
    let s: f64 = a.values().iter().zip(b.values()).map(|(x, y)| (x - y) * (x - y)).sum();
    s * a.grid().cell_volume()
}

/// Smallest `||w - t|| / ||w||` over the targets.
fn min_relative_distance(w: &Field, targets: &[Field]) -> f64 {
    let n = l2_norm(w);
    targets
        .iter()
        .map(|t| distance_sq(w, t).sqrt() / n)
        .fold(f64::INFINITY, f64::min)
}

fn abort(iteration: usize, tau: f64, state: &State, reason: String) -> Error {
    Error::SolverAbort(Box::new(AbortState {
        iteration,
        tau,
        energy: state.energy,
        residual: state.residual(),
        linf: state.u.max_abs(),
        reason,
    }))
}

/// Minimizes `A` over `{D = 1}` by normalized, preconditioned gradient flow.
///
/// Each step tries `normalize(u - tau g)` and accepts it when `A` does not
/// increase beyond round-off; otherwise `tau` shrinks by `backtrack`. The run
/// stops when the relative Euler-Lagrange residual reaches `tol`, when a
/// concentration or spreading trend is detected, or after `max_iter` steps.
///
/// Every `recenter_every` steps the iterate is shifted by whole cells toward
/// the box center, then translated spectrally by the remaining fraction of a
/// cell when that does not raise `A`.
///
/// Returns the sign-aligned constrained minimizer `w` and a report whose
/// defects refer to the rescaled solution.
pub fn solve_ground_state(
    init: Init,
    params: &ProblemParams,
    config: &SolverConfig,
    grid: GridSpec,
) -> Result<(Field, SolutionReport)> {
    config.validate()?;
    let grid = grid.validated()?;
    if grid.dim() != params.dim() {
        return Err(Error::InvalidParams(format!(
            "grid has dimension {} but the parameters are for {}",
            grid.dim(),
            params.dim()
        )));
    }
    let mut start = initial_field(init, grid, config.seed)?;
    if start.grid() != &grid {
        return Err(Error::GridMismatch {
            left: grid.to_string(),
            right: start.grid().to_string(),
        });
    }
    if config.symmetrize {
        start = symmetrize(&start)?;
    }
    let targets = deflation_set(&config.deflation_targets, &grid, params)?;
    let mut state = match State::on_constraint(start, params) {
        Ok(s) => s,
        Err(Error::NonFinite { .. }) => {
            return Err(Error::InvalidParams("initial field has a non-finite constraint value".into()))
        }
        Err(e) => return Err(e),
    };

    let cap = 10.0 * config.tau0;
    let slack_factor = 8.0 * f64::EPSILON * (grid.len() as f64).sqrt();
    let mut tau = config.tau0;
    let mut pr_hist = vec![participation_ratio(&state.u)];
    let mut linf_hist = vec![state.u.max_abs()];
    let mut energy_hist = vec![state.energy];
    let mut deflation_hist = Vec::new();
    if !targets.is_empty() {
        deflation_hist.push(min_relative_distance(&state.u, &targets));
    }
    let mut iters = 0;
    let mut stalled = false;
    let mut classification = Classification::Maxiter;

    loop {
        if let Some(c) = trend(&pr_hist, &linf_hist) {
            classification = c;
            break;
        }
        if state.residual() <= config.tol {
            classification = Classification::Converged;
            break;
        }
        if iters == config.max_iter {
            break;
        }
        let r = state.raw_gradient();
        let mut g = if config.precondition { inv_sqrt_op_fast(&r) } else { r };
        if !targets.is_empty() {
            let factor: f64 = targets.iter().map(|t| 1.0 + 1.0 / distance_sq(&state.u, t)).product();
            g = g.scaled(factor);
        }
        let accepted = loop {
            let mut cand = state.u.axpy(-tau, &g)?;
            if config.symmetrize {
                cand = symmetrize(&cand)?;
            }
            match State::on_constraint(cand, params) {
                Ok(next) if next.energy <= state.energy * (1.0 + slack_factor) => break Some(next),
                Ok(_) | Err(Error::NotNormalizable { .. }) => {}
                Err(Error::NonFinite { .. }) => {
                    return Err(abort(iters, tau, &state, "non-finite trial iterate".into()))
                }
                Err(e) => return Err(e),
            }
            tau *= config.backtrack;
            if tau < 1e-12 * config.tau0 {
                break None;
            }
        };
        let Some(next) = accepted else {
            stalled = true;
            break;
        };
        state = next;
        iters += 1;
        tau = (tau * config.grow).min(cap);
        if config.recenter_every > 0 && !config.symmetrize && iters % config.recenter_every == 0 {
            let shift = centering_shift(&state.u)?;
            if shift.iter().any(|&s| s != 0) {
                state = state.shifted(&shift);
            }
            // lattice pinning of sub-cell translations is too weak for the flow to resolve quickly
            let delta = subcell_offset(&state.u)?;
            if delta.iter().any(|d| d.abs() > SUBCELL_MIN) {
                if let Ok(next) = State::on_constraint(subcell_shifted(&state.u, &delta)?, params) {
                    if next.energy <= state.energy * (1.0 + slack_factor) {
                        state = next;
                    }
                }
            }
        }
        pr_hist.push(participation_ratio(&state.u));
        linf_hist.push(state.u.max_abs());
        energy_hist.push(state.energy);
        if !targets.is_empty() {
            deflation_hist.push(min_relative_distance(&state.u, &targets));
        }
    }

    let w = sign_aligned(&state.u);
    let mp = quadratic_form_a(&w);
    let u = rescale_to_solution(&w, mp, params)?;
    let cert = certify(&u, params)?;
    if classification == Classification::Converged && (cert.residual > config.tol || cert.residual.is_nan()) {
        classification = Classification::Maxiter;
    }
    let effective_cells = pr_hist.last().copied().unwrap_or(0.0) * grid.len() as f64;
    let report = SolutionReport {
        mp_estimate: mp,
        residual: cert.residual,
        nehari: cert.nehari,
        pohozaev: cert.pohozaev,
        iters,
        classification,
        participation_ratio_history: pr_hist,
        linf_history: linf_hist,
        energy_history: energy_hist,
        lambda: mp / params.p(),
        stalled,
        effective_cells,
        deflation_history: deflation_hist,
    };
    Ok((w, report))
}

/// Gradient flow with the deflation factor `prod_i (1 + 1/||u - w_i||^2)` for
/// each known solution `w_i` and its negative.
///
/// A run only counts as converged when the undeflated residual meets `tol`
/// and the result keeps a relative L2 distance of at least
/// [`DISTINCT_THRESHOLD`] from every known solution; otherwise it is
/// reported as `maxiter` with its deflation history.
pub fn deflated_solve(
    init: Init,
    found: &[Field],
    params: &ProblemParams,
    config: &SolverConfig,
    grid: GridSpec,
) -> Result<(Field, SolutionReport)> {
    let mut cfg = config.clone();
    cfg.deflation_targets.extend(found.iter().cloned());
    let (w, mut report) = solve_ground_state(init, params, &cfg, grid)?;
    if !cfg.deflation_targets.is_empty() && report.classification == Classification::Converged {
        let targets = deflation_set(&cfg.deflation_targets, &grid, params)?;
        if min_relative_distance(&w, &targets) < DISTINCT_THRESHOLD {
            report.classification = Classification::Maxiter;
        }
    }
    Ok((w, report))
}

/// Smallest relative L2 distance from `w` to the known solutions and their
/// negatives, all taken on the constraint.
pub fn distance_to_known(w: &Field, found: &[Field], params: &ProblemParams) -> Result<f64> {
    let w = normalize_to_constraint(w, params)?;
    let targets = deflation_set(found, w.grid(), params)?;
    Ok(min_relative_distance(&w, &targets))
}
