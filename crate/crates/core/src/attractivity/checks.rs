use std::fmt;

use rayon::prelude::*;

use super::{AttractivityError, EnvelopeParams};
use crate::field::{weighted_norm, VectorField, WeightVector};
use crate::report::Verdict;
use crate::solver::{integrate, MultiOrder, SolveConfig, Trajectory};

/// Discretization allowance `1e-6 + 10·h` shared by the bound, sign and
/// order checks.
pub fn default_tolerance(step: f64) -> f64 {
    1e-6 + 10.0 * step
}

/// Worst `(margin, n, i)` over all grid points, ties resolved to the earliest.
fn worst_entry(traj: &Trajectory, margin: impl Fn(usize, usize, f64) -> f64) -> (f64, usize) {
    let mut worst = (f64::INFINITY, 0);
    for (n, row) in traj.rows().enumerate() {
        for (i, &x) in row.iter().enumerate() {
            let m = margin(n, i, x);
            if m < worst.0 || m.is_nan() {
                worst = (m, n);
            }
        }
    }
    worst
}

/// `Φ_i(t_n) ≤ C_i E_β(−η t_n^β)` with tolerance `1e-4·max C_i`.
pub fn envelope_check(traj: &Trajectory, env: &EnvelopeParams) -> Verdict {
    envelope_check_with(traj, env, 1e-4 * env.max_amplitude())
}

pub fn envelope_check_with(traj: &Trajectory, env: &EnvelopeParams, tol: f64) -> Verdict {
    const NAME: &str = "envelope";
    if env.amplitudes.len() != traj.dim() {
        return Verdict::failed(NAME, 0.0, "envelope and trajectory dimensions differ");
    }
    let profile: Result<Vec<f64>, AttractivityError> = (0..traj.len())
        .into_par_iter()
        .map(|n| env.profile(traj.time(n)))
        .collect();
    let profile = match profile {
        Ok(p) => p,
        Err(e) => return Verdict::failed(NAME, 0.0, format!("envelope evaluation failed: {e}")),
    };
    let (margin, n) = worst_entry(traj, |n, i, x| env.amplitudes[i] * profile[n] - x);
    Verdict::from_margin(
        NAME,
        traj.time(n),
        margin,
        tol,
        format!(
            "components stay below C_i E_beta(-eta t^beta), beta={}, eta={:e}",
            env.beta, env.eta
        ),
    )
}

/// `‖Φ(t_n)‖_v ≤ ‖ω‖_v` with tolerance [`default_tolerance`].
pub fn boundedness_check(traj: &Trajectory, v: &WeightVector) -> Verdict {
    boundedness_check_with(traj, v, default_tolerance(traj.step()))
}

pub fn boundedness_check_with(traj: &Trajectory, v: &WeightVector, tol: f64) -> Verdict {
    const NAME: &str = "boundedness";
    let m = match weighted_norm(traj.initial(), v) {
        Ok(m) => m,
        Err(e) => return Verdict::failed(NAME, 0.0, e.to_string()),
    };
    let mut worst = (f64::INFINITY, 0);
    for (n, row) in traj.rows().enumerate() {
        let margin = m - weighted_norm(row, v).unwrap_or(f64::NAN);
        if margin < worst.0 || margin.is_nan() {
            worst = (margin, n);
        }
    }
    Verdict::from_margin(
        NAME,
        traj.time(worst.1),
        worst.0,
        tol,
        format!("weighted norm never exceeds its initial value {m}"),
    )
}

/// Every component stays `≥ 0` up to [`default_tolerance`].
pub fn positivity_check(traj: &Trajectory) -> Verdict {
    positivity_check_with(traj, default_tolerance(traj.step()))
}

pub fn positivity_check_with(traj: &Trajectory, tol: f64) -> Verdict {
    let (margin, n) = worst_entry(traj, |_, _, x| x);
    Verdict::from_margin(
        "positivity",
        traj.time(n),
        margin,
        tol,
        "all components remain nonnegative",
    )
}

/// Integrates from `omega_lo ⪯ omega_hi` and checks that the order persists.
pub fn monotonicity_check(
    f: &VectorField,
    orders: &MultiOrder,
    omega_lo: &[f64],
    omega_hi: &[f64],
    cfg: &SolveConfig,
) -> Result<Verdict, AttractivityError> {
    monotonicity_check_with(f, orders, omega_lo, omega_hi, cfg, default_tolerance(cfg.step))
}

pub fn monotonicity_check_with(
    f: &VectorField,
    orders: &MultiOrder,
    omega_lo: &[f64],
    omega_hi: &[f64],
    cfg: &SolveConfig,
    tol: f64,
) -> Result<Verdict, AttractivityError> {
    if omega_lo.len() != omega_hi.len() || omega_lo.iter().zip(omega_hi).any(|(a, b)| a > b) {
        return Err(AttractivityError::Premise(
            "initial values must satisfy omega_lo <= omega_hi componentwise".into(),
        ));
    }
    let (lo, hi) = rayon::join(
        || integrate(f, orders, omega_lo, cfg),
        || integrate(f, orders, omega_hi, cfg),
    );
    Ok(order_check(&lo?, &hi?, tol))
}

/// `lo(t_n) ⪯ hi(t_n)` for two trajectories on the same grid.
pub fn order_check(lo: &Trajectory, hi: &Trajectory, tol: f64) -> Verdict {
    const NAME: &str = "monotonicity";
    if lo.dim() != hi.dim() || lo.len() != hi.len() || lo.step() != hi.step() {
        return Verdict::failed(NAME, 0.0, "trajectories live on different grids");
    }
    let (margin, n) = worst_entry(lo, |n, i, x| hi.state(n)[i] - x);
    Verdict::from_margin(
        NAME,
        lo.time(n),
        margin,
        tol,
        "ordered initial values give ordered solutions",
    )
}

/// Least-squares slope of `ln y` against `ln t` over the points with
/// `t ∈ [t0, t1]` and `y > 0`.
pub fn log_log_slope(times: &[f64], values: &[f64], t0: f64, t1: f64) -> Option<f64> {
    let pts: Vec<(f64, f64)> = times
        .iter()
        .zip(values)
        .filter(|(t, y)| **t >= t0 && **t <= t1 && **t > 0.0 && **y > 0.0)
        .map(|(t, y)| (t.ln(), y.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Late-time decay of each component, reported but never judged.
#[derive(Debug, Clone, PartialEq)]
pub struct RateSummary {
    pub exponent: f64,
    pub t_from: f64,
    /// Log-log slope of `Φ_i` over `[t_from, t_final]`.
    pub slopes: Vec<Option<f64>>,
    /// `min Φ_i(t)·t^exponent` over the same window; staying away from zero
    /// means the decay is no faster than the envelope.
    pub scaled_min: Vec<f64>,
}

pub fn rate_summary(traj: &Trajectory, exponent: f64, t_from: f64) -> RateSummary {
    let times = traj.times();
    let t_end = *times.last().unwrap_or(&0.0);
    let mut slopes = Vec::with_capacity(traj.dim());
    let mut scaled_min = Vec::with_capacity(traj.dim());
    for i in 0..traj.dim() {
        let y = traj.component(i);
        slopes.push(log_log_slope(&times, &y, t_from, t_end));
        scaled_min.push(
            times
                .iter()
                .zip(&y)
                .filter(|(t, _)| **t >= t_from)
                .map(|(t, y)| y * t.powf(exponent))
                .fold(f64::INFINITY, f64::min),
        );
    }
    RateSummary {
        exponent,
        t_from,
        slopes,
        scaled_min,
    }
}

impl fmt::Display for RateSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (s, m)) in self.slopes.iter().zip(&self.scaled_min).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let slope = s.map_or("n/a".to_string(), |s| format!("{s:.4}"));
            write!(
                f,
                "INFO rate w{} slope={slope} min_scaled={m:e} exponent={} from_t={}",
                i + 1,
                self.exponent,
                self.t_from
            )?;
        }
        Ok(())
    }
}
