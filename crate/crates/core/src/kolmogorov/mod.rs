//! Fractional Kolmogorov systems `D^α w = diag(w)(b + f(w))`: assembly,
//! the positive equilibrium and the algebraic convergence rate towards it.

use std::fmt;

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

use crate::attractivity::{default_tolerance, log_log_slope};
use crate::field::{analyze, fmt_vec, AnalyzeOptions, FieldError, HypothesisReport, VectorField};
use crate::report::Verdict;
use crate::solver::{integrate, MultiOrder, SolveConfig, SolverError, Trajectory};

/// Largest homogeneity residual accepted for the interaction field.
pub const HOMOGENEITY_TOL: f64 = 1e-8;
/// Residual `‖b + f(w*)‖∞` required of an equilibrium.
pub const EQUILIBRIUM_TOL: f64 = 1e-10;
/// Newton iterates are kept in `{w ⪰ ORTHANT_FLOOR·1}`.
pub const ORTHANT_FLOOR: f64 = 1e-8;
pub const MAX_NEWTON: usize = 100;
/// Shortest horizon accepted by [`rate_check`].
pub const MIN_RATE_HORIZON: f64 = 1e3;
/// Slack of the rate check relative to the first-decade bound.
pub const RATE_REL_TOL: f64 = 0.05;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KolmogorovError {
    #[error("intrinsic rate b_{index} = {value} is not strictly positive")]
    NonPositiveRate { index: usize, value: f64 },
    #[error("interaction field fails the hypotheses: {0}")]
    Hypothesis(String),
    #[error("Newton iteration stalled after {iterations} steps with residual {residual:e}")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("equilibrium left the positive orthant: {point:?}")]
    DomainViolation { point: Vec<f64> },
    #[error("singular Jacobian at {point:?}")]
    SingularJacobian { point: Vec<f64> },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// `g(w) = diag(w)(b + f(w))` together with its ingredients.
#[derive(Debug, Clone)]
pub struct KolmogorovSystem {
    b: Vec<f64>,
    interaction: VectorField,
    assembled: VectorField,
    report: HypothesisReport,
}

impl KolmogorovSystem {
    pub fn rates(&self) -> &[f64] {
        &self.b
    }

    pub fn interaction(&self) -> &VectorField {
        &self.interaction
    }

    pub fn assembled(&self) -> &VectorField {
        &self.assembled
    }

    /// Screening results for the interaction field.
    pub fn hypotheses(&self) -> &HypothesisReport {
        &self.report
    }

    /// Homogeneity degree `p` of the interaction field.
    pub fn degree(&self) -> f64 {
        self.report
            .homogeneity
            .as_ref()
            .map_or(f64::NAN, |h| h.degree)
    }

    pub fn dim(&self) -> usize {
        self.b.len()
    }

    /// `b + f(w)`.
    fn per_capita(&self, w: &[f64]) -> Vec<f64> {
        let mut r = self.interaction.eval(w);
        for (ri, bi) in r.iter_mut().zip(&self.b) {
            *ri += bi;
        }
        r
    }
}

/// Builds the Kolmogorov field after screening `f` for cooperativity,
/// homogeneity of degree `p ≥ 1` and a decay direction.
pub fn assemble(b: Vec<f64>, f: VectorField) -> Result<KolmogorovSystem, KolmogorovError> {
    assemble_with(b, f, &AnalyzeOptions::default())
}

pub fn assemble_with(
    b: Vec<f64>,
    f: VectorField,
    opts: &AnalyzeOptions,
) -> Result<KolmogorovSystem, KolmogorovError> {
    if b.len() != f.dim() {
        return Err(FieldError::DimensionMismatch {
            expected: f.dim(),
            got: b.len(),
        }
        .into());
    }
    if let Some((index, &value)) = b.iter().enumerate().find(|(_, &x)| !(x > 0.0 && x.is_finite())) {
        return Err(KolmogorovError::NonPositiveRate { index, value });
    }
    let report = analyze(&f, opts)?;
    if !report.all_hold(HOMOGENEITY_TOL) {
        return Err(KolmogorovError::Hypothesis(report.to_string().replace('\n', "; ")));
    }

    let (b_eval, f_eval) = (b.clone(), f.clone());
    let mut assembled = VectorField::new(f.dim(), move |w, out| {
        f_eval.eval_into(w, out);
        for ((o, wi), bi) in out.iter_mut().zip(w).zip(&b_eval) {
            *o = wi * (bi + *o);
        }
    });
    if f.has_analytic_jacobian() {
        let (b_jac, f_jac) = (b.clone(), f.clone());
        assembled = assembled.with_jacobian(move |w, jac| {
            // product rule: diag(b + f) + diag(w) J_f
            let fw = f_jac.eval(w);
            let jf = f_jac.jacobian(w).unwrap_or_else(|_| DMatrix::from_element(w.len(), w.len(), f64::NAN));
            for i in 0..w.len() {
                for j in 0..w.len() {
                    jac[(i, j)] = w[i] * jf[(i, j)];
                }
                jac[(i, i)] += b_jac[i] + fw[i];
            }
        });
    }
    Ok(KolmogorovSystem {
        b,
        interaction: f,
        assembled,
        report,
    })
}

/// Positive zero of `b + f`.
#[derive(Debug, Clone, PartialEq)]
pub struct Equilibrium {
    pub point: Vec<f64>,
    /// `‖b + f(point)‖∞`.
    pub residual: f64,
    pub iterations: usize,
}

impl fmt::Display for Equilibrium {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "EQUILIBRIUM point={} residual={:e} iterations={}",
            fmt_vec(&self.point),
            self.residual,
            self.iterations
        )
    }
}

fn sup_norm(x: &[f64]) -> f64 {
    x.iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// Damped Newton iteration on `b + f(w) = 0` from a positive guess.
///
/// Steps are halved until the iterate stays in `{w ⪰ ORTHANT_FLOOR·1}` and
/// the residual does not grow.
pub fn find_equilibrium(
    sys: &KolmogorovSystem,
    guess: &[f64],
) -> Result<Equilibrium, KolmogorovError> {
    let d = sys.dim();
    if guess.len() != d {
        return Err(FieldError::DimensionMismatch {
            expected: d,
            got: guess.len(),
        }
        .into());
    }
    if guess.iter().any(|&x| !(x > 0.0 && x.is_finite())) {
        return Err(KolmogorovError::InvalidArgument(format!(
            "initial guess {guess:?} must be strictly positive"
        )));
    }
    let mut w = guess.to_vec();
    let mut r = sys.per_capita(&w);
    let mut res = sup_norm(&r);
    for it in 0..MAX_NEWTON {
        if res <= EQUILIBRIUM_TOL {
            return finish(w, res, it);
        }
        let jac = sys.interaction.jacobian(&w)?;
        let rhs = -DVector::from_column_slice(&r);
        let delta = jac.lu().solve(&rhs).ok_or_else(|| KolmogorovError::SingularJacobian {
            point: w.clone(),
        })?;
        let mut lambda = 1.0;
        let mut accepted = None;
        let mut fallback = None;
        for _ in 0..60 {
            let trial: Vec<f64> = w.iter().zip(delta.iter()).map(|(x, dx)| x + lambda * dx).collect();
            if trial.iter().all(|&x| x >= ORTHANT_FLOOR) {
                let tr = sys.per_capita(&trial);
                let tres = sup_norm(&tr);
                if tres.is_finite() {
                    if tres < res {
                        accepted = Some((trial, tr, tres));
                        break;
                    }
                    fallback.get_or_insert((trial, tr, tres));
                }
            }
            lambda *= 0.5;
        }
        match accepted.or(fallback) {
            Some((nw, nr, nres)) => {
                w = nw;
                r = nr;
                res = nres;
            }
            None => {
                return Err(KolmogorovError::NoConvergence {
                    iterations: it,
                    residual: res,
                })
            }
        }
    }
    if res <= EQUILIBRIUM_TOL {
        return finish(w, res, MAX_NEWTON);
    }
    Err(KolmogorovError::NoConvergence {
        iterations: MAX_NEWTON,
        residual: res,
    })
}

fn finish(point: Vec<f64>, residual: f64, iterations: usize) -> Result<Equilibrium, KolmogorovError> {
    if point.iter().any(|&x| x <= ORTHANT_FLOOR) {
        return Err(KolmogorovError::DomainViolation { point });
    }
    Ok(Equilibrium {
        point,
        residual,
        iterations,
    })
}

/// Outcome of the rate check, with the numbers it was based on.
#[derive(Debug, Clone, PartialEq)]
pub struct RateReport {
    pub verdict: Verdict,
    /// Exponent `γ = α̲/p` in the scaled error `e(t)·t^γ`.
    pub exponent: f64,
    /// Largest scaled error over the first decade `[10, 100]`.
    pub bound: f64,
    /// Where the scaled error peaks on `[10, t_final]`.
    pub peak_time: f64,
    /// Least-squares log-log slope of `e` over `[10, t_final]`.
    pub slope: Option<f64>,
    /// Log-log slope of the scaled error over the last decade.
    pub late_scaled_slope: Option<f64>,
}

impl fmt::Display for RateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |s: Option<f64>| s.map_or("n/a".to_string(), |s| format!("{s:.4}"));
        write!(
            f,
            "{}\nINFO rate exponent={} bound={:e} peak_t={} slope={} late_scaled_slope={}",
            self.verdict,
            self.exponent,
            self.bound,
            self.peak_time,
            show(self.slope),
            show(self.late_scaled_slope)
        )
    }
}

/// Integrates from `omega` and runs [`rate_check_trajectory`].
pub fn rate_check(
    sys: &KolmogorovSystem,
    orders: &MultiOrder,
    omega: &[f64],
    eq: &Equilibrium,
    cfg: &SolveConfig,
) -> Result<RateReport, KolmogorovError> {
    let traj = integrate(sys.assembled(), orders, omega, cfg)?;
    rate_check_trajectory(&traj, eq, orders.min() / sys.degree())
}

/// Self-consistency form of the algebraic rate: with
/// `e(t) = ‖Φ(t) − w*‖∞`, the scaled error `e(t)·t^γ` on `[100, t_final]`
/// must not exceed its maximum over the first decade `[10, 100]`.
///
/// A trajectory whose error does not shrink over the last decade fails
/// outright.
pub fn rate_check_trajectory(
    traj: &Trajectory,
    eq: &Equilibrium,
    exponent: f64,
) -> Result<RateReport, KolmogorovError> {
    const NAME: &str = "rate";
    let t_end = traj.time(traj.len() - 1);
    if t_end < MIN_RATE_HORIZON * (1.0 - 1e-12) {
        return Err(KolmogorovError::InvalidArgument(format!(
            "rate check needs t_final >= {MIN_RATE_HORIZON}, got {t_end}"
        )));
    }
    if eq.point.len() != traj.dim() {
        return Err(FieldError::DimensionMismatch {
            expected: traj.dim(),
            got: eq.point.len(),
        }
        .into());
    }
    let times = traj.times();
    let err: Vec<f64> = traj
        .rows()
        .map(|row| {
            row.iter()
                .zip(&eq.point)
                .fold(0.0, |m: f64, (x, y)| m.max((x - y).abs()))
        })
        .collect();
    let scaled: Vec<f64> = times.iter().zip(&err).map(|(t, e)| e * t.powf(exponent)).collect();
    let window = |lo: f64, hi: f64| {
        times
            .iter()
            .zip(&scaled)
            .filter(move |(t, _)| **t >= lo && **t <= hi)
            .map(|(t, s)| (*t, *s))
    };
    let bound = window(10.0, 100.0).map(|p| p.1).fold(0.0, f64::max);
    let peak = window(10.0, t_end).fold((10.0, f64::NEG_INFINITY), |a, p| if p.1 > a.1 { p } else { a });
    let late = window(100.0, t_end).fold((100.0, f64::NEG_INFINITY), |a, p| if p.1 > a.1 { p } else { a });
    let slope = log_log_slope(&times, &err, 10.0, t_end);
    let late_scaled_slope = log_log_slope(&times, &scaled, t_end / 10.0, t_end);

    let n_decade = ((t_end / 10.0) / traj.step()).round() as usize;
    let shrinking = err[traj.len() - 1] < err[n_decade.min(traj.len() - 1)];
    // round-off in e(t) is amplified by t^γ as well
    let scale = eq.point.iter().fold(1.0, |m: f64, x| m.max(x.abs()));
    let tol = (RATE_REL_TOL * bound).max(1e-12 * scale * t_end.powf(exponent));
    let verdict = if !shrinking && err[traj.len() - 1] > default_tolerance(traj.step()) {
        Verdict::failed(
            NAME,
            t_end,
            format!("error to the equilibrium did not decrease over [{}, {t_end}]", t_end / 10.0),
        )
    } else {
        Verdict::from_margin(
            NAME,
            late.0,
            bound - late.1,
            tol,
            format!(
                "self-consistency: e(t)*t^{exponent} on [100, {t_end}] stays below its first-decade maximum"
            ),
        )
    };
    Ok(RateReport {
        verdict,
        exponent,
        bound,
        peak_time: peak.0,
        slope,
        late_scaled_slope,
    })
}
