//! Multi-order fractional Adams-Bashforth-Moulton integration of
//! `ᶜD^{α_i} w_i = f_i(w)`, `w(0) = ω`, and validation of the result.
//!
//! Component `i` satisfies the Volterra equation
//! `w_i(t) = ω_i + (1/Γ(α_i)) ∫_0^t (t−s)^{α_i−1} f_i(w(s)) ds`,
//! discretized with product-rectangle weights for the predictor and
//! product-trapezoid weights for the corrector.

mod csv;
mod validate;

use rayon::prelude::*;
use thiserror::Error;

use crate::field::VectorField;
use crate::special_fn::gamma;
use crate::special_fn::weights::{rectangle_weights, trapezoid_start_weight, trapezoid_weights};

pub use csv::{read_csv, write_csv, CsvError};
pub use validate::{convergence_order, residual, ConvergenceOrder, RESIDUAL_STRIDE};

/// Largest number of steps accepted by [`SolveConfig`].
pub const MAX_STEPS: f64 = 1e7;
/// Integration aborts once `‖w‖∞` exceeds this.
pub const BLOW_UP_LIMIT: f64 = 1e12;
/// States below `-FLOOR` are counted and reported as undershoot.
pub const FLOOR: f64 = 1e-6;

/// History length above which the convolution sums run in parallel.
const PARALLEL_THRESHOLD: usize = 16_384;
/// Fixed chunk length of the parallel sums; keeps the reduction order
/// independent of the thread count.
const CHUNK: usize = 4_096;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolverError {
    #[error("fractional order alpha_{index} = {value} outside (0, 1]")]
    InvalidOrder { index: usize, value: f64 },
    #[error("initial value omega_{index} = {value} is negative")]
    NegativeInitial { index: usize, value: f64 },
    #[error("dimension mismatch: {what} has {got} entries, field has {expected}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),
    #[error("solution left the finite range after step {last_valid_index} (t = {time})")]
    BlowUp { last_valid_index: usize, time: f64 },
}

/// Fractional orders `(α_1, …, α_d)`, each in `(0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiOrder(Vec<f64>);

impl MultiOrder {
    pub fn new(alphas: Vec<f64>) -> Result<Self, SolverError> {
        if alphas.is_empty() {
            return Err(SolverError::InvalidConfig("no fractional orders given".into()));
        }
        if let Some((index, &value)) = alphas
            .iter()
            .enumerate()
            .find(|(_, &a)| !(a > 0.0 && a <= 1.0))
        {
            return Err(SolverError::InvalidOrder { index, value });
        }
        Ok(Self(alphas))
    }

    /// Every component with order `alpha`.
    pub fn uniform(alpha: f64, dim: usize) -> Result<Self, SolverError> {
        Self::new(vec![alpha; dim])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Smallest order `α̲`.
    pub fn min(&self) -> f64 {
        self.0.iter().cloned().fold(f64::INFINITY, f64::min)
    }
}

/// Uniform step `h` on `[0, t_final]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveConfig {
    pub t_final: f64,
    pub step: f64,
    pub corrector_sweeps: usize,
}

impl SolveConfig {
    /// One corrector sweep.
    pub fn new(t_final: f64, step: f64) -> Result<Self, SolverError> {
        Self::with_sweeps(t_final, step, 1)
    }

    pub fn with_sweeps(t_final: f64, step: f64, corrector_sweeps: usize) -> Result<Self, SolverError> {
        let cfg = Self {
            t_final,
            step,
            corrector_sweeps,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), SolverError> {
        if !(self.t_final > 0.0 && self.t_final.is_finite()) {
            return Err(SolverError::InvalidConfig(format!(
                "t_final must be positive, got {}",
                self.t_final
            )));
        }
        if !(self.step > 0.0 && self.step <= self.t_final) {
            return Err(SolverError::InvalidConfig(format!(
                "step must lie in (0, t_final], got {}",
                self.step
            )));
        }
        if self.t_final / self.step > MAX_STEPS {
            return Err(SolverError::InvalidConfig(format!(
                "t_final/step = {:e} exceeds {MAX_STEPS:e}",
                self.t_final / self.step
            )));
        }
        if self.corrector_sweeps == 0 {
            return Err(SolverError::InvalidConfig("corrector_sweeps must be at least 1".into()));
        }
        Ok(())
    }

    /// Number of steps `N`; the grid is `t_n = n·h`, `n = 0..=N`.
    pub fn steps(&self) -> usize {
        (self.t_final / self.step).round().max(1.0) as usize
    }
}

/// States on the grid `t_n = n·h`, `n = 0..=N`, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    orders: MultiOrder,
    step: f64,
    initial: Vec<f64>,
    states: Vec<f64>,
    /// Steps at which some component fell below `-FLOOR`.
    pub floor_breaches: usize,
}

impl Trajectory {
    /// Wraps precomputed rows; `states[0]` must equal `initial`.
    pub fn from_rows(
        orders: MultiOrder,
        step: f64,
        rows: Vec<Vec<f64>>,
    ) -> Result<Self, SolverError> {
        let d = orders.dim();
        if rows.is_empty() {
            return Err(SolverError::InvalidConfig("trajectory needs at least one row".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != d) {
            return Err(SolverError::DimensionMismatch {
                what: "row",
                expected: d,
                got: bad.len(),
            });
        }
        let initial = rows[0].clone();
        let floor_breaches = rows
            .iter()
            .filter(|r| r.iter().any(|&x| x < -FLOOR))
            .count();
        Ok(Self {
            orders,
            step,
            initial,
            states: rows.into_iter().flatten().collect(),
            floor_breaches,
        })
    }

    pub fn orders(&self) -> &MultiOrder {
        &self.orders
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn initial(&self) -> &[f64] {
        &self.initial
    }

    pub fn dim(&self) -> usize {
        self.initial.len()
    }

    /// Number of grid points `N + 1`.
    pub fn len(&self) -> usize {
        self.states.len() / self.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn time(&self, n: usize) -> f64 {
        n as f64 * self.step
    }

    pub fn times(&self) -> Vec<f64> {
        (0..self.len()).map(|n| self.time(n)).collect()
    }

    pub fn state(&self, n: usize) -> &[f64] {
        let d = self.dim();
        &self.states[n * d..(n + 1) * d]
    }

    pub fn final_state(&self) -> &[f64] {
        self.state(self.len() - 1)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.states.chunks(self.dim())
    }

    /// Time series of component `i`.
    pub fn component(&self, i: usize) -> Vec<f64> {
        self.rows().map(|r| r[i]).collect()
    }

    /// Overwrites one entry. Meant for fault-injection tests of validators.
    pub fn set(&mut self, n: usize, i: usize, value: f64) {
        let d = self.dim();
        self.states[n * d + i] = value;
        if n == 0 {
            self.initial[i] = value;
        }
    }
}

/// Per-component weight tables, stored reversed so that each history sum
/// is a dot product of two contiguous slices.
struct Tables {
    /// `rect_rev[K − k] = b_k`.
    rect_rev: Vec<f64>,
    /// `trap_rev[K − k] = c_k`.
    trap_rev: Vec<f64>,
    start: Vec<f64>,
    pred_scale: f64,
    corr_scale: f64,
}

impl Tables {
    fn new(alpha: f64, h: f64, n_steps: usize) -> Self {
        let start = (0..=n_steps)
            .map(|n| if n == 0 { 0.0 } else { trapezoid_start_weight(alpha, n) })
            .collect();
        let mut rect_rev = rectangle_weights(alpha, n_steps + 1);
        rect_rev.reverse();
        let mut trap_rev = trapezoid_weights(alpha, n_steps + 1);
        trap_rev.reverse();
        Self {
            rect_rev,
            trap_rev,
            start,
            pred_scale: h.powf(alpha) / gamma(alpha + 1.0),
            corr_scale: h.powf(alpha) / gamma(alpha + 2.0),
        }
    }

    fn last(&self) -> usize {
        self.rect_rev.len() - 1
    }
}

/// `(a·x, b·x)` with four independent accumulators per sum.
fn dot2(x: &[f64], a: &[f64], b: &[f64]) -> (f64, f64) {
    debug_assert!(x.len() == a.len() && x.len() == b.len());
    let mut pa = [0.0; 4];
    let mut pb = [0.0; 4];
    let (cx, ca, cb) = (x.chunks_exact(4), a.chunks_exact(4), b.chunks_exact(4));
    let (rx, ra, rb) = (cx.remainder(), ca.remainder(), cb.remainder());
    for ((x, a), b) in cx.zip(ca).zip(cb) {
        for k in 0..4 {
            pa[k] += a[k] * x[k];
            pb[k] += b[k] * x[k];
        }
    }
    let mut sa = (pa[0] + pa[1]) + (pa[2] + pa[3]);
    let mut sb = (pb[0] + pb[1]) + (pb[2] + pb[3]);
    for ((x, a), b) in rx.iter().zip(ra).zip(rb) {
        sa += a * x;
        sb += b * x;
    }
    (sa, sb)
}

/// `(Σ_{j=0}^{n} b_{n−j} f_j, Σ_{j=1}^{n} c_{n+1−j} f_j)` over `j ∈ range`.
fn partial_sums(hist: &[f64], t: &Tables, n: usize, range: std::ops::Range<usize>) -> (f64, f64) {
    let k = t.last();
    let (lo, hi) = (range.start.max(1), range.end);
    let mut pred = if range.start == 0 { t.rect_rev[k - n] * hist[0] } else { 0.0 };
    let mut corr = 0.0;
    if lo < hi {
        let (p, c) = dot2(
            &hist[lo..hi],
            &t.rect_rev[k - n + lo..k - n + hi],
            &t.trap_rev[k - n - 1 + lo..k - n - 1 + hi],
        );
        pred += p;
        corr += c;
    }
    (pred, corr)
}

fn history_sums(hist: &[f64], t: &Tables, n: usize) -> (f64, f64) {
    let len = n + 1;
    if len < PARALLEL_THRESHOLD {
        return partial_sums(hist, t, n, 0..len);
    }
    let chunks: Vec<(f64, f64)> = (0..len.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| partial_sums(hist, t, n, c * CHUNK..((c + 1) * CHUNK).min(len)))
        .collect();
    chunks
        .into_iter()
        .fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y))
}

/// Integrates the system with the fractional Adams predictor-corrector.
///
/// States are never clamped; steps with a component below `-FLOOR` are
/// counted in [`Trajectory::floor_breaches`] and logged once.
pub fn integrate(
    f: &VectorField,
    orders: &MultiOrder,
    omega: &[f64],
    cfg: &SolveConfig,
) -> Result<Trajectory, SolverError> {
    cfg.validate()?;
    let d = f.dim();
    if orders.dim() != d {
        return Err(SolverError::DimensionMismatch {
            what: "orders",
            expected: d,
            got: orders.dim(),
        });
    }
    if omega.len() != d {
        return Err(SolverError::DimensionMismatch {
            what: "omega",
            expected: d,
            got: omega.len(),
        });
    }
    if let Some((index, &value)) = omega.iter().enumerate().find(|(_, &x)| !(x >= 0.0)) {
        return Err(SolverError::NegativeInitial { index, value });
    }
    let n_steps = cfg.steps();
    let h = cfg.step;
    let tables: Vec<Tables> = orders
        .as_slice()
        .iter()
        .map(|&a| Tables::new(a, h, n_steps))
        .collect();

    let mut states = Vec::with_capacity((n_steps + 1) * d);
    states.extend_from_slice(omega);
    // f_i(w(t_j)) per component
    let mut hist: Vec<Vec<f64>> = (0..d).map(|_| Vec::with_capacity(n_steps + 1)).collect();
    let mut fw = f.eval(omega);
    for (hi, &v) in hist.iter_mut().zip(&fw) {
        hi.push(v);
    }
    let mut w = vec![0.0; d];
    let mut base = vec![0.0; d];
    let mut floor_breaches = 0;
    let mut warned = false;

    for n in 0..n_steps {
        for i in 0..d {
            let t = &tables[i];
            let (pred, corr) = history_sums(&hist[i], t, n);
            w[i] = omega[i] + t.pred_scale * pred;
            base[i] = omega[i] + t.corr_scale * (t.start[n + 1] * hist[i][0] + corr);
        }
        for _ in 0..cfg.corrector_sweeps {
            f.eval_into(&w, &mut fw);
            for i in 0..d {
                w[i] = base[i] + tables[i].corr_scale * fw[i];
            }
        }
        let sup = w.iter().fold(0.0, |m: f64, x| m.max(x.abs()));
        if !(sup <= BLOW_UP_LIMIT) {
            return Err(SolverError::BlowUp {
                last_valid_index: n,
                time: n as f64 * h,
            });
        }
        if w.iter().any(|&x| x < -FLOOR) {
            floor_breaches += 1;
            if !warned {
                log::warn!(
                    "state fell below -{FLOOR:e} at t = {} (min {:e}); not clamped",
                    (n + 1) as f64 * h,
                    w.iter().cloned().fold(f64::INFINITY, f64::min)
                );
                warned = true;
            }
        }
        states.extend_from_slice(&w);
        f.eval_into(&w, &mut fw);
        if fw.iter().any(|x| !x.is_finite()) {
            return Err(SolverError::BlowUp {
                last_valid_index: n + 1,
                time: (n + 1) as f64 * h,
            });
        }
        for (hi, &v) in hist.iter_mut().zip(&fw) {
            hi.push(v);
        }
    }
    if floor_breaches > 0 {
        log::warn!("{floor_breaches} steps with undershoot below -{FLOOR:e}");
    }
    Ok(Trajectory {
        orders: orders.clone(),
        step: h,
        initial: omega.to_vec(),
        states,
        floor_breaches,
    })
}
