//! Sampled checks of cooperativity, homogeneity degree and decay directions.

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{FieldError, VectorField, WeightVector};

/// Off-diagonal Jacobian entries down to `-TOL_METZLER` count as nonnegative.
pub const TOL_METZLER: f64 = 1e-9;
/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_f00d;

/// Relative offset keeping cooperativity samples off the orthant boundary.
const BOUNDARY_OFFSET: f64 = 1e-4;
const HOMOGENEITY_SCALES: [f64; 2] = [2.0, 4.0];

/// Result of sampling the Jacobian sign pattern.
#[derive(Debug, Clone, PartialEq)]
pub struct CooperativityCheck {
    pub passed: bool,
    pub samples: usize,
    pub box_radius: f64,
    pub tolerance: f64,
    /// Smallest off-diagonal entry seen (`+∞` for `d = 1`).
    pub min_off_diagonal: f64,
    /// `(row, column)` of that entry, 0-based.
    pub worst_entry: Option<(usize, usize)>,
    pub worst_point: Vec<f64>,
}

impl fmt::Display for CooperativityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CHECK cooperative {} samples={} box={} min_offdiag={:e} tol={:e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.samples,
            self.box_radius,
            self.min_off_diagonal,
            self.tolerance
        )?;
        if let Some((i, j)) = self.worst_entry {
            write!(f, " entry=df{}/dw{} at={}", i + 1, j + 1, fmt_vec(&self.worst_point))?;
        }
        Ok(())
    }
}

pub(crate) fn fmt_vec(v: &[f64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
    format!("({})", parts.join(","))
}

/// `k`-th point of the Halton sequence in the first `d` prime bases.
fn halton(k: usize, d: usize) -> Vec<f64> {
    primes(d)
        .into_iter()
        .map(|base| {
            let mut f = 1.0;
            let mut r = 0.0;
            let mut i = k;
            while i > 0 {
                f /= base as f64;
                r += f * (i % base) as f64;
                i /= base;
            }
            r
        })
        .collect()
}

fn primes(n: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(n);
    let mut c = 2;
    while out.len() < n {
        if out.iter().all(|p| c % p != 0) {
            out.push(c);
        }
        c += 1;
    }
    out
}

/// Samples `Df` at `samples` Halton points of `(0, box_radius]^d` and checks
/// that every off-diagonal entry is at least `-TOL_METZLER`.
pub fn check_cooperative(
    f: &VectorField,
    samples: usize,
    box_radius: f64,
) -> Result<CooperativityCheck, FieldError> {
    check_cooperative_with(f, samples, box_radius, TOL_METZLER)
}

pub fn check_cooperative_with(
    f: &VectorField,
    samples: usize,
    box_radius: f64,
    tol_metzler: f64,
) -> Result<CooperativityCheck, FieldError> {
    if samples == 0 {
        return Err(FieldError::InvalidArgument("samples must be at least 1".into()));
    }
    if !(box_radius > 0.0 && box_radius.is_finite()) {
        return Err(FieldError::InvalidArgument(format!(
            "box radius must be positive, got {box_radius}"
        )));
    }
    let d = f.dim();
    let lo = BOUNDARY_OFFSET * box_radius;
    let points: Vec<Vec<f64>> = (1..=samples)
        .map(|k| {
            halton(k, d)
                .into_iter()
                .map(|u| lo + (box_radius - lo) * u)
                .collect()
        })
        .collect();
    // (min entry, position) per point; collected in sample order
    let per_point: Vec<Result<(f64, Option<(usize, usize)>), FieldError>> = points
        .par_iter()
        .map(|x| {
            let jac = f.jacobian(x)?;
            let mut best = (f64::INFINITY, None);
            for i in 0..d {
                for j in 0..d {
                    if i != j && jac[(i, j)] < best.0 {
                        best = (jac[(i, j)], Some((i, j)));
                    }
                }
            }
            Ok(best)
        })
        .collect();
    let mut worst = (f64::INFINITY, None, Vec::new());
    for (x, r) in points.iter().zip(per_point) {
        let (value, entry) = r?;
        if value < worst.0 {
            worst = (value, entry, x.clone());
        }
    }
    Ok(CooperativityCheck {
        passed: worst.0 >= -tol_metzler,
        samples,
        box_radius,
        tolerance: tol_metzler,
        min_off_diagonal: worst.0,
        worst_entry: worst.1,
        worst_point: worst.2,
    })
}

/// Estimated homogeneity degree.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneityEstimate {
    /// Mean of the per-probe estimates over both scales.
    pub degree: f64,
    /// `max ‖f(λx) − λ^p f(x)‖∞ / ‖f(x)‖∞` using the mean degree.
    pub residual: f64,
    /// Mean estimates for `λ = 2` and `λ = 4` separately.
    pub per_scale: [f64; 2],
    pub probes_used: usize,
}

fn sup_norm(x: &[f64]) -> f64 {
    x.iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// Estimates `p` in `f(λx) = λ^p f(x)` from random positive probes and
/// `λ ∈ {2, 4}`.
pub fn estimate_homogeneity_degree(
    f: &VectorField,
    probes: usize,
    seed: u64,
) -> Result<HomogeneityEstimate, FieldError> {
    if probes < 2 {
        return Err(FieldError::InvalidArgument("need at least 2 probes".into()));
    }
    let d = f.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for _ in 0..probes {
        let x: Vec<f64> = (0..d).map(|_| rng.random_range(0.1..=1.0)).collect();
        let fx = f.eval(&x);
        let nx = sup_norm(&fx);
        if !(nx > 0.0 && nx.is_finite()) {
            continue;
        }
        let scaled: Vec<(f64, Vec<f64>)> = HOMOGENEITY_SCALES
            .iter()
            .map(|&lambda| {
                let y: Vec<f64> = x.iter().map(|v| lambda * v).collect();
                (lambda, f.eval(&y))
            })
            .collect();
        pairs.push((fx, nx, scaled));
    }
    if pairs.is_empty() {
        return Err(FieldError::DegenerateField);
    }
    let mut per_scale = [0.0; 2];
    for (_, nx, scaled) in &pairs {
        for (slot, (lambda, fy)) in per_scale.iter_mut().zip(scaled) {
            *slot += (sup_norm(fy) / nx).ln() / lambda.ln();
        }
    }
    for s in per_scale.iter_mut() {
        *s /= pairs.len() as f64;
    }
    let degree = 0.5 * (per_scale[0] + per_scale[1]);
    let residual = pairs
        .iter()
        .flat_map(|(fx, nx, scaled)| {
            scaled.iter().map(move |(lambda, fy)| {
                let factor = lambda.powf(degree);
                let diff = fy
                    .iter()
                    .zip(fx)
                    .fold(0.0, |m: f64, (a, b)| m.max((a - factor * b).abs()));
                diff / nx
            })
        })
        .fold(0.0, f64::max);
    Ok(HomogeneityEstimate {
        degree,
        residual,
        per_scale,
        probes_used: pairs.len(),
    })
}

/// A point `v ≻ 0` with `f(v) ≺ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayDirection {
    pub v: WeightVector,
    pub f_v: Vec<f64>,
    /// `min_i −f_i(v)/v_i`, positive by construction.
    pub margin: f64,
}

fn margin(f: &VectorField, v: &[f64]) -> f64 {
    let fv = f.eval(v);
    let m = fv
        .iter()
        .zip(v)
        .map(|(fi, vi)| -fi / vi)
        .fold(f64::INFINITY, f64::min);
    if m.is_nan() {
        f64::NEG_INFINITY
    } else {
        m
    }
}

fn normalize_sup(v: &mut [f64]) {
    let top = v.iter().cloned().fold(0.0, f64::max);
    v.iter_mut().for_each(|x| *x /= top);
}

/// Searches for a decay direction on `{v ≻ 0 : ‖v‖∞ = 1}`: the all-ones
/// vector plus `budget − 1` uniform simplex samples, then multiplicative
/// coordinate ascent on the margin from the best start.
pub fn find_decay_direction(f: &VectorField, budget: usize, seed: u64) -> Option<DecayDirection> {
    let d = f.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = vec![1.0; d];
    let mut best_margin = margin(f, &best);
    for _ in 1..budget.max(1) {
        // flat Dirichlet draw, floored to stay strictly positive
        let mut v: Vec<f64> = (0..d)
            .map(|_| -(1.0 - rng.random::<f64>()).ln() + 1e-6)
            .collect();
        normalize_sup(&mut v);
        let m = margin(f, &v);
        if m > best_margin {
            best = v;
            best_margin = m;
        }
    }
    let mut step = 0.5;
    while step > 1e-6 {
        let mut improved = false;
        for j in 0..d {
            for factor in [1.0 + step, 1.0 / (1.0 + step)] {
                let mut trial = best.clone();
                trial[j] *= factor;
                normalize_sup(&mut trial);
                let m = margin(f, &trial);
                if m > best_margin {
                    best = trial;
                    best_margin = m;
                    improved = true;
                }
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    let f_v = f.eval(&best);
    if f_v.iter().all(|&x| x < 0.0) && best.iter().all(|&x| x > 0.0) {
        Some(DecayDirection {
            v: WeightVector::new(best).ok()?,
            f_v,
            margin: best_margin,
        })
    } else {
        None
    }
}

/// Settings of [`analyze`].
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyzeOptions {
    pub samples: usize,
    pub box_radius: f64,
    pub probes: usize,
    pub budget: usize,
    pub seed: u64,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            samples: 512,
            box_radius: 1.0,
            probes: 16,
            budget: 256,
            seed: DEFAULT_SEED,
        }
    }
}

/// All three hypothesis checks on one field.
#[derive(Debug, Clone, PartialEq)]
pub struct HypothesisReport {
    pub cooperative: CooperativityCheck,
    pub homogeneity: Option<HomogeneityEstimate>,
    pub decay: Option<DecayDirection>,
}

impl HypothesisReport {
    /// Cooperative, homogeneous of degree at least 1 (to `homogeneity_tol`)
    /// and with a decay direction.
    pub fn all_hold(&self, homogeneity_tol: f64) -> bool {
        self.cooperative.passed
            && self
                .homogeneity
                .as_ref()
                .is_some_and(|h| h.residual <= homogeneity_tol && h.degree >= 1.0 - homogeneity_tol)
            && self.decay.is_some()
    }
}

impl fmt::Display for HypothesisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.cooperative)?;
        match &self.homogeneity {
            Some(h) => writeln!(
                f,
                "DEGREE p={} residual={:e} p2={} p4={} probes={}",
                h.degree, h.residual, h.per_scale[0], h.per_scale[1], h.probes_used
            )?,
            None => writeln!(f, "DEGREE undefined (field vanishes at every probe)")?,
        }
        match &self.decay {
            Some(dd) => write!(
                f,
                "DECAY v={} f(v)={} margin={:e}",
                fmt_vec(dd.v.as_slice()),
                fmt_vec(&dd.f_v),
                dd.margin
            ),
            None => write!(f, "DECAY none found"),
        }
    }
}

/// Runs every hypothesis check with the given options.
pub fn analyze(f: &VectorField, opts: &AnalyzeOptions) -> Result<HypothesisReport, FieldError> {
    let cooperative = check_cooperative(f, opts.samples, opts.box_radius)?;
    let homogeneity = match estimate_homogeneity_degree(f, opts.probes, opts.seed) {
        Ok(h) => Some(h),
        Err(FieldError::DegenerateField) => None,
        Err(e) => return Err(e),
    };
    let decay = find_decay_direction(f, opts.budget, opts.seed);
    Ok(HypothesisReport {
        cooperative,
        homogeneity,
        decay,
    })
}
