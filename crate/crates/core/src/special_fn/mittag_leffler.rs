//! Two-parameter Mittag-Leffler function on the real line.
//!
//! `E_{α,β}(z) = Σ_{k≥0} z^k / Γ(αk + β)`
//!
//! Three evaluation routes are used on the negative axis:
//!
//! - the Taylor series with compensated summation, while its largest term
//!   stays small enough that cancellation cannot eat the absolute accuracy;
//! - the algebraic asymptotic expansion `−Σ_{k≥1} z^{-k}/Γ(β−αk)`, truncated
//!   before its smallest term, once that term is negligible;
//! - otherwise the Hankel-contour integral
//!   `(1/2πiα) ∫_γ exp(ζ^{1/α}) ζ^{(1−β)/α} / (ζ − z) dζ`
//!   over two rays at angle ±δ joined by an arc of radius ε, integrated with
//!   adaptive Gauss-Kronrod quadrature.
//!
//! For `z > 0` every Taylor term is positive and the series is used directly.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::{ln_gamma, rgamma};
use super::quadrature::integrate_pieces;
use super::SpecialFnError;

/// Largest |z| accepted by the evaluator.
pub const MAX_ABS_ARGUMENT: f64 = 1e8;

/// Series is trusted while its largest term is below this magnitude.
const SERIES_PEAK_LIMIT: f64 = 1e3;
/// Asymptotic expansion is trusted once its truncation bound is below this.
const ASYMPTOTIC_TOL: f64 = 1e-15;
const MAX_SERIES_TERMS: usize = 10_000;
const MAX_ASYMPTOTIC_TERMS: usize = 400;
const CONTOUR_TOL: f64 = 1e-13;

/// Arguments of `E_{α,β}(z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlQuery {
    pub alpha: f64,
    pub beta: f64,
    pub z: f64,
}

impl MlQuery {
    pub fn new(alpha: f64, beta: f64, z: f64) -> Result<Self, SpecialFnError> {
        let q = Self { alpha, beta, z };
        q.validate()?;
        Ok(q)
    }

    fn validate(&self) -> Result<(), SpecialFnError> {
        if !(self.alpha > 0.0 && self.alpha < 2.0) {
            return Err(SpecialFnError::InvalidParameter {
                name: "alpha",
                value: self.alpha,
                expected: "0 < alpha < 2",
            });
        }
        if !(self.beta > 0.0 && self.beta.is_finite()) {
            return Err(SpecialFnError::InvalidParameter {
                name: "beta",
                value: self.beta,
                expected: "beta > 0",
            });
        }
        if !self.z.is_finite() {
            return Err(SpecialFnError::NonFiniteArgument(self.z));
        }
        if self.z.abs() > MAX_ABS_ARGUMENT {
            return Err(SpecialFnError::ArgumentOutOfRange {
                z: self.z,
                limit: MAX_ABS_ARGUMENT,
            });
        }
        Ok(())
    }
}

/// Evaluates `E_{α,β}(z)`.
pub fn ml(q: MlQuery) -> Result<f64, SpecialFnError> {
    q.validate()?;
    let MlQuery { alpha, beta, z } = q;
    if z == 0.0 {
        return Ok(rgamma(beta));
    }
    if alpha == 1.0 && beta == 1.0 {
        return Ok(z.exp());
    }
    let value = if z > 0.0 {
        series(alpha, beta, z).or_else(|| positive_asymptotic(alpha, beta, z))
    } else {
        Some(match pick_branch(alpha, beta, z) {
            Branch::Series => series(alpha, beta, z).expect("series selected inside its range"),
            Branch::Asymptotic => {
                negative_asymptotic(alpha, beta, z).expect("asymptotic selected inside its range")
            }
            Branch::Contour => contour(alpha, beta, z),
        })
    };
    match value {
        Some(v) if v.is_finite() => Ok(v),
        _ => Err(SpecialFnError::Overflow(q)),
    }
}

/// `E_{α,β}(z)` from loose arguments.
pub fn mittag_leffler(alpha: f64, beta: f64, z: f64) -> Result<f64, SpecialFnError> {
    ml(MlQuery { alpha, beta, z })
}

/// One-parameter function `E_α(z) = E_{α,1}(z)`.
pub fn ml_one(alpha: f64, z: f64) -> Result<f64, SpecialFnError> {
    ml(MlQuery { alpha, beta: 1.0, z })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Branch {
    Series,
    Asymptotic,
    Contour,
}

pub(crate) fn pick_branch(alpha: f64, beta: f64, z: f64) -> Branch {
    debug_assert!(z < 0.0);
    let x = -z;
    if x <= 1.0 || ln_series_peak(alpha, beta, x) <= SERIES_PEAK_LIMIT.ln() {
        Branch::Series
    } else if asymptotic_error_bound(alpha, beta, x) <= ASYMPTOTIC_TOL {
        Branch::Asymptotic
    } else {
        Branch::Contour
    }
}

/// Neumaier-compensated running sum.
#[derive(Default)]
struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

/// ln of the largest Taylor term magnitude `|z|^k / Γ(αk+β)` for `|z| = x`.
fn ln_series_peak(alpha: f64, beta: f64, x: f64) -> f64 {
    let u = x.powf(1.0 / alpha);
    if !u.is_finite() || u > 1e7 {
        return f64::INFINITY;
    }
    let k_star = ((u - beta) / alpha).max(0.0);
    let ln_term = |k: f64| k * x.ln() - ln_gamma(alpha * k + beta);
    [0.0, k_star.floor(), k_star.ceil(), k_star.ceil() + 1.0]
        .into_iter()
        .map(ln_term)
        .fold(f64::NEG_INFINITY, f64::max)
}

fn series(alpha: f64, beta: f64, z: f64) -> Option<f64> {
    let x = z.abs();
    let ln_x = x.ln();
    let negative = z < 0.0;
    let mut acc = CompensatedSum::default();
    let mut past_peak = false;
    let mut previous = f64::INFINITY;
    for k in 0..MAX_SERIES_TERMS {
        let arg = alpha * k as f64 + beta;
        let magnitude = if k == 0 {
            rgamma(beta).abs()
        } else if arg > 170.0 {
            (k as f64 * ln_x - ln_gamma(arg)).exp()
        } else {
            x.powf(k as f64) * rgamma(arg).abs()
        };
        let sign = if negative && k % 2 == 1 { -1.0 } else { 1.0 } * rgamma(arg).signum();
        let term = sign * magnitude;
        if !term.is_finite() {
            return None;
        }
        acc.add(term);
        if magnitude < previous {
            past_peak = true;
        }
        previous = magnitude;
        if past_peak && k > 2 && magnitude <= 1e-17 * acc.value().abs().max(1e-300) {
            return Some(acc.value());
        }
    }
    None
}

/// Upper bound of `|1/Γ(y)|` used as a term envelope in the asymptotic series.
fn ln_rgamma_envelope(y: f64) -> f64 {
    if y >= 1.0 {
        -ln_gamma(y)
    } else {
        // |1/Γ(y)| = |sin(πy)| Γ(1−y) / π ≤ Γ(1−y) / π
        ln_gamma(1.0 - y) - PI.ln()
    }
}

/// Index of the smallest term envelope and its magnitude.
fn asymptotic_cutoff(alpha: f64, beta: f64, x: f64) -> (usize, f64) {
    let ln_x = x.ln();
    let mut best = (1, f64::INFINITY);
    for k in 1..=MAX_ASYMPTOTIC_TERMS {
        let ln_b = -(k as f64) * ln_x + ln_rgamma_envelope(beta - alpha * k as f64);
        let b = ln_b.exp();
        if b < best.1 {
            best = (k, b);
        } else if b > 2.0 * best.1 {
            break;
        }
    }
    best
}

/// Size of the exponentially small terms `(1/α) ζ^{1−β} exp(ζ)`, `ζ = z^{1/α}`,
/// that the algebraic expansion misses on the negative axis when α ≥ 1.
fn exponential_remainder(alpha: f64, beta: f64, x: f64) -> f64 {
    if alpha < 1.0 {
        return 0.0;
    }
    let r = x.powf(1.0 / alpha);
    (r.ln() * (1.0 - beta) + r * (PI / alpha).cos()).exp() / alpha
}

fn asymptotic_error_bound(alpha: f64, beta: f64, x: f64) -> f64 {
    asymptotic_cutoff(alpha, beta, x).1 + exponential_remainder(alpha, beta, x)
}

fn negative_asymptotic(alpha: f64, beta: f64, z: f64) -> Option<f64> {
    let x = -z;
    let (cutoff, bound) = asymptotic_cutoff(alpha, beta, x);
    if bound + exponential_remainder(alpha, beta, x) > ASYMPTOTIC_TOL {
        return None;
    }
    let mut acc = CompensatedSum::default();
    for k in 1..cutoff {
        acc.add(-inverse_power_term(alpha, beta, z, k));
    }
    Some(acc.value())
}

/// `z^{-k} / Γ(β − αk)` without intermediate under- or overflow.
fn inverse_power_term(alpha: f64, beta: f64, z: f64, k: usize) -> f64 {
    let y = beta - alpha * k as f64;
    let r = rgamma(y);
    if r == 0.0 {
        return 0.0;
    }
    let sign = if z < 0.0 && k % 2 == 1 { -r.signum() } else { r.signum() };
    let direct = z.abs().powf(-(k as f64)) * r.abs();
    if direct.is_normal() && r.is_normal() {
        sign * direct
    } else {
        sign * (-(k as f64) * z.abs().ln() - ln_gamma(y)).exp()
    }
}

fn positive_asymptotic(alpha: f64, beta: f64, z: f64) -> Option<f64> {
    let r = z.powf(1.0 / alpha);
    let lead = (r + r.ln() * (1.0 - beta)).exp() / alpha;
    if !lead.is_finite() {
        return None;
    }
    let (cutoff, _) = asymptotic_cutoff(alpha, beta, z);
    let mut acc = CompensatedSum::default();
    acc.add(lead);
    for k in 1..cutoff {
        acc.add(-inverse_power_term(alpha, beta, z, k));
    }
    Some(acc.value())
}

/// Hankel-contour representation for `z < 0`.
fn contour(alpha: f64, beta: f64, z: f64) -> f64 {
    let x = -z;
    // δ ∈ (απ/2, min(π, απ)) keeps exp(ζ^{1/α}) decaying on the rays and the
    // pole ζ = z strictly outside the contour.
    let delta = 0.5 * PI * (0.5 * alpha + alpha.min(1.0));
    let eps = 0.5_f64;
    let power = (1.0 - beta) / alpha;
    let zc = Complex64::new(z, 0.0);

    let h = |zeta: Complex64| -> Complex64 {
        let (r, theta) = zeta.to_polar();
        let root = Complex64::from_polar(r.powf(1.0 / alpha), theta / alpha);
        let weight = Complex64::from_polar(r.powf(power), theta * power);
        root.exp() * weight / (zeta - zc)
    };

    let ray_dir = Complex64::from_polar(1.0, delta);
    let ray = |r: f64| (h(ray_dir * r) * ray_dir).im;
    let arc = |phi: f64| {
        let e = Complex64::from_polar(eps, phi);
        (h(e) * e).re
    };

    let decay = -(delta / alpha).cos();
    let r_max = (60.0 / decay).powf(alpha).max(2.0 * eps);
    let mut breaks = vec![eps];
    // closest approach of the ray to the pole
    let nearest = x * (PI - delta).cos();
    let mut knot = 2.0 * eps;
    while knot < r_max {
        breaks.push(knot);
        knot *= 2.0;
    }
    if nearest > eps && nearest < r_max {
        breaks.push(nearest);
    }
    breaks.push(r_max);
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();

    let ray_part = integrate_pieces(ray, &breaks, CONTOUR_TOL);
    let arc_part = integrate_pieces(arc, &[0.0, 0.5 * delta, delta], CONTOUR_TOL);
    (ray_part + arc_part) / (PI * alpha)
}

#[cfg(test)]
pub(crate) fn eval_branch(alpha: f64, beta: f64, z: f64, branch: Branch) -> Option<f64> {
    match branch {
        Branch::Series => series(alpha, beta, z),
        Branch::Asymptotic => negative_asymptotic(alpha, beta, z),
        Branch::Contour => Some(contour(alpha, beta, z)),
    }
}
