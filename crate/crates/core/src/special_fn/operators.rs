//! Caputo derivative (L1 scheme) and Riemann-Liouville integral
//! (product trapezoid) on uniform grids.

use rayon::prelude::*;
use super::gamma::gamma;
use super::weights::{forward_power_difference, trapezoid_start_weight, trapezoid_weights};
use super::{SampledFunction, SpecialFnError};

fn check_input(f: &SampledFunction, alpha: f64) -> Result<(), SpecialFnError> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(SpecialFnError::InvalidOrder(alpha));
    }
    if f.start() != 0.0 {
        return Err(SpecialFnError::GridNotAtOrigin(f.start()));
    }
    if f.len() < 3 {
        return Err(SpecialFnError::TooFewPoints {
            needed: 3,
            got: f.len(),
        });
    }
    Ok(())
}

/// Caputo derivative of order `alpha` at the interior grid points
/// `t_1, …, t_{N-1}`.
///
/// For `alpha < 1` this is the L1 scheme
/// `h^{-α}/Γ(2−α) Σ_{j<n} b_j (f_{n−j} − f_{n−j−1})`, `b_j = (j+1)^{1−α} − j^{1−α}`;
/// for `alpha = 1` it is the central difference.
pub fn caputo_numeric(f: &SampledFunction, alpha: f64) -> Result<SampledFunction, SpecialFnError> {
    check_input(f, alpha)?;
    let h = f.step();
    let v = f.values();
    let n_points = v.len();
    let values: Vec<f64> = if alpha == 1.0 {
        (1..n_points - 1)
            .map(|n| (v[n + 1] - v[n - 1]) / (2.0 * h))
            .collect()
    } else {
        let one_minus = 1.0 - alpha;
        let b: Vec<f64> = (0..n_points)
            .map(|j| forward_power_difference(one_minus, j))
            .collect();
        let scale = h.powf(-alpha) / gamma(2.0 - alpha);
        let diffs: Vec<f64> = v.windows(2).map(|w| w[1] - w[0]).collect();
        (1..n_points - 1)
            .into_par_iter()
            .map(|n| {
                // diffs[m] = f_{m+1} − f_m; the j-th weight pairs with diffs[n−1−j]
                let s: f64 = (0..n).map(|j| b[j] * diffs[n - 1 - j]).sum();
                scale * s
            })
            .collect()
    };
    Ok(SampledFunction {
        start: h,
        step: h,
        values,
    })
}

fn rl_at(v: &[f64], alpha: f64, scale: f64, c: &[f64], n: usize) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let mut s = trapezoid_start_weight(alpha, n) * v[0] + v[n];
    for j in 1..n {
        s += c[n - j] * v[j];
    }
    scale * s
}

/// Riemann-Liouville integral `I^α f` on the full input grid (value 0 at `t = 0`).
///
/// Product-trapezoid quadrature; for `alpha = 1` the cumulative trapezoid rule.
pub fn rl_integral(f: &SampledFunction, alpha: f64) -> Result<SampledFunction, SpecialFnError> {
    let all: Vec<usize> = (0..f.len()).collect();
    let values = rl_integral_at(f, alpha, &all)?;
    Ok(SampledFunction {
        start: 0.0,
        step: f.step(),
        values,
    })
}

/// `I^α f` evaluated only at the requested grid indices.
pub fn rl_integral_at(
    f: &SampledFunction,
    alpha: f64,
    indices: &[usize],
) -> Result<Vec<f64>, SpecialFnError> {
    check_input(f, alpha)?;
    let v = f.values();
    let h = f.step();
    if let Some(&bad) = indices.iter().find(|&&n| n >= v.len()) {
        return Err(SpecialFnError::TooFewPoints {
            needed: bad + 1,
            got: v.len(),
        });
    }
    if alpha == 1.0 {
        let mut cumulative = Vec::with_capacity(v.len());
        let mut acc = 0.0;
        cumulative.push(0.0);
        for w in v.windows(2) {
            acc += 0.5 * h * (w[0] + w[1]);
            cumulative.push(acc);
        }
        return Ok(indices.iter().map(|&n| cumulative[n]).collect());
    }
    let scale = h.powf(alpha) / gamma(alpha + 2.0);
    let c = trapezoid_weights(alpha, v.len());
    Ok(indices
        .par_iter()
        .map(|&n| rl_at(v, alpha, scale, &c, n))
        .collect())
}
