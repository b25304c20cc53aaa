//! Volterra-residual check and empirical convergence order.

use rayon::prelude::*;

use super::{integrate, MultiOrder, SolveConfig, SolverError, Trajectory};
use crate::field::VectorField;
use crate::special_fn::{rl_integral_at, SampledFunction};

/// The residual is evaluated at every `RESIDUAL_STRIDE`-th grid point.
pub const RESIDUAL_STRIDE: usize = 10;

/// Largest deviation `|ω_i + I^{α_i}[f_i(Φ)](t_n) − Φ_i(t_n)|` over every
/// tenth grid point (and the last one), with the fractional integral computed
/// by product-trapezoid quadrature of the sampled right-hand side.
pub fn residual(f: &VectorField, traj: &Trajectory) -> f64 {
    let d = traj.dim();
    let n_points = traj.len();
    if n_points < 3 {
        return 0.0;
    }
    let mut indices: Vec<usize> = (0..n_points).step_by(RESIDUAL_STRIDE).collect();
    if *indices.last().unwrap() != n_points - 1 {
        indices.push(n_points - 1);
    }
    let rhs: Vec<Vec<f64>> = traj.rows().map(|r| f.eval(r)).collect();
    (0..d)
        .into_par_iter()
        .map(|i| {
            let alpha = traj.orders().as_slice()[i];
            let g = SampledFunction::uniform(traj.step(), rhs.iter().map(|r| r[i]).collect())
                .expect("trajectory step is positive");
            let integral = rl_integral_at(&g, alpha, &indices).expect("validated trajectory grid");
            indices
                .iter()
                .zip(integral)
                .map(|(&n, v)| (traj.initial()[i] + v - traj.state(n)[i]).abs())
                .fold(0.0, f64::max)
        })
        .collect::<Vec<f64>>()
        .into_iter()
        .fold(0.0, f64::max)
}

/// Outcome of [`convergence_order`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConvergenceOrder {
    /// Every resolution reproduced the reference to rounding level.
    Exact,
    Order(f64),
}

fn sup_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

/// Empirical order from runs at `h0`, `h0/2` and `h0/4`, measured at `t_final`.
///
/// With `exact` the order is `log2(e(h0/2)/e(h0/4))` against the closed form
/// (the two finest runs, least polluted by pre-asymptotic error). Without it
/// the successive differences give
/// `log2(‖w_{h0} − w_{h0/2}‖ / ‖w_{h0/2} − w_{h0/4}‖)`.
pub fn convergence_order(
    f: &VectorField,
    orders: &MultiOrder,
    omega: &[f64],
    t_final: f64,
    h0: f64,
    exact: Option<&[f64]>,
) -> Result<ConvergenceOrder, SolverError> {
    let finals: Vec<Vec<f64>> = [1.0, 0.5, 0.25]
        .iter()
        .map(|s| {
            let cfg = SolveConfig::new(t_final, h0 * s)?;
            Ok(integrate(f, orders, omega, &cfg)?.final_state().to_vec())
        })
        .collect::<Result<_, SolverError>>()?;
    let scale = finals[2].iter().fold(1.0, |m: f64, x| m.max(x.abs()));
    let negligible = 1e-13 * scale;
    let (coarse, fine) = match exact {
        Some(reference) => (sup_diff(&finals[1], reference), sup_diff(&finals[2], reference)),
        None => (sup_diff(&finals[0], &finals[1]), sup_diff(&finals[1], &finals[2])),
    };
    if coarse <= negligible && fine <= negligible {
        return Ok(ConvergenceOrder::Exact);
    }
    Ok(ConvergenceOrder::Order((coarse / fine).log2()))
}
