use std::fmt;

use rayon::prelude::*;

use super::AttractivityError;
use crate::field::{fmt_vec, weighted_norm, VectorField, WeightVector};
use crate::solver::MultiOrder;
use crate::special_fn::{gamma, mittag_leffler, ml_one};

/// Right end of the scan for the supremum over `t ≥ 1`.
pub const T_CAP: f64 = 1e6;
/// Log-spaced scan points on `[1, T_CAP]`.
pub const GRID_POINTS: usize = 2000;
/// Inflation applied to the part of the scanned maximum above the endpoint values.
pub const SAFETY_FACTOR: f64 = 1.05;
/// Required slack in the strict inequality of the rate condition.
pub const MARGIN_EPS: f64 = 1e-6;
/// Upper end of the decay-rate search.
pub const ETA_HI: f64 = 10.0;
/// Smallest rate tried before declaring the condition infeasible.
pub const ETA_FLOOR: f64 = 1e-12;

const MAX_REFINE: usize = 60;

/// The ratio is identically 1 when the orders agree and `p = 1`.
fn is_identity(beta: f64, alpha_i: f64, p: f64) -> bool {
    p == 1.0 && beta == alpha_i
}

/// `lim_{t→∞}` of the ratio, from the leading algebraic terms of both
/// Mittag-Leffler functions.
fn tail_limit(eta: f64, beta: f64, alpha_i: f64, p: f64) -> f64 {
    if beta == 1.0 {
        return if alpha_i == 1.0 { 1.0 } else { 0.0 };
    }
    // only the smallest order α̲ = βp keeps a nonzero limit
    if alpha_i > beta * p * (1.0 + 1e-12) || alpha_i == 1.0 {
        return 0.0;
    }
    eta.powf(p - 1.0) * gamma(1.0 - beta).powf(p) / gamma(1.0 - alpha_i)
}

/// `t^{β−α_i} E_{β,1+β−α_i}(−η t^β) / E_β(−η t^β)^p` given the denominator.
fn ratio(
    eta: f64,
    beta: f64,
    alpha_i: f64,
    t: f64,
    denominator: f64,
) -> Result<f64, AttractivityError> {
    let num = t.powf(beta - alpha_i) * mittag_leffler(beta, 1.0 + beta - alpha_i, -eta * t.powf(beta))?;
    let r = num / denominator;
    if r.is_finite() {
        Ok(r)
    } else {
        Err(AttractivityError::Premise(format!(
            "envelope ratio not finite at t = {t} (eta = {eta})"
        )))
    }
}

/// Supremum estimates for several `α_i` sharing one scan of the denominator.
fn sup_ratios(
    eta: f64,
    beta: f64,
    alphas: &[f64],
    p: f64,
    t_cap: f64,
    points: usize,
) -> Result<Vec<f64>, AttractivityError> {
    if !(eta > 0.0 && eta.is_finite()) {
        return Err(AttractivityError::Premise(format!("eta = {eta} must be positive")));
    }
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(AttractivityError::Premise(format!("beta = {beta} outside (0, 1]")));
    }
    if !(t_cap >= 1e3) || points < 2 {
        return Err(AttractivityError::Premise(format!(
            "scan needs t_cap >= 1e3 and two points (got {t_cap}, {points})"
        )));
    }
    let mut distinct: Vec<f64> = Vec::new();
    for &a in alphas {
        if !is_identity(beta, a, p) && !distinct.contains(&a) {
            distinct.push(a);
        }
    }
    let mut sups = vec![0.0; distinct.len()];
    if !distinct.is_empty() {
        let log_cap = t_cap.ln();
        let scanned: Vec<Vec<f64>> = (0..points)
            .into_par_iter()
            .map(|k| {
                let t = (log_cap * k as f64 / (points - 1) as f64).exp();
                let den = ml_one(beta, -eta * t.powf(beta))?.powf(p);
                distinct
                    .iter()
                    .map(|&a| ratio(eta, beta, a, t, den))
                    .collect::<Result<Vec<f64>, _>>()
            })
            .collect::<Result<_, _>>()?;
        for (j, &a) in distinct.iter().enumerate() {
            let at_one = scanned[0][j];
            let scan_max = scanned.iter().map(|r| r[j]).fold(f64::NEG_INFINITY, f64::max);
            let base = at_one.max(tail_limit(eta, beta, a, p));
            sups[j] = base + SAFETY_FACTOR * (scan_max - base).max(0.0);
        }
    }
    Ok(alphas
        .iter()
        .map(|&a| match distinct.iter().position(|&x| x == a) {
            Some(j) => sups[j],
            None => 1.0,
        })
        .collect())
}

/// Numerical `sup_{t ≥ 1}` of
/// `t^{β−α_i} E_{β,1+β−α_i}(−η t^β) / E_β(−η t^β)^p` with `β = α̲/p`.
///
/// Scans [`GRID_POINTS`] log-spaced points on `[1, t_cap]` and takes the
/// analytic limit `t → ∞` into account.
pub fn capital_i(
    eta: f64,
    beta: f64,
    alpha_i: f64,
    p: f64,
    t_cap: f64,
) -> Result<f64, AttractivityError> {
    capital_i_with(eta, beta, alpha_i, p, t_cap, GRID_POINTS)
}

/// [`capital_i`] with an explicit number of scan points.
pub fn capital_i_with(
    eta: f64,
    beta: f64,
    alpha_i: f64,
    p: f64,
    t_cap: f64,
    points: usize,
) -> Result<f64, AttractivityError> {
    Ok(sup_ratios(eta, beta, &[alpha_i], p, t_cap, points)?[0])
}

/// `f_i(v)/v_i + (η / m^{p−1})·I_i(η)` for every component.
pub fn condition_margins(
    f_over_v: &[f64],
    eta: f64,
    orders: &MultiOrder,
    p: f64,
    m: f64,
) -> Result<Vec<f64>, AttractivityError> {
    let beta = orders.min() / p;
    let sups = sup_ratios(eta, beta, orders.as_slice(), p, T_CAP, GRID_POINTS)?;
    let scale = eta / m.powf(p - 1.0);
    Ok(f_over_v.iter().zip(&sups).map(|(r, i)| r + scale * i).collect())
}

fn f_over_v(f: &VectorField, v: &WeightVector) -> Vec<f64> {
    f.eval(v.as_slice())
        .iter()
        .zip(v.as_slice())
        .map(|(fi, vi)| fi / vi)
        .collect()
}

/// Largest `η ∈ (0, ETA_HI]` with
/// `f_i(v)/v_i + (η/m^{p−1})·I_i(η) < −MARGIN_EPS` for every `i`.
///
/// Steps down by decades from [`ETA_HI`] until the condition holds, then
/// refines the bracket with the Illinois variant of regula falsi.
pub fn search_eta(
    f: &VectorField,
    v: &WeightVector,
    orders: &MultiOrder,
    p: f64,
    m: f64,
) -> Result<f64, AttractivityError> {
    let d = f.dim();
    if v.dim() != d || orders.dim() != d {
        return Err(AttractivityError::Premise(format!(
            "dimensions differ: field {d}, v {}, orders {}",
            v.dim(),
            orders.dim()
        )));
    }
    if !(m > 0.0 && m.is_finite()) {
        return Err(AttractivityError::Premise(format!("m = {m} must be positive")));
    }
    if !(p >= orders.min() && p.is_finite()) {
        return Err(AttractivityError::Premise(format!(
            "degree p = {p} must be at least the smallest order"
        )));
    }
    let ratios = f_over_v(f, v);
    if let Some((i, r)) = ratios.iter().enumerate().find(|(_, r)| !(**r < 0.0)) {
        return Err(AttractivityError::Premise(format!(
            "f(v) is not strictly negative: f_{}(v)/v_{} = {r}",
            i + 1,
            i + 1
        )));
    }
    // phi < 0 exactly where the condition holds with the required slack
    let phi = |eta: f64| -> Result<f64, AttractivityError> {
        let g = condition_margins(&ratios, eta, orders, p, m)?;
        Ok(g.into_iter().fold(f64::NEG_INFINITY, f64::max) + MARGIN_EPS)
    };

    let mut hi = ETA_HI;
    let mut f_hi = phi(hi)?;
    if f_hi < 0.0 {
        return Ok(hi);
    }
    let (mut lo, mut f_lo) = loop {
        let lo = hi / 10.0;
        let f_lo = phi(lo)?;
        if f_lo > f_hi {
            log::warn!("rate condition is not monotone in eta between {lo:e} and {hi:e}");
        }
        if f_lo < 0.0 {
            break (lo, f_lo);
        }
        if lo < ETA_FLOOR {
            return Err(AttractivityError::Infeasible {
                eta_floor: ETA_FLOOR,
                best_margin: -f_lo,
            });
        }
        hi = lo;
        f_hi = f_lo;
    };

    let mut last_side = 0i8;
    for _ in 0..MAX_REFINE {
        if hi - lo <= 1e-12 * hi || f_lo > -1e-14 {
            break;
        }
        let mut x = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
        if !(x > lo && x < hi) {
            x = 0.5 * (lo + hi);
        }
        let fx = phi(x)?;
        if fx < 0.0 {
            lo = x;
            f_lo = fx;
            if last_side == -1 {
                f_hi *= 0.5;
            }
            last_side = -1;
        } else {
            hi = x;
            f_hi = fx;
            if last_side == 1 {
                f_lo *= 0.5;
            }
            last_side = 1;
        }
    }
    Ok(lo)
}

/// Decay envelope `C_i E_β(−η t^β)` with `C_i = m v_i / E_β(−η)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EnvelopeParams {
    pub beta: f64,
    pub eta: f64,
    pub amplitudes: Vec<f64>,
    pub v: WeightVector,
    pub p: f64,
    pub m: f64,
}

impl EnvelopeParams {
    pub fn new(
        beta: f64,
        eta: f64,
        v: WeightVector,
        p: f64,
        m: f64,
    ) -> Result<Self, AttractivityError> {
        if !(beta > 0.0 && beta <= 1.0) {
            return Err(AttractivityError::Premise(format!("beta = {beta} outside (0, 1]")));
        }
        if !(m >= 0.0 && m.is_finite()) {
            return Err(AttractivityError::Premise(format!("m = {m} must be nonnegative")));
        }
        if m == 0.0 {
            return Ok(Self::zero(beta, v, p));
        }
        if !(eta > 0.0 && eta.is_finite()) {
            return Err(AttractivityError::Premise(format!("eta = {eta} must be positive")));
        }
        let at_one = ml_one(beta, -eta)?;
        if !(at_one > 0.0 && at_one < 1.0) {
            return Err(AttractivityError::Premise(format!(
                "E_beta(-eta) = {at_one} outside (0, 1)"
            )));
        }
        let amplitudes = v.as_slice().iter().map(|vi| m * vi / at_one).collect();
        Ok(Self {
            beta,
            eta,
            amplitudes,
            v,
            p,
            m,
        })
    }

    /// Identically zero envelope for `ω = 0`.
    pub fn zero(beta: f64, v: WeightVector, p: f64) -> Self {
        Self {
            beta,
            eta: 0.0,
            amplitudes: vec![0.0; v.dim()],
            v,
            p,
            m: 0.0,
        }
    }

    /// Searches `η` for the initial value `omega` and builds the envelope.
    pub fn for_initial(
        f: &VectorField,
        v: &WeightVector,
        orders: &MultiOrder,
        p: f64,
        omega: &[f64],
    ) -> Result<Self, AttractivityError> {
        let m = weighted_norm(omega, v)?;
        let beta = orders.min() / p;
        if m == 0.0 {
            return Ok(Self::zero(beta, v.clone(), p));
        }
        let eta = search_eta(f, v, orders, p, m)?;
        Self::new(beta, eta, v.clone(), p, m)
    }

    pub fn is_zero(&self) -> bool {
        self.m == 0.0
    }

    /// `E_β(−η t^β)`.
    pub fn profile(&self, t: f64) -> Result<f64, AttractivityError> {
        if self.is_zero() {
            return Ok(0.0);
        }
        Ok(ml_one(self.beta, -self.eta * t.powf(self.beta))?)
    }

    /// `C_i E_β(−η t^β)`.
    pub fn bound(&self, i: usize, t: f64) -> Result<f64, AttractivityError> {
        Ok(self.amplitudes[i] * self.profile(t)?)
    }

    pub fn max_amplitude(&self) -> f64 {
        self.amplitudes.iter().cloned().fold(0.0, f64::max)
    }
}

impl fmt::Display for EnvelopeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ENVELOPE beta={} eta={:.12e} m={} p={} C={}",
            self.beta,
            self.eta,
            self.m,
            self.p,
            fmt_vec(&self.amplitudes)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special_fn::rgamma;

    fn diagonal(rates: Vec<f64>) -> VectorField {
        VectorField::new(rates.len(), move |w, out| {
            for i in 0..out.len() {
                out[i] = -rates[i] * w[i];
            }
        })
    }

    #[test]
    fn identity_case_is_one() {
        for &eta in &[0.01, 0.1, 1.0] {
            assert_eq!(capital_i(eta, 0.45, 0.45, 1.0, T_CAP).unwrap(), 1.0);
        }
    }

    #[test]
    fn small_eta_limit() {
        // ratio → t^{β−α_i}/Γ(1+β−α_i), largest at t = 1
        let (beta, alpha) = (0.3, 0.7);
        let got = capital_i(1e-8, beta, alpha, 1.0, T_CAP).unwrap();
        let expected = rgamma(1.0 + beta - alpha);
        assert!((got - expected).abs() < 1e-6, "{got} vs {expected}");
    }

    #[test]
    fn denser_scan_does_not_exceed_safety_margin() {
        // Example 1 orders: β = 0.24/1.5
        let beta = 0.16;
        for &alpha in &[0.24, 0.55] {
            for &eta in &[0.05, 0.5, 2.0] {
                let coarse = capital_i(eta, beta, alpha, 1.5, T_CAP).unwrap();
                let dense = capital_i_with(eta, beta, alpha, 1.5, T_CAP, 4 * GRID_POINTS).unwrap();
                assert!(coarse >= dense * (1.0 - 1e-9), "{alpha} {eta}: {coarse} < {dense}");
            }
        }
    }

    #[test]
    fn tail_limit_matches_late_ratio() {
        let (eta, beta, alpha, p) = (0.5, 0.16, 0.24, 1.5);
        let t: f64 = 1e12;
        let den = ml_one(beta, -eta * t.powf(beta)).unwrap().powf(p);
        let r = ratio(eta, beta, alpha, t, den).unwrap();
        let lim = tail_limit(eta, beta, alpha, p);
        assert!((r / lim - 1.0).abs() < 0.1, "{r} vs {lim}");
    }

    #[test]
    fn equal_rates_give_eta_near_rate() {
        let f = diagonal(vec![2.0, 2.0]);
        let v = WeightVector::new(vec![1.0, 1.0]).unwrap();
        let orders = MultiOrder::uniform(0.5, 2).unwrap();
        let eta = search_eta(&f, &v, &orders, 1.0, 0.3).unwrap();
        assert!((eta - (2.0 - MARGIN_EPS)).abs() < 1e-9, "{eta}");
    }

    #[test]
    fn large_rate_saturates_at_upper_end() {
        let f = diagonal(vec![50.0]);
        let v = WeightVector::new(vec![1.0]).unwrap();
        let orders = MultiOrder::uniform(0.5, 1).unwrap();
        assert_eq!(search_eta(&f, &v, &orders, 1.0, 1.0).unwrap(), ETA_HI);
    }

    #[test]
    fn growing_field_is_rejected() {
        let f = diagonal(vec![-1.0]);
        let v = WeightVector::new(vec![1.0]).unwrap();
        let orders = MultiOrder::uniform(0.5, 1).unwrap();
        assert!(matches!(
            search_eta(&f, &v, &orders, 1.0, 1.0),
            Err(AttractivityError::Premise(_))
        ));
    }

    #[test]
    fn mixed_orders_satisfy_condition() {
        let f = diagonal(vec![1.0, 1.0]);
        let v = WeightVector::new(vec![1.0, 1.0]).unwrap();
        let orders = MultiOrder::new(vec![0.4, 0.7]).unwrap();
        let eta = search_eta(&f, &v, &orders, 1.0, 1.0).unwrap();
        assert!(eta > 0.0 && eta < 1.0);
        let g = condition_margins(&[-1.0, -1.0], eta, &orders, 1.0, 1.0).unwrap();
        assert!(g.iter().all(|&x| x < -MARGIN_EPS * 0.99), "{g:?}");
        let g = condition_margins(&[-1.0, -1.0], eta * 1.01, &orders, 1.0, 1.0).unwrap();
        assert!(g.iter().any(|&x| x >= -MARGIN_EPS), "{g:?}");
    }

    #[test]
    fn envelope_dominates_initial_value() {
        let v = WeightVector::new(vec![3.0, 1.0, 1.0]).unwrap();
        let omega = [0.5, 0.3, 0.8];
        let m = weighted_norm(&omega, &v).unwrap();
        let env = EnvelopeParams::new(0.45, 0.3, v, 1.0, m).unwrap();
        for (i, w) in omega.iter().enumerate() {
            assert!(env.bound(i, 0.0).unwrap() >= *w);
            assert!(env.amplitudes[i] >= m * env.v.as_slice()[i]);
        }
    }

    #[test]
    fn zero_initial_value_gives_zero_envelope() {
        let f = diagonal(vec![1.0, 1.0]);
        let v = WeightVector::new(vec![1.0, 1.0]).unwrap();
        let orders = MultiOrder::uniform(0.5, 2).unwrap();
        let env = EnvelopeParams::for_initial(&f, &v, &orders, 1.0, &[0.0, 0.0]).unwrap();
        assert!(env.is_zero());
        assert_eq!(env.bound(1, 5.0).unwrap(), 0.0);
    }
}
