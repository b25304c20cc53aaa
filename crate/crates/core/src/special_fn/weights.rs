//! Product-quadrature weights for the kernel `(t − s)^{α−1}`, evaluated
//! without the catastrophic cancellation of the textbook differences.

/// Below this `x = 1/m` the binomial series is used instead of the
/// closed-form difference.
const SERIES_SWITCH: f64 = 0.1;

/// `Σ_{k ≥ from} C(p, k) x^k` for `|x| ≤ SERIES_SWITCH`.
fn binomial_tail(p: f64, x: f64, from: u32) -> f64 {
    let mut coeff = 1.0;
    let mut power = 1.0;
    let mut sum = 0.0;
    for k in 1..60u32 {
        coeff *= (p - (k - 1) as f64) / k as f64;
        power *= x;
        if k < from {
            continue;
        }
        let term = coeff * power;
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// `(k+1)^q − k^q`.
pub(crate) fn forward_power_difference(q: f64, k: usize) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let k = k as f64;
    k.powf(q) * (q * (1.0 / k).ln_1p()).exp_m1()
}

/// `(m+1)^p + (m−1)^p − 2 m^p` for `m ≥ 1`.
pub(crate) fn second_power_difference(p: f64, m: usize) -> f64 {
    debug_assert!(m >= 1);
    let mf = m as f64;
    let x = 1.0 / mf;
    if x > SERIES_SWITCH {
        (mf + 1.0).powf(p) + (mf - 1.0).powf(p) - 2.0 * mf.powf(p)
    } else {
        mf.powf(p) * (binomial_tail(p, x, 2) + binomial_tail(p, -x, 2))
    }
}

/// Weight of `f_0` in the product-trapezoid rule at index `n ≥ 1`:
/// `(n−1)^{α+1} − (n−1−α) n^α`.
pub(crate) fn trapezoid_start_weight(alpha: f64, n: usize) -> f64 {
    debug_assert!(n >= 1);
    let nf = n as f64;
    let p = alpha + 1.0;
    let x = 1.0 / nf;
    if x > SERIES_SWITCH {
        (nf - 1.0).powf(p) - (nf - 1.0 - alpha) * nf.powf(alpha)
    } else {
        nf.powf(p) * binomial_tail(p, -x, 2)
    }
}

/// Toeplitz weights `c_m` of the product-trapezoid rule, `c_0 = 1`.
pub(crate) fn trapezoid_weights(alpha: f64, len: usize) -> Vec<f64> {
    let p = alpha + 1.0;
    (0..len)
        .map(|m| if m == 0 { 1.0 } else { second_power_difference(p, m) })
        .collect()
}

/// Product-rectangle weights `b_k = (k+1)^α − k^α`.
pub(crate) fn rectangle_weights(alpha: f64, len: usize) -> Vec<f64> {
    (0..len).map(|k| forward_power_difference(alpha, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agree_with_direct_formulas_for_small_indices() {
        for &alpha in &[0.24, 0.5, 0.99] {
            let p = alpha + 1.0;
            for m in 1..40usize {
                let mf = m as f64;
                let direct = (mf + 1.0).powf(p) + (mf - 1.0).powf(p) - 2.0 * mf.powf(p);
                assert!((second_power_difference(p, m) - direct).abs() < 1e-12 * mf.powf(p));
                let direct = (mf - 1.0).powf(p) - (mf - 1.0 - alpha) * mf.powf(alpha);
                assert!((trapezoid_start_weight(alpha, m) - direct).abs() < 1e-12 * mf.powf(p));
                let direct = (mf + 1.0).powf(alpha) - mf.powf(alpha);
                assert!((forward_power_difference(alpha, m) - direct).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn large_index_asymptotics() {
        // c_m ≈ p(p−1) m^{p−2}, a_0(n) ≈ p(p−1)/2 n^{p−2}
        let alpha = 0.45;
        let p = alpha + 1.0;
        let m = 1_000_000usize;
        let mf = m as f64;
        let c = second_power_difference(p, m);
        assert!((c / (p * alpha * mf.powf(alpha - 1.0)) - 1.0).abs() < 1e-10);
        let a0 = trapezoid_start_weight(alpha, m);
        assert!((a0 / (0.5 * p * alpha * mf.powf(alpha - 1.0)) - 1.0).abs() < 1e-5);
    }

    #[test]
    fn order_one_weights_are_classical() {
        assert!(trapezoid_weights(1.0, 50)[1..].iter().all(|&c| (c - 2.0).abs() < 1e-13));
        assert!((1..50).all(|n| (trapezoid_start_weight(1.0, n) - 1.0).abs() < 1e-13));
        assert!(rectangle_weights(1.0, 50).iter().all(|&b| (b - 1.0).abs() < 1e-13));
    }
}
