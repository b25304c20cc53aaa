//! Real Gamma function accurate to a few ulps on the whole line.

#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;

/// Taylor coefficients of `1/Γ(1.5 + t)` about `t = 0`.
const RGAMMA_TAYLOR: [f64; 25] = [
    std::f64::consts::FRAC_2_SQRT_PI,
    -0.04117452644528310145025,
    -0.5266544355255444792632,
    0.1751020260439345614951,
    0.0509668602477060767747,
    -0.04215516936853560099319,
    0.006612897826824127276566,
    0.002120731442572938336012,
    -0.001110730254594890717119,
    0.0001523576207674768721656,
    0.00002535520492381416527825,
    -0.00001389680571791375602197,
    0.000002156203290514172453456,
    0.00000005794264054052672504226,
    -0.00000008913551118311116054072,
    0.00000001710346941591537374932,
    -0.0000000009313686445241901568476,
    -0.0000000002680474103349662556504,
    0.00000000007458932233316326050693,
    -0.000000000008012807061414718370918,
    -0.0000000000000838234303345185493049,
    0.0000000000001694634090432052226774,
    -0.00000000000002787575670712575208298,
    0.000000000000001867039469506530541912,
    0.0000000000000001304949900858798658818,
];

// B_{2k} / (2k (2k-1)) for the Stirling series.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

const GAMMA_OVERFLOW: f64 = 171.624;

fn is_pole(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// `sin(πx)` with the argument reduced before multiplying by π.
fn sin_pi(x: f64) -> f64 {
    let mut r = x - 2.0 * (0.5 * x).round();
    if r > 0.5 {
        r = 1.0 - r;
    } else if r < -0.5 {
        r = -1.0 - r;
    }
    (PI * r).sin()
}

/// `Γ(x)` for `x ∈ [1, 2]`.
fn gamma_core(x: f64) -> f64 {
    let t = x - 1.5;
    1.0 / RGAMMA_TAYLOR.iter().rev().fold(0.0, |acc, &c| acc * t + c)
}

/// `Γ(x)`; NaN at the poles, `+∞` past the overflow threshold.
pub fn gamma(x: f64) -> f64 {
    if x.is_nan() || is_pole(x) {
        return f64::NAN;
    }
    if x < 0.5 {
        return PI / (sin_pi(x) * gamma(1.0 - x));
    }
    if x > GAMMA_OVERFLOW {
        return f64::INFINITY;
    }
    if x == x.floor() && x <= 23.0 {
        return (2..x as u32).fold(1.0, |acc, j| acc * j as f64);
    }
    if x < 1.0 {
        return gamma_core(x + 1.0) / x;
    }
    let mut y = x;
    let mut prod = 1.0;
    while y > 2.0 {
        y -= 1.0;
        prod *= y;
    }
    prod * gamma_core(y)
}

/// `1/Γ(x)`, exactly zero at the poles.
pub fn rgamma(x: f64) -> f64 {
    if is_pole(x) {
        return 0.0;
    }
    if x > GAMMA_OVERFLOW {
        return (-ln_gamma(x)).exp();
    }
    if x < -GAMMA_OVERFLOW {
        let s = sin_pi(x);
        return s.signum() * (s.abs().ln() + ln_gamma(1.0 - x) - PI.ln()).exp();
    }
    if x < 0.5 {
        return sin_pi(x) * gamma(1.0 - x) / PI;
    }
    1.0 / gamma(x)
}

/// `ln |Γ(x)|`; `+∞` at the poles.
pub fn ln_gamma(x: f64) -> f64 {
    if is_pole(x) {
        return f64::INFINITY;
    }
    if x < 0.5 {
        return PI.ln() - sin_pi(x).abs().ln() - ln_gamma(1.0 - x);
    }
    if x < 15.0 {
        return gamma(x).ln();
    }
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let tail = STIRLING.iter().rev().fold(0.0, |acc, &c| acc * inv2 + c) * inv;
    (x - 0.5) * x.ln() - x + 0.5 * (2.0 * PI).ln() + tail
}
