//! Caputo derivative and Riemann-Liouville integral of sampled functions.

use fraccoop::special_fn::{caputo_numeric, gamma, rl_integral, SampledFunction};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h = 1e-3;
    let n = 2001;
    // D^α t^2 = 2 t^{2-α} / Γ(3-α)
    let square = SampledFunction::from_fn(h, n, |t| t * t)?;
    for alpha in [0.25, 0.5, 0.75, 1.0] {
        let d = caputo_numeric(&square, alpha)?;
        let (t, v) = d.iter().last().unwrap();
        let exact = 2.0 * t.powf(2.0 - alpha) / gamma(3.0 - alpha);
        println!("D^{alpha} t^2 at t={t:.3}: {v:.6} (exact {exact:.6})");
    }

    // I^α 1 = t^α / Γ(1+α)
    let one = SampledFunction::from_fn(h, n, |_| 1.0)?;
    for alpha in [0.3, 0.6] {
        let i = rl_integral(&one, alpha)?;
        let (t, v) = i.iter().last().unwrap();
        println!("I^{alpha} 1 at t={t:.3}: {v:.6} (exact {:.6})", t.powf(alpha) / gamma(1.0 + alpha));
    }
    Ok(())
}
