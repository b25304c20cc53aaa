//! Fractional Lotka-Volterra system: equilibrium by Newton iteration, then
//! the algebraic approach to it.

use fraccoop::kolmogorov::{assemble, find_equilibrium, rate_check};
use fraccoop::solver::{integrate, SolveConfig};
use fraccoop::systems::{example, SystemKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sys = example(3).unwrap();
    let SystemKind::Kolmogorov { rates, interaction, guess, .. } = &sys.kind else { unreachable!() };
    let kol = assemble(rates.clone(), interaction.clone())?;
    let eq = find_equilibrium(&kol, guess)?;
    println!("{eq}");

    let traj = integrate(kol.assembled(), &sys.orders, &sys.omega, &SolveConfig::new(50.0, 1e-2)?)?;
    for t in [1.0, 10.0, 50.0] {
        let w = traj.state((t / traj.step()).round() as usize);
        let e = w.iter().zip(&eq.point).fold(0.0, |m: f64, (a, b)| m.max((a - b).abs()));
        println!("t={t:>4}: w=({:.5}, {:.5}) distance {e:.4e}", w[0], w[1]);
    }

    let report = rate_check(&kol, &sys.orders, &sys.omega, &eq, &SolveConfig::new(1000.0, 1e-2)?)?;
    println!("{report}");
    Ok(())
}
