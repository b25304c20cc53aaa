//! Fits the Mittag-Leffler envelope for the three-dimensional reference
//! system and compares it with the trajectory.

use fraccoop::attractivity::{envelope_check, EnvelopeParams};
use fraccoop::solver::{integrate, SolveConfig};
use fraccoop::systems::{example, SystemKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sys = example(2).unwrap();
    let SystemKind::Attractive { v, degree } = &sys.kind else { unreachable!() };
    let env = EnvelopeParams::for_initial(&sys.field, v, &sys.orders, *degree, &sys.omega)?;
    println!("{env}");

    let traj = integrate(&sys.field, &sys.orders, &sys.omega, &SolveConfig::new(20.0, 1e-2)?)?;
    for t in [0.0, 1.0, 5.0, 10.0, 20.0] {
        let n = (t / traj.step()).round() as usize;
        let bounds: Vec<String> = (0..sys.dim())
            .map(|i| format!("{:.4}<={:.4}", traj.state(n)[i], env.bound(i, t).unwrap()))
            .collect();
        println!("t={t:>5}: {}", bounds.join("  "));
    }
    println!("{}", envelope_check(&traj, &env));
    Ok(())
}
