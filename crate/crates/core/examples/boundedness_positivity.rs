//! Positivity, boundedness in the weighted norm and order preservation for
//! the degree 3/2 reference system.

use fraccoop::attractivity::{boundedness_check, monotonicity_check, positivity_check};
use fraccoop::solver::{integrate, SolveConfig};
use fraccoop::systems::{example, SystemKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sys = example(1).unwrap();
    let SystemKind::Attractive { v, .. } = &sys.kind else { unreachable!() };
    let field = sys.field.clamped_to_orthant();
    let cfg = SolveConfig::new(20.0, 1e-3)?;
    let traj = integrate(&field, &sys.orders, &sys.omega, &cfg)?;
    println!("{}", positivity_check(&traj));
    println!("{}", boundedness_check(&traj, v));

    let lower: Vec<f64> = sys.omega.iter().map(|x| 0.5 * x).collect();
    println!("{}", monotonicity_check(&field, &sys.orders, &lower, &sys.omega, &cfg)?);
    Ok(())
}
