//! D^α w = -w has the solution E_α(-t^α). Integrates it and measures the
//! observed convergence order.

use fraccoop::field::VectorField;
use fraccoop::solver::{convergence_order, integrate, MultiOrder, SolveConfig};
use fraccoop::special_fn::ml_one;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = VectorField::new(1, |w, out| out[0] = -w[0]);
    for alpha in [0.3, 0.5, 0.8] {
        let orders = MultiOrder::uniform(alpha, 1)?;
        let traj = integrate(&f, &orders, &[1.0], &SolveConfig::new(5.0, 1e-3)?)?;
        let worst = traj
            .times()
            .iter()
            .zip(traj.component(0))
            .map(|(t, w)| (w - ml_one(alpha, -t.powf(alpha)).unwrap()).abs())
            .fold(0.0, f64::max);
        let exact = ml_one(alpha, -1.0)?;
        let order = convergence_order(&f, &orders, &[1.0], 1.0, 1e-2, Some(&[exact]))?;
        println!("alpha={alpha}: max error on [0,5] {worst:.3e}, order {order:?}");
    }
    Ok(())
}
