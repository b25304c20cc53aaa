//! Tabulates E_{α,β}(z) on a few orders and compares the special cases
//! with closed forms.

use fraccoop::special_fn::{gamma, mittag_leffler, ml_one};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>8} {:>12} {:>12} {:>12}", "z", "a=0.25", "a=0.5", "a=0.9");
    for z in [-100.0, -20.0, -5.0, -1.0, -0.1, 0.0, 0.5, 2.0] {
        println!(
            "{z:>8} {:>12.6e} {:>12.6e} {:>12.6e}",
            ml_one(0.25, z)?,
            ml_one(0.5, z)?,
            ml_one(0.9, z)?
        );
    }

    // E_1(z) = e^z and E_{1,2}(z) = (e^z - 1)/z
    println!("E_1(-3)    = {:.15}  exp(-3) = {:.15}", ml_one(1.0, -3.0)?, (-3.0f64).exp());
    println!("E_1,2(-3)  = {:.15}  (exp(-3)-1)/(-3) = {:.15}", mittag_leffler(1.0, 2.0, -3.0)?, ((-3.0f64).exp() - 1.0) / -3.0);
    // E_{α,β}(0) = 1/Γ(β)
    println!("E_0.5,0.7(0) = {:.15}  1/Γ(0.7) = {:.15}", mittag_leffler(0.5, 0.7, 0.0)?, 1.0 / gamma(0.7));
    Ok(())
}
