//! Runs every reference system with its checks and writes the artifacts to
//! `target/reproduce/exN`.

use std::path::PathBuf;

use fraccoop::cli::{reproduce, DEFAULT_STEP, DEFAULT_T_FINAL};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let root = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "target/reproduce".into()));
    for id in 1..=3 {
        let out = root.join(format!("ex{id}"));
        let report = reproduce(id, &out, DEFAULT_T_FINAL, DEFAULT_STEP)?;
        print!("{}", report.text());
        println!("artifacts in {}\n", out.display());
    }
    Ok(())
}
