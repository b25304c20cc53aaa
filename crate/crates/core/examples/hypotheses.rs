//! Parses field files and reports cooperativity, homogeneity degree and a
//! decay direction.

use fraccoop::field::{analyze, parse_field, AnalyzeOptions};
use fraccoop::systems::{EXAMPLE_ONE_FIELD, EXAMPLE_TWO_FIELD};

const COMPETITIVE: &str = "\
dim = 2
f1 = -w1 - w2
f2 = -w2
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, text) in [
        ("degree 3/2", EXAMPLE_ONE_FIELD),
        ("degree 1", EXAMPLE_TWO_FIELD),
        ("competitive", COMPETITIVE),
    ] {
        let spec = parse_field(text)?;
        let report = analyze(&spec.to_field(), &AnalyzeOptions::default())?;
        println!("# {name}\n{report}\nall hold: {}\n", report.all_hold(1e-8));
    }
    Ok(())
}
