//! Phi_S: over-partitions with an S-weight to colored partitions.

use schmidt::colored::{color_sequence, phi_s, phi_s_inverse};
use schmidt::partitions::{IndexSet, OverPartition};
use schmidt::Result;

fn run() -> Result<()> {
    let tri1: IndexSet = "tri1".parse()?;
    for text in ["(5,4,4~,2~,1)", "(3,3,3,3)", "(7~,6~,2)"] {
        let lambda: OverPartition = text.parse()?;
        let mu = phi_s(&lambda, &tri1);
        println!(
            "{lambda:#}  S-weight {}  ->  {mu}  weight {}  colors {}",
            lambda.s_weight(&tri1),
            mu.weight(),
            color_sequence(&lambda)
        );
        assert_eq!(phi_s_inverse(&mu)?, lambda);
    }
    let sweep = schmidt::verify::phi_s_bijection(&tri1, 8)?;
    println!(
        "round trip over S-weight <= 8: {} checked, {} violations",
        sweep.checked,
        sweep.violations.len()
    );
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
