//! The periodic index sets: rho statistics and the mod-m product identities.

use schmidt::params::Params;
use schmidt::partitions::{rho_stats, ModMShape, OverPartition};
use schmidt::series::Caps;
use schmidt::verify::{verify, VerifyOptions};
use schmidt::Result;

fn run() -> Result<()> {
    let shape: ModMShape = "m=3,t=2,s=1,2".parse()?;
    println!("index set {shape}");
    let lambda: OverPartition = "(6~,5,5,3,3~,1)".parse()?;
    let r = rho_stats(&lambda, 3)?;
    println!("{lambda:#}: plain {:?} overlined {:?}", r.plain, r.bar);

    let opts = VerifyOptions::new(Caps::bounded(8, 3));
    for id in [
        "thm1.7/eq10",
        "thm1.7/eq11",
        "thm1.7/eq12",
        "thm1.7/eq13",
        "thm1.8/eq14",
        "thm1.8/eq15",
        "thm1.8/eq16",
    ] {
        let params: Params = "m=3;t=2;s=1,2".parse()?;
        println!("{}", verify(id, &params, &opts)?.summary_line());
    }
    let literal: Params = "variant=literal".parse()?;
    println!("{}", verify("thm1.7/eq13", &literal, &opts)?.summary_line());
    for row in ["ovp", "p", "ovf", "ovd", "ovp-m", "p-m", "ovf-m"] {
        println!(
            "{}",
            verify(&format!("cor1.11/{row}"), &Params::new(), &opts)?.summary_line()
        );
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
