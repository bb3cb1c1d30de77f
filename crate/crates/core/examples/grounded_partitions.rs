//! Flat and regular grounded partitions, and the map to over-partitions.

use schmidt::grounded::{
    glaisher_corollary_tables, glaisher_tables, grounded_partitions, EpsilonContext, GroundedKind,
};
use schmidt::partitions::ModMShape;
use schmidt::Result;

fn run() -> Result<()> {
    let ctx = EpsilonContext::new(2)?;
    for row in ctx.matrix() {
        println!("{row:?}");
    }
    for kind in [GroundedKind::Flat, GroundedKind::Regular] {
        let list = grounded_partitions(kind, &ctx, 2, 2);
        println!("{kind:?}, weight <= 2, at most 2 colored parts: {}", list.len());
        for pi in list.iter().take(6) {
            println!("  {pi}  weight {}", pi.weight());
        }
    }
    let (flat, regular) = glaisher_tables(&ctx, 6, 3);
    println!(
        "flat = regular up to weight 6: {}",
        flat.as_series() == regular.as_series()
    );

    let shape: ModMShape = "m=3,s=1,2".parse()?;
    let (gaps, avoid) = glaisher_corollary_tables(&shape, 6, 2);
    println!(
        "bounded gaps vs no plain multiples of 3: {:?} / {:?}",
        gaps.counts(),
        avoid.counts()
    );
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
