//! Distinct parts counted by the sum of their odd-indexed parts give p(n).

use schmidt::oracle::OverEnum;
use schmidt::partitions::{FamilyTag, IndexSet};
use schmidt::series::builders::partition_power;
use schmidt::series::Caps;
use schmidt::Result;

fn run() -> Result<()> {
    let n = 12;
    let odds = IndexSet::odds();
    let mut counts = vec![0u64; n as usize + 1];
    for (lambda, w) in OverEnum::new(FamilyTag::Dbar, odds.clone(), n).collect()? {
        counts[w as usize] += 1;
        if w == 5 {
            println!("S-weight 5: {lambda:#}");
        }
    }
    let p = partition_power(Caps::unbounded(n as u32), 1).counts();
    for (k, c) in counts.iter().enumerate() {
        println!("n = {k:2}  distinct {c:4}  p(n) {:4}", p[k]);
        assert_eq!(p[k], (*c).into());
    }

    // Schmidt's companion: all partitions weighted the same way give p_2(n).
    let p2 = partition_power(Caps::unbounded(8), 2).counts();
    let mut plain = vec![0u64; 9];
    for (_, w) in OverEnum::new(FamilyTag::P, odds, 8).collect()? {
        plain[w as usize] += 1;
    }
    println!("partitions by odd-index weight: {plain:?}");
    assert!(plain.iter().zip(&p2).all(|(a, b)| b == &(*a).into()));
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
