//! Plane partitions counted three ways: directly, by MacMahon's product, and
//! as partitions weighted by the index set 1, 2, 4, 7, 11, ...

use schmidt::oracle::{enum_plane_partitions, OverEnum};
use schmidt::partitions::{FamilyTag, IndexSet};
use schmidt::series::builders::macmahon;
use schmidt::series::Caps;
use schmidt::Result;

fn run() -> Result<()> {
    let n = 8;
    for p in enum_plane_partitions(3)? {
        println!("{p}");
    }
    let product = macmahon(Caps::unbounded(n as u32)).counts();
    let mut weighted = vec![0u64; n as usize + 1];
    for (_, w) in OverEnum::new(FamilyTag::P, IndexSet::tri1(), n).collect()? {
        weighted[w as usize] += 1;
    }
    for k in 0..=n {
        let direct = enum_plane_partitions(k)?.len();
        println!(
            "n = {k}  plane {direct:4}  MacMahon {:4}  S-weighted {:4}",
            product[k as usize], weighted[k as usize]
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
