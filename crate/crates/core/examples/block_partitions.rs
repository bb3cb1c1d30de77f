//! Block over-partitions and the sorting bijection Gamma_U.

use schmidt::blocks::{gamma_big_u, gamma_big_u_inverse, BlockFamily, BlockType};
use schmidt::oracle::BlockEnum;
use schmidt::partitions::IndexSet;
use schmidt::series::builders::{block_product, unk_two_product, BlockWeight};
use schmidt::series::{Caps, ColorAssignment};
use schmidt::Result;

fn run() -> Result<()> {
    let u = BlockType::unk(2, 1)?;
    println!("block type {u}");
    for (lambda, _) in BlockEnum::new(u.clone(), BlockFamily::Pbar, IndexSet::all(), 4)
        .collect()?
        .iter()
        .take(12)
    {
        let (sigma, mu) = gamma_big_u(lambda, &u)?;
        assert_eq!(&gamma_big_u_inverse(&sigma, &mu, &u)?, lambda);
        println!("{lambda:#}  ->  ({:?}, {mu:#})", sigma.blocks());
    }

    let caps = Caps::bounded(3, 2);
    let closed = unk_two_product(1, BlockFamily::Pbar, caps, &ColorAssignment::identity())?;
    println!("closed form for U(2,1), N=3, D=2:\n{closed}");

    let ones = ColorAssignment::all_one();
    let caps = Caps::bounded(8, 8);
    let structural = block_product(
        &u,
        BlockFamily::Pbar,
        &BlockWeight::Index(u.singleton_ends()),
        caps,
        &ones,
    )?;
    let closed = unk_two_product(1, BlockFamily::Pbar, caps, &ones)?;
    assert_eq!(structural, closed);
    println!("counts with all colors 1: {:?}", closed.counts());
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
