//! Truncated q-series: products, Pochhammer symbols and the descent polynomials.

use schmidt::partitions::IndexSet;
use schmidt::series::builders::{s_product, ProductKind};
use schmidt::series::{eulerian_bar, eulerian_poly, pochhammer, Caps, ColorAssignment, Poly, Series, Var};
use schmidt::Result;

fn run() -> Result<()> {
    let caps = Caps::unbounded(10);

    // (q;q)_inf: Euler's pentagonal numbers
    let euler = pochhammer(&Poly::one(), 1, 1, None, caps)?;
    println!("(q;q)_inf:\n{euler}");

    let y = |i| Poly::var(Var::Sym('y', i));
    println!("E_3 = {}", eulerian_poly(3, &[y(1), y(2)])?);
    println!("E_4 = {}", eulerian_poly(4, &[y(1), y(2), y(3)])?);

    // E~_4(0, q, 0, q^2, 0, q^3, 0, 1) = (q;q)_4 / (1-q)^4
    let zeros = vec![Series::zero(caps); 4];
    let mut ys: Vec<Series> = (1..4).map(|i| Series::term(Poly::one(), i, caps)).collect();
    ys.push(Series::one(caps));
    println!(
        "q-specialized E~_4 counts: {:?}",
        eulerian_bar(4, &zeros, &ys)?.counts()
    );

    // The colored product over the odd index set, colors kept symbolic.
    let prod = s_product(
        ProductKind::Over,
        &IndexSet::odds(),
        Caps::bounded(3, 2),
        &ColorAssignment::identity(),
    )?;
    println!("over-partition product over odds, N=3, D=2:\n{prod}");
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
