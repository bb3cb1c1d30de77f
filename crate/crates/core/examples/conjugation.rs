//! Conjugating over-partitions: column i is overlined when `i~` is a part.

use schmidt::oracle::OverEnum;
use schmidt::partitions::{FamilyTag, IndexSet, OverPartition};
use schmidt::Result;

fn run() -> Result<()> {
    for text in ["(4,4~,3~,2,2~,1~)", "(5,3~,1)", "(3,3,2~)", "()"] {
        let lambda: OverPartition = text.parse()?;
        let mu = lambda.conjugate();
        println!("{lambda:#}  ->  {mu:#}  ->  {:#}", mu.conjugate());
    }

    let mut fixed = 0;
    let all = OverEnum::new(FamilyTag::Pbar, IndexSet::all(), 6).collect()?;
    for (lambda, _) in &all {
        assert_eq!(&lambda.conjugate().conjugate(), lambda);
        if &lambda.conjugate() == lambda {
            fixed += 1;
        }
    }
    println!("{} over-partitions of weight <= 6, {fixed} self-conjugate", all.len());
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
