//! Every registered identity and bijection check at the default caps.

use schmidt::series::Caps;
use schmidt::verify::{reports_json, verify_all, Status, VerifyOptions};
use schmidt::Result;

fn run() -> Result<()> {
    let reports = verify_all(&VerifyOptions::new(Caps::bounded(8, 3)))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    for r in &reports {
        println!("{}", r.summary_line());
    }
    let failed = reports.iter().filter(|r| r.status != Status::Pass).count();
    println!("{} identities, {failed} not passing", reports.len());
    if std::env::args().any(|a| a == "--json") {
        println!("{}", reports_json(&reports));
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
