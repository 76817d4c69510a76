//! Run every invariant suite and print a summary line per check.
//!
//! cargo run --release --example verify_suites -- 12

use hypercube_strength::verify::{run, Suite};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max: usize = std::env::args().nth(1).map_or(Ok(12), |s| s.parse())?;
    let mut ok = true;
    for report in run(Suite::All, n_max) {
        for c in &report.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            println!(
                "{mark} {:<10} {:>9} cases  {}",
                report.suite, c.cases, c.name
            );
            if let Some(cx) = &c.counterexample {
                println!("       counterexample: {cx}");
            }
        }
        ok &= report.passed();
    }
    if !ok {
        std::process::exit(2);
    }
    Ok(())
}
