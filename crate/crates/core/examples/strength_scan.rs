//! Strength of the canonical labeling by both evaluators, with per-class maxima.
//!
//! cargo run --release --example strength_scan -- 12

use hypercube_strength::strength::strf_scan_by_class;
use hypercube_strength::{bounds, strf_hypercube_edges, strf_hypercube_scan};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max: usize = std::env::args().nth(1).map_or(Ok(12), |s| s.parse())?;
    println!(" n  str_f(Q_n)  recurrence bound  witness");
    for n in 1..=n_max {
        let scan = strf_hypercube_scan(n)?;
        if n <= 16 {
            assert_eq!(strf_hypercube_edges(n)?.value, scan.value);
        }
        let bound = if n >= 3 {
            bounds::upper_bound_recurrence(n)?.to_string()
        } else {
            "-".into()
        };
        let (a, b) = scan.witness_strings().expect("hypercube witness");
        println!("{n:>2}  {:>10}  {bound:>16}  {a} {b}", scan.value);
    }

    println!("\nbest pair sum per weight of w at n = {n_max}:");
    for c in strf_scan_by_class(n_max)? {
        println!("  |w| = {:>2}: {}", c.w_weight, c.value);
    }
    Ok(())
}
