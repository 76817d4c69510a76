//! Bound tables and the central binomial inequalities behind the closed form.
//!
//! cargo run --example bounds_table -- 5 20

use hypercube_strength::bounds::{central_binomial_checks, comparison_table};
use hypercube_strength::render::{render_bounds, Format};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let lo: usize = args.next().map_or(Ok(5), |s| s.parse())?;
    let hi: usize = args.next().map_or(Ok(20), |s| s.parse())?;
    print!(
        "{}",
        render_bounds(&comparison_table(lo, hi)?, Format::Markdown)
    );

    println!("\n k  C(2k,k)  C(2k,k)*sqrt(pi k)/4^k  below 4^(k-1)");
    for c in central_binomial_checks(10)? {
        println!(
            "{:>2}  {:>7}  {:.4}  {}",
            c.k, c.central, c.sqrt_pi_ratio, c.below_quarter_power
        );
    }
    Ok(())
}
