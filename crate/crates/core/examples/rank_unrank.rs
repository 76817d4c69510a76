//! Rank and unrank fixed-weight bit strings, including strings wider than 64 bits.
//!
//! cargo run --example rank_unrank

use hypercube_strength::bits::{lex_rank, lex_unrank, prec_count, revlex_rank, succ_count};
use hypercube_strength::{BitString, Order};
use num_bigint::BigUint;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("weight-2 strings of length 4:");
    for r in 0..6u32 {
        let x = lex_unrank(4, 2, &BigUint::from(r))?;
        println!(
            "  {x}  lex {}  revlex {}  succ(revlex) {}  prec(lex) {}",
            lex_rank(&x),
            revlex_rank(&x),
            succ_count(&x, Order::Revlex),
            prec_count(&x, Order::Lex)
        );
    }

    let wide: BitString = format!("{}{}", "10".repeat(50), "1".repeat(30)).parse()?;
    let r = lex_rank(&wide);
    let back = lex_unrank(wide.len(), wide.weight(), &r)?;
    println!(
        "\n{}-bit string of weight {} has lex rank {r}",
        wide.len(),
        wide.weight()
    );
    assert_eq!(back, wide);
    println!("unrank recovers it: {}", back == wide);
    Ok(())
}
