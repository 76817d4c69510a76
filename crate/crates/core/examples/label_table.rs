//! Print the canonical labeling of Q_n and look labels up in both directions.
//!
//! cargo run --example label_table -- 4

use hypercube_strength::render::{label_rows, render_label_rows, Format};
use hypercube_strength::{label_of, string_of, BitString, Labeler};
use num_bigint::BigUint;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map_or(Ok(4), |s| s.parse())?;
    print!("{}", render_label_rows(&label_rows(n)?, Format::Markdown));

    // the word-sized labeler is the fast path for n <= 63
    let f = Labeler::new(30)?;
    let x = 0b10_1100_0011_1100_0010_1010_1011_0011_u64;
    let v = f.label(x);
    println!(
        "\nn=30: f({x:030b}) = {v}, inverse ok: {}",
        f.string(v)? == x
    );

    // beyond 63 bits the arbitrary-precision path takes over; 1^80 opens the even half
    let wide: BitString = "1".repeat(80).parse()?;
    let v = label_of(80, &wide)?;
    println!("n=80: f(1^80) = {v}");
    assert_eq!(string_of(80, &v)?, wide);
    assert_eq!(v, (BigUint::from(1u8) << 79u32) + 1u32);
    Ok(())
}
