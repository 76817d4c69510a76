//! Lower and upper bounds on `str(Q_n)`, exact over arbitrary-precision integers.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::binomial::{binomial, central};
use crate::error::{Error, Result};

/// Exact strengths known for the smallest hypercubes, `n = 1..=5`.
pub const EXACT_SMALL: [u64; 5] = [3, 6, 11, 21, 40];

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

fn scope(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::OutOfScope { what, n, min })
    } else {
        Ok(())
    }
}

/// Best known lower bound on `str(Q_n)`: the exact values up to `n = 5`, then
/// the larger of `2^n + n` and the applicable piecewise formula
/// (`2^n + 4n - 12` for `n <= 9`, `2^n + floor(n^2 / 4) + 4` from `n = 10`).
pub fn lower_bound(n: usize) -> Result<BigUint> {
    scope("the lower bound", n, 1)?;
    if n <= EXACT_SMALL.len() {
        return Ok(BigUint::from(EXACT_SMALL[n - 1]));
    }
    let extra = if n <= 9 { 4 * n - 12 } else { n * n / 4 + 4 };
    Ok(pow2(n) + extra.max(n))
}

/// `2^n + 2^(n-2) + 1`, valid from `n = 3`.
pub fn upper_bound_prior(n: usize) -> Result<BigUint> {
    scope("the prior upper bound", n, 3)?;
    Ok(pow2(n) + pow2(n - 2) + 1u32)
}

/// Increment of the two-step recurrence:
/// `3 * 2^(n-2) + C(n-3, ceil((n-3)/2)) + C(n-2, ceil((n-2)/2))`.
pub fn recurrence_step(n: usize) -> BigUint {
    debug_assert!(n >= 3);
    BigUint::from(3u32) * pow2(n - 2) + central(n as u64 - 3) + central(n as u64 - 2)
}

/// Increment of the one-step chain: `2^(n-1) + C(n-2, ceil((n-2)/2))`.
pub fn chain_step(n: usize) -> BigUint {
    debug_assert!(n >= 2);
    pow2(n - 1) + central(n as u64 - 2)
}

/// The two-step recurrence unrolled from the exact bases 11, 21, 40 at `n = 3, 4, 5`.
pub fn upper_bound_recurrence(n: usize) -> Result<BigUint> {
    scope("the recurrence upper bound", n, 3)?;
    if n <= 5 {
        return Ok(BigUint::from(EXACT_SMALL[n - 1]));
    }
    let base = if n % 2 == 0 { 4 } else { 5 };
    let mut acc = BigUint::from(EXACT_SMALL[base - 1]);
    for m in (base + 2..=n).step_by(2) {
        acc += recurrence_step(m);
    }
    Ok(acc)
}

/// `2^n + 2^(n-3) + 28`, valid from `n = 14`.
pub fn upper_bound_closed(n: usize) -> Result<BigUint> {
    scope("the closed-form upper bound", n, 14)?;
    Ok(pow2(n) + pow2(n - 3) + 28u32)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsRow {
    pub n: usize,
    #[serde(with = "crate::decimal")]
    pub lower: BigUint,
    #[serde(with = "crate::decimal")]
    pub upper_prior: BigUint,
    #[serde(with = "crate::decimal")]
    pub upper_recurrence: BigUint,
    #[serde(with = "crate::decimal::option")]
    pub upper_closed: Option<BigUint>,
}

pub fn comparison_table(n_min: usize, n_max: usize) -> Result<Vec<BoundsRow>> {
    scope("the bounds table", n_min, 3)?;
    (n_min..=n_max)
        .map(|n| {
            Ok(BoundsRow {
                n,
                lower: lower_bound(n)?,
                upper_prior: upper_bound_prior(n)?,
                upper_recurrence: upper_bound_recurrence(n)?,
                upper_closed: upper_bound_closed(n).ok(),
            })
        })
        .collect()
}

/// `sum_{k=0}^{l} (-1)^k C(big_n, k)`.
pub fn alternating_sum(big_n: u64, l: u64) -> BigInt {
    (0..=l).fold(BigInt::zero(), |acc, k| {
        let term = BigInt::from(binomial(big_n, k as i64));
        if k % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// `(-1)^l C(big_n - 1, l)`, the closed form of [`alternating_sum`] for `big_n >= 1`.
pub fn alternating_sum_closed(big_n: u64, l: u64) -> BigInt {
    debug_assert!(big_n >= 1);
    let c = BigInt::from(binomial(big_n - 1, l as i64));
    if l % 2 == 0 {
        c
    } else {
        -c
    }
}

// 36 significant digits of pi; PI_LOW / 10^35 < pi < (PI_LOW + 1) / 10^35
const PI_LOW: &str = "314159265358979323846264338327950288";
const PI_SCALE: u32 = 35;

/// One row of the central binomial inequality checks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CentralBinomialCheck {
    pub k: u64,
    #[serde(with = "crate::decimal")]
    pub central: BigUint,
    /// `C(2k, k) < 4^k / sqrt(pi k)`, decided exactly as `C^2 * pi * k < 16^k`.
    pub below_sqrt_pi_bound: bool,
    /// `C(2k, k) < 4^(k-1)`.
    pub below_quarter_power: bool,
    /// `C(2k, k) < 4^k / 8`.
    pub below_eighth_power: bool,
    /// `C(2k, k) < 4^k / 16`.
    pub below_sixteenth_power: bool,
    /// Floating-point `C(2k, k) * sqrt(pi k) / 4^k`; informational only.
    pub sqrt_pi_ratio: f64,
}

fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("fits an f64").ln();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().expect("64-bit mantissa").ln() + shift as f64 * std::f64::consts::LN_2
}

pub fn central_binomial_check(k: u64) -> CentralBinomialCheck {
    let c = binomial(2 * k, k as i64);
    let four_k = BigUint::one() << (2 * k);
    let pi_high: BigUint = PI_LOW.parse::<BigUint>().expect("digits") + 1u32;
    let scale = BigUint::from(10u32).pow(PI_SCALE);
    // C^2 * k * pi_high < 16^k * scale certifies the strict inequality
    let lhs = &c * &c * k * pi_high;
    let rhs = &four_k * &four_k * scale;
    let sqrt_pi_ratio = (ln_big(&c) + 0.5 * (std::f64::consts::PI * k as f64).ln()
        - 2.0 * k as f64 * std::f64::consts::LN_2)
        .exp();
    CentralBinomialCheck {
        k,
        below_sqrt_pi_bound: k >= 1 && lhs < rhs,
        below_quarter_power: k >= 1 && &c << 2u32 < four_k,
        below_eighth_power: &c << 3u32 < four_k,
        below_sixteenth_power: &c << 4u32 < four_k,
        central: c,
        sqrt_pi_ratio,
    }
}

pub fn central_binomial_checks(k_max: u64) -> Result<Vec<CentralBinomialCheck>> {
    if k_max == 0 {
        return Err(Error::OutOfScope {
            what: "central binomial checks",
            n: 0,
            min: 1,
        });
    }
    Ok((1..=k_max).map(central_binomial_check).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn lower_examples() {
        assert_eq!(lower_bound(4).unwrap(), big(21));
        assert_eq!(lower_bound(6).unwrap(), big(76));
        assert_eq!(lower_bound(10).unwrap(), big(1053));
        assert!(lower_bound(0).is_err());
    }

    #[test]
    fn prior_examples() {
        assert_eq!(upper_bound_prior(5).unwrap(), big(41));
        assert_eq!(upper_bound_prior(13).unwrap(), big(10241));
        assert_eq!(upper_bound_prior(8).unwrap(), big(321));
        assert!(upper_bound_prior(2).is_err());
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(upper_bound_recurrence(6).unwrap(), big(78));
        assert_eq!(upper_bound_recurrence(7).unwrap(), big(152));
        assert_eq!(upper_bound_recurrence(13).unwrap(), big(9181));
    }

    #[test]
    fn recurrence_from_three_reaches_forty() {
        // unrolling from 11 at n = 3 happens to give the exact value at n = 5
        assert_eq!(big(EXACT_SMALL[2]) + recurrence_step(5), big(40));
    }

    #[test]
    fn closed_examples() {
        assert_eq!(upper_bound_closed(14).unwrap(), big(18460));
        assert_eq!(upper_bound_closed(16).unwrap(), big(73756));
        assert_eq!(
            upper_bound_prior(14).unwrap() - upper_bound_closed(14).unwrap(),
            big(2021)
        );
        assert!(upper_bound_closed(13).is_err());
    }

    #[test]
    fn table_rows() {
        assert_eq!(comparison_table(5, 13).unwrap().len(), 9);
        let row = &comparison_table(14, 14).unwrap()[0];
        assert_eq!(row.upper_closed, Some(big(18460)));
        assert!(comparison_table(2, 4).is_err());
        assert!(comparison_table(5, 4).unwrap().is_empty());
    }

    #[test]
    fn central_examples() {
        let c6 = central_binomial_check(6);
        assert_eq!(c6.central, big(924));
        assert!(c6.below_quarter_power);
        // 252 < 256 already holds at k = 5
        let c5 = central_binomial_check(5);
        assert_eq!(c5.central, big(252));
        assert!(c5.below_quarter_power);
        let c1 = central_binomial_check(1);
        assert!(c1.below_sqrt_pi_bound);
        assert!(c1.sqrt_pi_ratio < 1.0);
        assert!(central_binomial_checks(0).is_err());
    }

    #[test]
    fn alternating_small() {
        assert_eq!(alternating_sum(5, 2), BigInt::from(1 - 5 + 10));
        assert_eq!(alternating_sum_closed(5, 2), BigInt::from(6));
    }
}
