use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{word, BitString};
use crate::binomial::{binomial, shared_table};
use crate::error::{Error, Result};

/// Ordering of a fixed-weight class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    Lex,
    Revlex,
}

fn class_size(len: usize, weight: usize) -> BigUint {
    binomial(len as u64, weight as i64)
}

/// Position (0-based) of `x` in the lexicographic listing of its weight class.
pub fn lex_rank(x: &BitString) -> BigUint {
    if let Some(w) = x.as_word() {
        return BigUint::from(word::lex_rank(w));
    }
    let table = shared_table();
    let mut rank = BigUint::zero();
    for (j, c) in x.ones_from_right().enumerate() {
        if j + 1 > c {
            continue;
        }
        if c <= table.max_n() {
            rank += table.entry(c, j + 1);
        } else {
            rank += binomial(c as u64, j as i64 + 1);
        }
    }
    rank
}

/// The `rank`-th string (0-based) of length `len` and weight `weight` in lexicographic order.
pub fn lex_unrank(len: usize, weight: usize, rank: &BigUint) -> Result<BitString> {
    if len == 0 {
        return Err(Error::EmptyBitString);
    }
    if weight > len {
        return Err(Error::WeightOutOfRange { len, weight });
    }
    let size = class_size(len, weight);
    if rank >= &size {
        return Err(Error::RankOutOfRange {
            len,
            weight,
            rank: rank.to_string(),
            size: size.to_string(),
        });
    }
    if len <= super::WORD_BITS {
        let r = u64::try_from(rank).expect("rank below a 64-bit class size");
        return BitString::from_word(len, word::lex_unrank(len, weight, r));
    }
    let mut rest = rank.clone();
    let mut out = BitString::zeros(len)?;
    let mut c = len;
    for j in (1..=weight).rev() {
        c -= 1;
        loop {
            let b = binomial(c as u64, j as i64);
            if b <= rest {
                rest -= b;
                break;
            }
            c -= 1;
        }
        out.set_from_right(c);
    }
    Ok(out)
}

/// Position (0-based) of `x` in the reverse-lexicographic listing of its weight class.
pub fn revlex_rank(x: &BitString) -> BigUint {
    class_size(x.len(), x.weight()) - 1u32 - lex_rank(x)
}

/// Number of strings after `x` in its weight class under `order`.
pub fn succ_count(x: &BitString, order: Order) -> BigUint {
    match order {
        Order::Lex => class_size(x.len(), x.weight()) - 1u32 - lex_rank(x),
        Order::Revlex => lex_rank(x),
    }
}

/// Number of strings before `x` in its weight class under `order`.
pub fn prec_count(x: &BitString, order: Order) -> BigUint {
    match order {
        Order::Lex => lex_rank(x),
        Order::Revlex => revlex_rank(x),
    }
}
