//! Rank arithmetic on strings packed into a `u64` (length at most 64).
//!
//! These are the hot-path counterparts of the [`BitString`](super::BitString)
//! functions. The rank of a weight-`k` string whose 1 bits sit at positions
//! `c_1 < c_2 < ... < c_k` (counted from the right) is `sum C(c_j, j)`.

use crate::binomial::small;

/// Lexicographic rank of `word` among strings of the same length and weight.
/// The length does not enter the formula.
#[inline]
pub fn lex_rank(word: u64) -> u64 {
    let mut rest = word;
    let mut j = 1;
    let mut rank = 0;
    while rest != 0 {
        let c = rest.trailing_zeros() as usize;
        rank += small(c, j);
        rest &= rest - 1;
        j += 1;
    }
    rank
}

/// Inverse of [`lex_rank`]: the `rank`-th (0-based) weight-`weight` string of
/// length `len` in lexicographic order.
///
/// Requires `len <= 64`, `weight <= len` and `rank < C(len, weight)`.
pub fn lex_unrank(len: usize, weight: usize, mut rank: u64) -> u64 {
    debug_assert!(len <= 64 && weight <= len);
    debug_assert!(rank < small(len, weight));
    let mut word = 0u64;
    let mut c = len;
    for j in (1..=weight).rev() {
        // largest c' < c with C(c', j) <= rank; c' >= j - 1 always qualifies
        c -= 1;
        while small(c, j) > rank {
            c -= 1;
        }
        rank -= small(c, j);
        word |= 1u64 << c;
    }
    word
}

/// Reverse-lexicographic rank of `word` among strings of length `len`.
#[inline]
pub fn revlex_rank(len: usize, word: u64) -> u64 {
    small(len, word.count_ones() as usize) - 1 - lex_rank(word)
}

/// Next string with the same weight in lexicographic order, if it still fits
/// in `len` bits.
#[inline]
pub fn next_same_weight(len: usize, word: u64) -> Option<u64> {
    if word == 0 {
        return None;
    }
    let lowest = word & word.wrapping_neg();
    let ripple = word.checked_add(lowest)?;
    let next = ripple | (((word ^ ripple) >> 2) >> lowest.trailing_zeros());
    (len == 64 || next >> len == 0).then_some(next)
}

/// Mask of the low `len` bits.
#[inline]
pub fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lex_class(len: usize, weight: u32) -> Vec<u64> {
        (0..1u64 << len)
            .filter(|w| w.count_ones() == weight)
            .collect()
    }

    #[test]
    fn rank_matches_sorted_enumeration() {
        for len in 1..=10 {
            for weight in 0..=len as u32 {
                for (r, &w) in lex_class(len, weight).iter().enumerate() {
                    assert_eq!(lex_rank(w), r as u64);
                    assert_eq!(lex_unrank(len, weight as usize, r as u64), w);
                }
            }
        }
    }

    #[test]
    fn gosper_walks_the_class() {
        for len in 1..=9 {
            for weight in 1..=len as u32 {
                let class = lex_class(len, weight);
                let mut walked = vec![class[0]];
                while let Some(n) = next_same_weight(len, *walked.last().unwrap()) {
                    walked.push(n);
                }
                assert_eq!(walked, class);
            }
        }
    }

    #[test]
    fn full_width_words() {
        let top = u64::MAX << 32;
        assert_eq!(lex_rank(top), small(64, 32) - 1);
        assert_eq!(lex_unrank(64, 32, small(64, 32) - 1), top);
        assert_eq!(next_same_weight(64, top), None);
        assert_eq!(revlex_rank(64, top), 0);
    }
}
