//! Fixed-length bit strings and fixed-weight rank arithmetic.
//!
//! A [`BitString`] is read left to right: the first character is the most
//! significant position, so lexicographic order on equal-length strings is the
//! numeric order of their values. Strings up to 64 bits live inline in a
//! single machine word; longer strings spill to extra limbs.

mod rank;
pub mod word;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

pub use rank::{lex_rank, lex_unrank, prec_count, revlex_rank, succ_count, Order};

/// Largest length accepted by the word-based enumeration paths.
pub const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    len: usize,
    // limb 0 holds the rightmost 64 characters; unused high bits are zero
    limbs: SmallVec<[u64; 1]>,
}

fn limb_count(len: usize) -> usize {
    len.div_ceil(64).max(1)
}

fn top_mask(len: usize) -> u64 {
    match len % 64 {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

impl BitString {
    /// Packs `word` as a string of `len` bits, `len` in `1..=64`.
    pub fn from_word(len: usize, word: u64) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptyBitString);
        }
        if len > WORD_BITS {
            return Err(Error::DimensionTooLarge {
                what: "word-packed bit strings",
                n: len,
                max: WORD_BITS,
            });
        }
        if len < 64 && word >> len != 0 {
            return Err(Error::WordTooWide { word, len });
        }
        Ok(BitString {
            len,
            limbs: smallvec![word],
        })
    }

    pub fn zeros(len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptyBitString);
        }
        Ok(BitString {
            len,
            limbs: smallvec![0; limb_count(len)],
        })
    }

    pub fn ones(len: usize) -> Result<Self> {
        Ok(Self::zeros(len)?.complement())
    }

    /// Builds a string from bits given left to right.
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Result<Self> {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut s = Self::zeros(bits.len())?;
        for (k, &b) in bits.iter().enumerate() {
            if b {
                s.set_from_right(bits.len() - 1 - k);
            }
        }
        Ok(s)
    }

    fn set_from_right(&mut self, pos: usize) {
        self.limbs[pos / 64] |= 1u64 << (pos % 64);
    }

    fn get_from_right(&self, pos: usize) -> bool {
        self.limbs[pos / 64] >> (pos % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// Always false; kept alongside `len` for API symmetry.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of 1 bits.
    pub fn weight(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    /// The `k`-th character, counting from 1 at the left.
    pub fn bit(&self, k: usize) -> Option<bool> {
        if k == 0 || k > self.len {
            return None;
        }
        Some(self.get_from_right(self.len - k))
    }

    /// The packed value, if the string fits in one word.
    pub fn as_word(&self) -> Option<u64> {
        (self.len <= WORD_BITS).then(|| self.limbs[0])
    }

    /// One's complement: every bit flipped.
    pub fn complement(&self) -> Self {
        let mut limbs: SmallVec<[u64; 1]> = self.limbs.iter().map(|l| !l).collect();
        let last = limbs.len() - 1;
        limbs[last] &= top_mask(self.len);
        BitString {
            len: self.len,
            limbs,
        }
    }

    pub fn hamming_distance(&self, other: &Self) -> Result<usize> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(self
            .limbs
            .iter()
            .zip(&other.limbs)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum())
    }

    /// `b` followed by `self`.
    pub fn prefixed(&self, b: bool) -> Self {
        let mut out = self.clone();
        out.len += 1;
        if out.limbs.len() < limb_count(out.len) {
            out.limbs.push(0);
        }
        if b {
            out.set_from_right(self.len);
        }
        out
    }

    /// `self` followed by `b`.
    pub fn appended(&self, b: bool) -> Self {
        let len = self.len + 1;
        let mut limbs: SmallVec<[u64; 1]> = smallvec![0; limb_count(len)];
        let mut carry = b as u64;
        for (i, l) in self.limbs.iter().enumerate() {
            limbs[i] = (l << 1) | carry;
            carry = l >> 63;
        }
        if carry != 0 {
            limbs[self.limbs.len()] = carry;
        }
        BitString { len, limbs }
    }

    /// Positions of the 1 bits counted from the right (0 = last character), ascending.
    pub fn ones_from_right(&self) -> impl Iterator<Item = usize> + '_ {
        self.limbs.iter().enumerate().flat_map(|(i, &limb)| {
            let mut rest = limb;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + tz)
            })
        })
    }
}

impl Ord for BitString {
    /// Shorter strings first; equal lengths compare lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}

impl PartialOrd for BitString {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (1..=self.len)
            .map(|k| {
                if self.get_from_right(self.len - k) {
                    '1'
                } else {
                    '0'
                }
            })
            .collect();
        f.pad(&s)
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptyBitString);
        }
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidBitString(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bits(bits)
    }
}

impl Serialize for BitString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
