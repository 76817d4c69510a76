//! The canonical labeling `f` of the hypercube.
//!
//! All `2^n` strings are listed as: the odd-weight classes in increasing
//! weight, each in reverse-lexicographic order, followed by the even-weight
//! classes in decreasing weight, each in lexicographic order. A string's label
//! is its 1-based position in that list. Labels `1..=2^(n-1)` are exactly the
//! odd-weight strings.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::binomial::{binomial, small};
use crate::bits::{self, word, BitString};
use crate::error::{Error, Result};

/// Largest `n` whose labels fit the `u64` evaluator.
pub const LABELER_MAX_N: usize = 63;

/// Memory guard for full enumerations of the sequence.
pub const ENUMERATE_MAX_N: usize = 24;

/// Identifier of the canonical scheme.
pub const CANONICAL: &str = "S_n";

/// O(n) evaluator of the canonical labeling on word-packed strings, `1 <= n <= 63`.
#[derive(Debug, Clone)]
pub struct Labeler {
    n: usize,
    half: u64,
    // odd i: label = offset[i] - lex_rank; even i: label = offset[i] + lex_rank
    offset: Vec<u64>,
}

impl Labeler {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyBitString);
        }
        if n > LABELER_MAX_N {
            return Err(Error::DimensionTooLarge {
                what: "the word labeler",
                n,
                max: LABELER_MAX_N,
            });
        }
        let half = 1u64 << (n - 1);
        let mut offset = vec![0u64; n + 1];
        let mut odd_before = 0u64;
        for i in (1..=n).step_by(2) {
            offset[i] = odd_before + small(n, i);
            odd_before += small(n, i);
        }
        let mut even_after = 0u64;
        let top_even = n - n % 2;
        for i in (0..=top_even).rev().step_by(2) {
            offset[i] = half + even_after + 1;
            even_after += small(n, i);
        }
        Ok(Labeler { n, half, offset })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Label of the string packed in `x` (only the low `n` bits may be set).
    #[inline]
    pub fn label(&self, x: u64) -> u64 {
        debug_assert!(x & !word::mask(self.n) == 0);
        let i = x.count_ones() as usize;
        if i % 2 == 1 {
            self.offset[i] - word::lex_rank(x)
        } else {
            self.offset[i] + word::lex_rank(x)
        }
    }

    /// Inverse of [`Labeler::label`].
    pub fn string(&self, label: u64) -> Result<u64> {
        if label == 0 || label > 2 * self.half {
            return Err(Error::LabelOutOfRange {
                label: label.to_string(),
                max: (2 * self.half).to_string(),
            });
        }
        let n = self.n;
        if label <= self.half {
            let i = (1..=n)
                .step_by(2)
                .find(|&i| label <= self.offset[i])
                .expect("odd classes cover 1..=2^(n-1)");
            Ok(word::lex_unrank(n, i, self.offset[i] - label))
        } else {
            let top_even = n - n % 2;
            let i = (0..=top_even)
                .rev()
                .step_by(2)
                .find(|&i| label < self.offset[i] + small(n, i))
                .expect("even classes cover the upper half");
            Ok(word::lex_unrank(n, i, label - self.offset[i]))
        }
    }
}

fn check_len(n: usize, x: &BitString) -> Result<()> {
    if x.len() != n {
        return Err(Error::LengthMismatch {
            left: n,
            right: x.len(),
        });
    }
    Ok(())
}

/// Canonical label of `x`, for any `n`.
pub fn label_of(n: usize, x: &BitString) -> Result<BigUint> {
    check_len(n, x)?;
    if n <= LABELER_MAX_N {
        let w = x.as_word().expect("n <= 63 fits a word");
        return Ok(BigUint::from(label_small(n, w)));
    }
    let i = x.weight();
    let nn = n as u64;
    if i % 2 == 1 {
        let mut before = BigUint::zero();
        for j in (1..i).step_by(2) {
            before += binomial(nn, j as i64);
        }
        Ok(before + bits::revlex_rank(x) + 1u32)
    } else {
        let mut base = BigUint::one() << (n - 1);
        for j in (i + 2..=n).step_by(2) {
            base += binomial(nn, j as i64);
        }
        Ok(base + bits::lex_rank(x) + 1u32)
    }
}

// Single-class variant of the labeler's offset table.
fn label_small(n: usize, x: u64) -> u64 {
    let i = x.count_ones() as usize;
    if i % 2 == 1 {
        let before: u64 = (1..i).step_by(2).map(|j| small(n, j)).sum();
        before + small(n, i) - word::lex_rank(x)
    } else {
        let after: u64 = (i + 2..=n).step_by(2).map(|j| small(n, j)).sum();
        (1u64 << (n - 1)) + after + word::lex_rank(x) + 1
    }
}

/// The string carrying label `v`, `1 <= v <= 2^n`.
pub fn string_of(n: usize, v: &BigUint) -> Result<BitString> {
    if n == 0 {
        return Err(Error::EmptyBitString);
    }
    let total = BigUint::one() << n;
    if v.is_zero() || v > &total {
        return Err(Error::LabelOutOfRange {
            label: v.to_string(),
            max: total.to_string(),
        });
    }
    if n <= LABELER_MAX_N {
        let w = Labeler::new(n)?.string(v.to_u64().expect("label <= 2^63"))?;
        return BitString::from_word(n, w);
    }
    let nn = n as u64;
    let half = BigUint::one() << (n - 1);
    if v <= &half {
        let mut before = BigUint::zero();
        for i in (1..=n).step_by(2) {
            let size = binomial(nn, i as i64);
            if v <= &(&before + &size) {
                // position within R_n^i, then flip to a lex rank
                let revlex = v - &before - 1u32;
                return bits::lex_unrank(n, i, &(size - 1u32 - revlex));
            }
            before += size;
        }
    } else {
        let mut start = half;
        let top_even = n - n % 2;
        for i in (0..=top_even).rev().step_by(2) {
            let size = binomial(nn, i as i64);
            if v <= &(&start + &size) {
                return bits::lex_unrank(n, i, &(v - &start - 1u32));
            }
            start += size;
        }
    }
    unreachable!("weight classes cover 1..=2^n")
}

/// Words of the full sequence in label order; built by bucketing, not by ranking.
pub fn enumerate_sequence_words(n: usize) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::EmptyBitString);
    }
    if n > ENUMERATE_MAX_N {
        return Err(Error::DimensionTooLarge {
            what: "sequence enumeration",
            n,
            max: ENUMERATE_MAX_N,
        });
    }
    let mut classes: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    for x in 0..1u64 << n {
        classes[x.count_ones() as usize].push(x);
    }
    let mut out = Vec::with_capacity(1 << n);
    for i in (1..=n).step_by(2) {
        out.extend(classes[i].iter().rev());
    }
    for i in (0..=n).rev().filter(|i| i % 2 == 0) {
        out.extend(classes[i].iter());
    }
    Ok(out)
}

/// All `2^n` strings in label order; position `p` (1-based) holds the string labeled `p`.
pub fn enumerate_sequence(n: usize) -> Result<Vec<BitString>> {
    enumerate_sequence_words(n)?
        .into_iter()
        .map(|w| BitString::from_word(n, w))
        .collect()
}

/// A bijection from vertex indices `0..N` onto `1..=N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    labels: Vec<u64>,
    description: String,
}

impl Labeling {
    pub fn from_labels(labels: Vec<u64>, description: impl Into<String>) -> Result<Self> {
        let n = labels.len();
        let mut seen = vec![false; n + 1];
        for (v, &l) in labels.iter().enumerate() {
            if l == 0 || l as usize > n {
                return Err(Error::NotBijective {
                    expected: n,
                    reason: format!("vertex {v} has label {l}"),
                });
            }
            if std::mem::replace(&mut seen[l as usize], true) {
                return Err(Error::NotBijective {
                    expected: n,
                    reason: format!("label {l} is used twice"),
                });
            }
        }
        Ok(Labeling {
            labels,
            description: description.into(),
        })
    }

    /// The canonical labeling of `Q_n`; vertex `x` is the packed string `x`.
    pub fn canonical(n: usize) -> Result<Self> {
        if n > ENUMERATE_MAX_N {
            return Err(Error::DimensionTooLarge {
                what: "materialized labelings",
                n,
                max: ENUMERATE_MAX_N,
            });
        }
        let f = Labeler::new(n)?;
        Ok(Labeling {
            labels: (0..1u64 << n).map(|x| f.label(x)).collect(),
            description: CANONICAL.to_string(),
        })
    }

    pub fn identity(vertex_count: usize) -> Self {
        Labeling {
            labels: (1..=vertex_count as u64).collect(),
            description: "identity".to_string(),
        }
    }

    /// Uniformly random bijection.
    pub fn random<R: Rng + ?Sized>(vertex_count: usize, rng: &mut R) -> Self {
        let mut labels: Vec<u64> = (1..=vertex_count as u64).collect();
        labels.shuffle(rng);
        Labeling {
            labels,
            description: "random".to_string(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, vertex: usize) -> u64 {
        self.labels[vertex]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn description(&self) -> &str {
        &self.description
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn label(n: usize, s: &str) -> u64 {
        label_of(n, &bs(s)).unwrap().to_u64().unwrap()
    }

    #[test]
    fn reference_labels() {
        assert_eq!(label(3, "100"), 1);
        assert_eq!(label(3, "111"), 4);
        assert_eq!(label(3, "000"), 8);
        assert_eq!(label(5, "00111"), 15);
        assert_eq!(label(5, "11111"), 16);
        assert_eq!(label(5, "11000"), 31);
        assert_eq!(label(6, "111111"), 33);
        assert_eq!(label(6, "110000"), 63);
        assert_eq!(label(6, "000000"), 64);
    }

    #[test]
    fn reference_inverses() {
        let s = |n, v: u64| string_of(n, &BigUint::from(v)).unwrap().to_string();
        assert_eq!(s(4, 9), "1111");
        assert_eq!(s(4, 16), "0000");
        assert_eq!(s(5, 17), "01111");
    }

    #[test]
    fn small_sequences() {
        let show = |n| {
            enumerate_sequence(n)
                .unwrap()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(
            show(3),
            ["100", "010", "001", "111", "011", "101", "110", "000"]
        );
        assert_eq!(show(1), ["1", "0"]);
        assert_eq!(show(4)[..4], ["1000", "0100", "0010", "0001"]);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            label_of(4, &bs("101")),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            string_of(3, &BigUint::from(9u32)),
            Err(Error::LabelOutOfRange { .. })
        ));
        assert!(string_of(3, &BigUint::zero()).is_err());
        assert!(matches!(
            enumerate_sequence(25),
            Err(Error::DimensionTooLarge { .. })
        ));
    }

    #[test]
    fn labeler_agrees_with_enumeration() {
        for n in 1..=12 {
            let f = Labeler::new(n).unwrap();
            for (p, &x) in enumerate_sequence_words(n).unwrap().iter().enumerate() {
                assert_eq!(f.label(x), p as u64 + 1);
                assert_eq!(f.string(p as u64 + 1).unwrap(), x);
            }
        }
    }

    #[test]
    fn wide_labels_take_the_big_path() {
        // n = 70: the odd/even split still holds and the inverse recovers the string
        let n = 70;
        let x = bs(&format!("1{}", "0".repeat(69)));
        assert_eq!(label_of(n, &x).unwrap(), BigUint::one());
        let zeros = BitString::zeros(n).unwrap();
        assert_eq!(label_of(n, &zeros).unwrap(), BigUint::one() << n);
        let ones = BitString::ones(n).unwrap();
        assert_eq!(
            label_of(n, &ones).unwrap(),
            (BigUint::one() << (n - 1)) + 1u32
        );
        let y = bs(&"10".repeat(35));
        let v = label_of(n, &y).unwrap();
        assert_eq!(string_of(n, &v).unwrap(), y);
    }

    #[test]
    fn big_path_matches_word_path_at_63() {
        // force the big formulas on a 63-bit input by going through 64+ logic manually
        let n = 63;
        let x = bs(&"110".repeat(21));
        let fast = label_of(n, &x).unwrap();
        let i = x.weight();
        let mut before = BigUint::zero();
        for j in (1..i).step_by(2) {
            before += binomial(63, j as i64);
        }
        let slow = if i % 2 == 1 {
            before + bits::revlex_rank(&x) + 1u32
        } else {
            let mut base = BigUint::one() << 62;
            for j in (i + 2..=63).step_by(2) {
                base += binomial(63, j as i64);
            }
            base + bits::lex_rank(&x) + 1u32
        };
        assert_eq!(fast, slow);
    }

    #[test]
    fn labeling_validation() {
        assert!(Labeling::from_labels(vec![2, 1, 3], "t").is_ok());
        assert!(Labeling::from_labels(vec![1, 1, 3], "t").is_err());
        assert!(Labeling::from_labels(vec![0, 1, 2], "t").is_err());
        assert!(Labeling::from_labels(vec![1, 2, 4], "t").is_err());
        let c = Labeling::canonical(3).unwrap();
        assert_eq!(c.labels(), &[8, 3, 2, 5, 1, 6, 7, 4]);
        assert_eq!(c.description(), CANONICAL);
    }

    #[test]
    fn random_labeling_is_a_bijection() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let r = Labeling::random(50, &mut rng);
        assert!(Labeling::from_labels(r.labels().to_vec(), "copy").is_ok());
    }
}
