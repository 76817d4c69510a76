//! Binomial coefficients.
//!
//! Two tables back every rank computation in the crate: a `u64` table up to
//! `C(64, k)` (built at compile time, used by the packed word paths) and an
//! arbitrary-precision [`BinomialTable`] for longer strings and bound
//! arithmetic.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Largest `n` covered by the machine-word table. `C(64, 32)` still fits in a `u64`.
pub const SMALL_MAX_N: usize = 64;

/// Default size of the shared arbitrary-precision table.
pub const DEFAULT_MAX_N: usize = 128;

const fn build_small() -> [[u64; SMALL_MAX_N + 1]; SMALL_MAX_N + 1] {
    let mut t = [[0u64; SMALL_MAX_N + 1]; SMALL_MAX_N + 1];
    let mut a = 0;
    while a <= SMALL_MAX_N {
        t[a][0] = 1;
        let mut b = 1;
        while b <= a {
            t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
            b += 1;
        }
        a += 1;
    }
    t
}

static SMALL: [[u64; SMALL_MAX_N + 1]; SMALL_MAX_N + 1] = build_small();

/// `C(a, b)` for `a <= 64`; zero when `b > a`.
#[inline]
pub fn small(a: usize, b: usize) -> u64 {
    if b > a {
        0
    } else {
        SMALL[a][b]
    }
}

/// Pascal triangle with arbitrary-precision entries `C(a, b)` for `0 <= b <= a <= max_n`.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigUint>>,
}

impl BinomialTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
        for a in 0..=max_n {
            let mut row = Vec::with_capacity(a + 1);
            row.push(BigUint::one());
            for b in 1..a {
                let prev = &rows[a - 1];
                row.push(&prev[b - 1] + &prev[b]);
            }
            if a > 0 {
                row.push(BigUint::one());
            }
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(a, b)`, or `None` when `a` is beyond the table.
    pub fn get(&self, a: usize, b: i64) -> Option<BigUint> {
        let row = self.rows.get(a)?;
        if b < 0 || b as usize > a {
            return Some(BigUint::zero());
        }
        Some(row[b as usize].clone())
    }

    /// Borrowing accessor for in-range `0 <= b <= a <= max_n`.
    pub fn entry(&self, a: usize, b: usize) -> &BigUint {
        &self.rows[a][b]
    }
}

/// Shared table of size [`DEFAULT_MAX_N`], built on first use.
pub fn shared_table() -> &'static BinomialTable {
    static TABLE: OnceLock<BinomialTable> = OnceLock::new();
    TABLE.get_or_init(|| BinomialTable::new(DEFAULT_MAX_N))
}

/// `C(a, b)` with the convention `C(a, b) = 0` for `b < 0` or `b > a`.
pub fn binomial(a: u64, b: i64) -> BigUint {
    if b < 0 || b as u64 > a {
        return BigUint::zero();
    }
    if let Some(v) = usize::try_from(a)
        .ok()
        .and_then(|a| shared_table().get(a, b))
    {
        return v;
    }
    // Beyond the table: multiplicative formula, exact at every step.
    let k = (b as u64).min(a - b as u64);
    let mut acc = BigUint::one();
    for j in 1..=k {
        acc *= a - k + j;
        acc /= j;
    }
    acc
}

/// `C(a, ceil(a / 2))`, the central (largest) entry of row `a`.
pub fn central(a: u64) -> BigUint {
    binomial(a, a.div_ceil(2) as i64)
}
