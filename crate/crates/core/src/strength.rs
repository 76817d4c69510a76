//! Strength of a labeling: the largest label sum over the edges of a graph.
//!
//! [`strength_of_labeling`] works for any graph. For the canonical labeling of
//! `Q_n` there are two evaluators: [`strf_hypercube_edges`] walks every edge,
//! while [`strf_hypercube_scan`] only visits the `2^(n-1)` edges `{w1, w0}`
//! that differ in the last position, which always include a maximum edge.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::binomial::{binomial, small};
use crate::bits::{self, word, BitString, Order};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{Labeler, Labeling};

pub const EDGE_SCAN_MAX_N: usize = 24;
pub const PAIR_SCAN_MAX_N: usize = 34;

const CHUNK: u64 = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    EdgeScan,
    PairScan,
    Solver,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrengthResult {
    pub value: BigUint,
    /// Endpoints of a maximum edge. For hypercube evaluators the first
    /// endpoint is the odd-weight string.
    pub witness: (u64, u64),
    /// Set when the vertices are `dim`-bit strings.
    pub dim: Option<usize>,
    pub method: Method,
}

impl StrengthResult {
    pub fn witness_strings(&self) -> Option<(BitString, BitString)> {
        let dim = self.dim?;
        Some((
            BitString::from_word(dim, self.witness.0).ok()?,
            BitString::from_word(dim, self.witness.1).ok()?,
        ))
    }
}

/// Best edge so far: larger sum wins, then the lexicographically smaller key.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Best {
    sum: u64,
    key: (u64, u64),
}

impl Best {
    fn better(self, other: Best) -> Best {
        match self.sum.cmp(&other.sum) {
            Ordering::Greater => self,
            Ordering::Less => other,
            Ordering::Equal if self.key <= other.key => self,
            Ordering::Equal => other,
        }
    }
}

fn pick(a: Option<Best>, b: Option<Best>) -> Option<Best> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.better(b)),
        (a, None) => a,
        (None, b) => b,
    }
}

/// Exact `max f(u) + f(v)` over the edges of `g`.
pub fn strength_of_labeling(g: &Graph, labels: &Labeling) -> Result<StrengthResult> {
    if labels.len() != g.vertex_count() {
        return Err(Error::NotBijective {
            expected: g.vertex_count(),
            reason: format!("labeling covers {} vertices", labels.len()),
        });
    }
    let best = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (u.min(v) as u64, u.max(v) as u64);
            Best {
                sum: labels.label(u) + labels.label(v),
                key: (a, b),
            }
        })
        .reduce(Best::better)
        .ok_or_else(|| Error::InvalidGraph("strength is undefined without edges".into()))?;
    let dim = g.hypercube_dim();
    let (a, b) = best.key;
    let witness = match dim {
        Some(_) if b.count_ones() % 2 == 1 => (b, a),
        _ => (a, b),
    };
    Ok(StrengthResult {
        value: BigUint::from(best.sum),
        witness,
        dim,
        method: Method::EdgeScan,
    })
}

fn check_dim(n: usize, max: usize, what: &'static str) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfScope { what, n, min: 1 });
    }
    if n > max {
        return Err(Error::DimensionTooLarge { what, n, max });
    }
    Ok(())
}

/// `str_f(Q_n)` by brute force over all `n * 2^(n-1)` edges.
pub fn strf_hypercube_edges(n: usize) -> Result<StrengthResult> {
    check_dim(n, EDGE_SCAN_MAX_N, "the edge scan")?;
    let f = Labeler::new(n)?;
    let labels: Vec<u64> = (0..1u64 << n).into_par_iter().map(|x| f.label(x)).collect();
    let best = (0..1u64 << n)
        .into_par_iter()
        .filter_map(|x| {
            (0..n)
                .filter(|b| x >> b & 1 == 0)
                .map(|b| {
                    let y = x | 1 << b;
                    Best {
                        sum: labels[x as usize] + labels[y as usize],
                        key: (x, y),
                    }
                })
                .reduce(Best::better)
        })
        .reduce_with(Best::better)
        .expect("Q_n has edges");
    let (x, y) = best.key;
    let witness = if y.count_ones() % 2 == 1 {
        (y, x)
    } else {
        (x, y)
    };
    Ok(StrengthResult {
        value: BigUint::from(best.sum),
        witness,
        dim: Some(n),
        method: Method::EdgeScan,
    })
}

/// Maximum of `f(w1) + f(w0)` over the `(n-1)`-bit strings `w` of one weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassMax {
    /// Weight of `w`; `w1` has weight one more.
    pub w_weight: usize,
    pub value: u64,
    /// Lexicographically smallest maximizer, packed.
    pub w: u64,
}

fn scan_class(f: &Labeler, m: usize, j: usize) -> ClassMax {
    let size = small(m, j);
    let chunks = size.div_ceil(CHUNK);
    let best = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let end = (start + CHUNK).min(size);
            let mut w = word::lex_unrank(m, j, start);
            let mut best: Option<Best> = None;
            for r in start..end {
                let sum = f.label(w << 1 | 1) + f.label(w << 1);
                best = pick(best, Some(Best { sum, key: (w, 0) }));
                if r + 1 < end {
                    w = word::next_same_weight(m, w).expect("rank below class size");
                }
            }
            best
        })
        .reduce(|| None, pick)
        .expect("class is nonempty");
    ClassMax {
        w_weight: j,
        value: best.sum,
        w: best.key.0,
    }
}

/// Per-weight maxima of `f(w1) + f(w0)` for `Q_n`, one entry per weight of `w`.
pub fn strf_scan_by_class(n: usize) -> Result<Vec<ClassMax>> {
    check_dim(n, PAIR_SCAN_MAX_N, "the pair scan")?;
    let f = Labeler::new(n)?;
    let m = n - 1;
    Ok((0..=m).map(|j| scan_class(&f, m, j)).collect())
}

/// `str_f(Q_n)` as the maximum of `f(w1) + f(w0)` over all `(n-1)`-bit `w`.
pub fn strf_hypercube_scan(n: usize) -> Result<StrengthResult> {
    let classes = strf_scan_by_class(n)?;
    let best = classes
        .iter()
        .map(|c| Best {
            sum: c.value,
            key: (c.w, 0),
        })
        .reduce(Best::better)
        .expect("at least one class");
    let w = best.key.0;
    let (w1, w0) = (w << 1 | 1, w << 1);
    // the odd-weight endpoint goes first
    let witness = if w1.count_ones() % 2 == 1 {
        (w1, w0)
    } else {
        (w0, w1)
    };
    Ok(StrengthResult {
        value: BigUint::from(best.sum),
        witness,
        dim: Some(n),
        method: Method::PairScan,
    })
}

/// Closed form of `f(w1) + f(w0)` for an `(n-1)`-bit `w` whose `w1` has odd weight `i`:
/// `2^n + C(n-1, i) - |Succ(w1, R_n^i)| + |Prec(w0, S_n^(i-1))| + 1`.
pub fn pair_sum(n: usize, w: &BitString) -> Result<BigUint> {
    if w.len() + 1 != n {
        return Err(Error::LengthMismatch {
            left: n - 1,
            right: w.len(),
        });
    }
    let w1 = w.appended(true);
    let w0 = w.appended(false);
    let i = w1.weight();
    if i % 2 == 0 {
        return Err(Error::ParityViolation(w1.to_string()));
    }
    Ok((BigUint::one() << n)
        + binomial(n as u64 - 1, i as i64)
        + bits::prec_count(&w0, Order::Lex)
        + 1u32
        - bits::succ_count(&w1, Order::Revlex))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;
    use crate::labeling::label_of;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn value(r: &StrengthResult) -> u64 {
        u64::try_from(&r.value).unwrap()
    }

    #[test]
    fn q1_and_single_edge() {
        let q1 = graph::hypercube(1).unwrap();
        let r = strength_of_labeling(&q1, &Labeling::canonical(1).unwrap()).unwrap();
        assert_eq!(value(&r), 3);
        let p2 = graph::path(2).unwrap();
        let r = strength_of_labeling(&p2, &Labeling::identity(2)).unwrap();
        assert_eq!(value(&r), 3);
        assert_eq!(r.witness, (0, 1));
    }

    #[test]
    fn q3_witness() {
        let q3 = graph::hypercube(3).unwrap();
        let r = strength_of_labeling(&q3, &Labeling::canonical(3).unwrap()).unwrap();
        assert_eq!(value(&r), 11);
        let (x, y) = r.witness_strings().unwrap();
        assert_eq!((x.to_string(), y.to_string()), ("001".into(), "000".into()));
    }

    #[test]
    fn mismatched_or_edgeless() {
        let q2 = graph::hypercube(2).unwrap();
        assert!(strength_of_labeling(&q2, &Labeling::identity(3)).is_err());
        let single = Graph::new(1, vec![]).unwrap();
        assert!(strength_of_labeling(&single, &Labeling::identity(1)).is_err());
    }

    #[test]
    fn small_hypercube_values() {
        for (n, v) in [(1, 3), (2, 6), (3, 11), (4, 21), (5, 40)] {
            assert_eq!(value(&strf_hypercube_edges(n).unwrap()), v, "edges n={n}");
            assert_eq!(value(&strf_hypercube_scan(n).unwrap()), v, "scan n={n}");
        }
    }

    #[test]
    fn scan_witness_is_smallest_w() {
        let r = strf_hypercube_scan(5).unwrap();
        let (x, y) = r.witness_strings().unwrap();
        assert_eq!(
            (x.to_string(), y.to_string()),
            ("01011".into(), "01010".into())
        );
        let r = strf_hypercube_scan(3).unwrap();
        let (x, y) = r.witness_strings().unwrap();
        assert_eq!((x.to_string(), y.to_string()), ("001".into(), "000".into()));
    }

    #[test]
    fn n6_scan_below_known_bound() {
        assert!(value(&strf_hypercube_scan(6).unwrap()) <= 78);
    }

    #[test]
    fn pair_sum_examples() {
        assert_eq!(pair_sum(3, &bs("00")).unwrap(), BigUint::from(11u32));
        assert_eq!(pair_sum(4, &bs("110")).unwrap(), BigUint::from(21u32));
        assert_eq!(pair_sum(5, &bs("0110")).unwrap(), BigUint::from(40u32));
        assert!(matches!(
            pair_sum(4, &bs("100")),
            Err(Error::ParityViolation(_))
        ));
        assert!(matches!(
            pair_sum(4, &bs("10")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn pair_sum_wide() {
        let n = 90;
        let w = bs(&"1100".repeat(22)).appended(false);
        let direct =
            label_of(n, &w.appended(true)).unwrap() + label_of(n, &w.appended(false)).unwrap();
        assert_eq!(pair_sum(n, &w).unwrap(), direct);
    }

    #[test]
    fn limits() {
        assert!(matches!(
            strf_hypercube_edges(25),
            Err(Error::DimensionTooLarge { .. })
        ));
        assert!(matches!(
            strf_hypercube_scan(35),
            Err(Error::DimensionTooLarge { .. })
        ));
    }
}
