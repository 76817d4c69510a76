//! Exact minimum strength by threshold search.
//!
//! [`feasible`] decides whether some labeling keeps every edge sum at most
//! `s`. Labels are placed from the largest down: a vertex labeled `v` caps all
//! of its neighbors at `s - v`. Once `2v - 1 <= s` no two of the remaining
//! labels can conflict, so the rest is a matching of labels `1..=v` to vertex
//! caps, which is settled exactly by a counting (Hall) check. The same check
//! prunes every interior node.
//!
//! On hypercubes the largest label goes to vertex `0...0`, and each later
//! choice is restricted to orbit representatives of the coordinate
//! permutations that fix every vertex labeled so far.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Symmetry};
use crate::labeling::{Labeling, ENUMERATE_MAX_N};
use crate::strength::strength_of_labeling;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveBudget {
    time_limit: Option<Duration>,
    node_limit: Option<u64>,
}

impl SolveBudget {
    pub fn new(time_limit: Option<Duration>, node_limit: Option<u64>) -> Result<Self> {
        if time_limit.is_none() && node_limit.is_none() {
            return Err(Error::InvalidBudget(
                "set a time limit, a node limit, or both".into(),
            ));
        }
        Ok(SolveBudget {
            time_limit,
            node_limit,
        })
    }

    pub fn time(limit: Duration) -> Self {
        SolveBudget {
            time_limit: Some(limit),
            node_limit: None,
        }
    }

    pub fn nodes(limit: u64) -> Self {
        SolveBudget {
            time_limit: None,
            node_limit: Some(limit),
        }
    }

    pub fn time_limit(&self) -> Option<Duration> {
        self.time_limit
    }

    pub fn node_limit(&self) -> Option<u64> {
        self.node_limit
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Optimal,
    FeasibleOnly,
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Yes(Labeling),
    No,
    Timeout,
}

#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub status: Status,
    pub best_value: u64,
    pub best_labeling: Labeling,
    pub nodes_explored: u64,
}

/// Shared accounting across the feasibility calls of one solve.
struct Meter {
    deadline: Option<Instant>,
    node_limit: Option<u64>,
    nodes: u64,
    exhausted: bool,
}

impl Meter {
    fn new(budget: &SolveBudget) -> Self {
        Meter {
            deadline: budget.time_limit.map(|d| Instant::now() + d),
            node_limit: budget.node_limit,
            nodes: 0,
            exhausted: false,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.node_limit.is_some_and(|l| self.nodes > l) {
            self.exhausted = true;
        }
        if self.nodes % 1024 == 0 && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.exhausted = true;
        }
        !self.exhausted
    }
}

struct Search<'a> {
    g: &'a Graph,
    s: u64,
    label: Vec<u64>,
    cap: Vec<u64>,
    trail: Vec<(usize, u64)>,
    // coordinate cells fixed by the placed vertices (hypercubes only)
    cells: Vec<u64>,
    counts: Vec<u32>,
    meter: &'a mut Meter,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, s: u64, meter: &'a mut Meter) -> Self {
        let n = g.vertex_count();
        let cells = match g.symmetry() {
            Some(Symmetry::Hypercube { dim }) => vec![(1u64 << dim) - 1],
            _ => Vec::new(),
        };
        Search {
            g,
            s,
            label: vec![0; n],
            cap: vec![n as u64; n],
            trail: Vec::new(),
            cells,
            counts: vec![0; n + 1],
            meter,
        }
    }

    /// Labels `1..=v` can be matched to the unlabeled vertices under their caps.
    fn hall_ok(&mut self, v: u64) -> bool {
        let v = v as usize;
        self.counts[..=v].iter_mut().for_each(|c| *c = 0);
        for u in 0..self.label.len() {
            if self.label[u] == 0 {
                self.counts[(self.cap[u] as usize).min(v)] += 1;
            }
        }
        // at most t - 1 vertices may have cap < t
        let mut below = 0u32;
        for t in 1..=v {
            below += self.counts[t - 1];
            if below as usize > t - 1 {
                return false;
            }
        }
        true
    }

    /// Final phase: hand out `1..=v` in increasing cap order.
    fn complete(&mut self, v: u64) -> bool {
        let mut rest: Vec<usize> = (0..self.label.len())
            .filter(|&u| self.label[u] == 0)
            .collect();
        debug_assert_eq!(rest.len() as u64, v);
        rest.sort_by_key(|&u| (self.cap[u], u));
        if rest.iter().zip(1..).any(|(&u, l)| self.cap[u] < l) {
            return false;
        }
        for (&u, l) in rest.iter().zip(1..) {
            self.label[u] = l;
        }
        true
    }

    fn candidates(&self, v: u64) -> Vec<usize> {
        let top = self.label.len() as u64;
        let open = |u: &usize| self.label[*u] == 0 && self.cap[*u] >= v;
        match self.g.symmetry() {
            Some(Symmetry::Hypercube { .. }) if self.cells.iter().any(|c| c.count_ones() > 1) => {
                if v == top {
                    return vec![0];
                }
                (0..self.label.len())
                    .filter(open)
                    .filter(|&u| self.is_orbit_rep(u as u64))
                    .collect()
            }
            Some(Symmetry::Cycle) if v == top => vec![0],
            Some(Symmetry::Cycle) if v + 1 == top => {
                let half = self.label.len() / 2;
                (1..=half).filter(open).collect()
            }
            _ => (0..self.label.len()).filter(open).collect(),
        }
    }

    // Within every cell, the 1 bits of x occupy the lowest coordinates.
    fn is_orbit_rep(&self, x: u64) -> bool {
        self.cells.iter().all(|&cell| {
            let k = (x & cell).count_ones();
            let mut lowest = 0u64;
            let mut rest = cell;
            for _ in 0..k {
                lowest |= rest & rest.wrapping_neg();
                rest &= rest - 1;
            }
            x & cell == lowest
        })
    }

    fn refine(&self, x: u64) -> Vec<u64> {
        self.cells
            .iter()
            .flat_map(|&c| [c & x, c & !x])
            .filter(|&c| c != 0)
            .collect()
    }

    fn place(&mut self, u: usize, v: u64) -> usize {
        let mark = self.trail.len();
        self.label[u] = v;
        let limit = self.s.saturating_sub(v);
        for &w in self.g.neighbors(u) {
            if self.label[w] == 0 && self.cap[w] > limit {
                self.trail.push((w, self.cap[w]));
                self.cap[w] = limit;
            }
        }
        mark
    }

    fn unplace(&mut self, u: usize, mark: usize) {
        self.label[u] = 0;
        while self.trail.len() > mark {
            let (w, c) = self.trail.pop().expect("trail above mark");
            self.cap[w] = c;
        }
    }

    /// Place label `v` and everything below it.
    fn descend(&mut self, v: u64) -> bool {
        if !self.meter.tick() {
            return false;
        }
        if v == 0 {
            return true;
        }
        if 2 * v - 1 <= self.s {
            return self.hall_ok(v) && self.complete(v);
        }
        if !self.hall_ok(v) {
            return false;
        }
        for u in self.candidates(v) {
            let mark = self.place(u, v);
            let saved = if self.cells.is_empty() {
                None
            } else {
                let refined = self.refine(u as u64);
                Some(std::mem::replace(&mut self.cells, refined))
            };
            let found = self.descend(v - 1);
            if let Some(cells) = saved {
                self.cells = cells;
            }
            if found {
                return true;
            }
            self.unplace(u, mark);
            if self.meter.exhausted {
                return false;
            }
        }
        false
    }
}

fn decide(g: &Graph, s: u64, meter: &mut Meter) -> Feasibility {
    let n = g.vertex_count() as u64;
    let mut search = Search::new(g, s, meter);
    if search.descend(n) {
        let labels = std::mem::take(&mut search.label);
        let labeling = Labeling::from_labels(labels, format!("solver(s={s})"))
            .expect("search assigns every label once");
        Feasibility::Yes(labeling)
    } else if meter.exhausted {
        Feasibility::Timeout
    } else {
        Feasibility::No
    }
}

/// Is there a labeling of `g` with every edge sum at most `s`?
pub fn feasible(g: &Graph, s: u64, budget: &SolveBudget) -> Feasibility {
    decide(g, s, &mut Meter::new(budget))
}

/// Certified floor on the strength: the largest label on a non-isolated
/// vertex is at least the number of such vertices, and one of its neighbors
/// carries a label at least the minimum degree.
pub fn degree_floor(g: &Graph) -> u64 {
    let degrees: Vec<usize> = (0..g.vertex_count())
        .map(|v| g.degree(v))
        .filter(|&d| d > 0)
        .collect();
    match degrees.iter().min() {
        Some(&min) => (degrees.len() + min) as u64,
        None => 0,
    }
}

/// Default starting labeling: the canonical labeling on hypercubes, identity otherwise.
pub fn default_seed(g: &Graph) -> Labeling {
    match g.hypercube_dim() {
        Some(dim) if dim <= ENUMERATE_MAX_N => Labeling::canonical(dim).expect("dim within guard"),
        _ => Labeling::identity(g.vertex_count()),
    }
}

/// Minimum strength of `g`, searching downward from a seed labeling.
pub fn min_strength(g: &Graph, budget: &SolveBudget) -> Result<SolveOutcome> {
    min_strength_from(g, default_seed(g), budget)
}

pub fn min_strength_from(g: &Graph, seed: Labeling, budget: &SolveBudget) -> Result<SolveOutcome> {
    let mut meter = Meter::new(budget);
    let mut best_labeling = seed;
    if g.edges().is_empty() {
        return Ok(SolveOutcome {
            status: Status::Optimal,
            best_value: 0,
            best_labeling,
            nodes_explored: 0,
        });
    }
    let value = |l: &Labeling| -> Result<u64> {
        let r = strength_of_labeling(g, l)?;
        Ok(u64::try_from(&r.value).expect("small graph"))
    };
    let mut best_value = value(&best_labeling)?;
    let mut improved = false;
    let status = loop {
        // an edge needs two distinct labels, so no sum is below 3
        if best_value <= 3 {
            break Status::Optimal;
        }
        match decide(g, best_value - 1, &mut meter) {
            Feasibility::Yes(l) => {
                let v = value(&l)?;
                debug_assert!(v < best_value);
                best_value = v;
                best_labeling = l;
                improved = true;
            }
            Feasibility::No => break Status::Optimal,
            Feasibility::Timeout if improved => break Status::FeasibleOnly,
            Feasibility::Timeout => break Status::Timeout,
        }
    };
    Ok(SolveOutcome {
        status,
        best_value,
        best_labeling,
        nodes_explored: meter.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{self, build_graph, GraphKind};

    fn generous() -> SolveBudget {
        SolveBudget::time(Duration::from_secs(60))
    }

    fn yes(g: &Graph, s: u64) -> bool {
        match feasible(g, s, &generous()) {
            Feasibility::Yes(l) => {
                let r = strength_of_labeling(g, &l).unwrap();
                assert!(r.value <= s.into(), "unsound labeling at s = {s}");
                true
            }
            Feasibility::No => false,
            Feasibility::Timeout => panic!("timeout"),
        }
    }

    #[test]
    fn hypercube_thresholds() {
        let q1 = graph::hypercube(1).unwrap();
        assert!(yes(&q1, 3));
        let q2 = graph::hypercube(2).unwrap();
        assert!(!yes(&q2, 5));
        assert!(yes(&q2, 6));
        let q3 = graph::hypercube(3).unwrap();
        assert!(!yes(&q3, 10));
        assert!(yes(&q3, 11));
    }

    #[test]
    fn small_optima() {
        for (n, v) in [(1, 3), (2, 6), (3, 11)] {
            let out = min_strength(&graph::hypercube(n).unwrap(), &generous()).unwrap();
            assert_eq!((out.status, out.best_value), (Status::Optimal, v), "Q_{n}");
        }
        let p3 = build_graph(GraphKind::Path, 3).unwrap();
        let out = min_strength(&p3, &generous()).unwrap();
        assert_eq!((out.status, out.best_value), (Status::Optimal, 4));
    }

    // str(P_n) = n + 1 and str(C_n) = n + 2 (n >= 3) follow from placing the
    // largest labels with small neighbors; brute force over n! confirms small cases.
    #[test]
    fn paths_and_cycles_match_brute_force() {
        for n in 2..=7 {
            for kind in [GraphKind::Path, GraphKind::Cycle] {
                if kind == GraphKind::Cycle && n < 3 {
                    continue;
                }
                let g = build_graph(kind, n).unwrap();
                let out = min_strength(&g, &generous()).unwrap();
                assert_eq!(out.status, Status::Optimal);
                assert_eq!(out.best_value, brute_force(&g), "{kind:?} {n}");
            }
        }
    }

    fn brute_force(g: &Graph) -> u64 {
        fn rec(g: &Graph, labels: &mut Vec<u64>, used: &mut Vec<bool>, best: &mut u64) {
            let n = g.vertex_count();
            if labels.len() == n {
                let s = g
                    .edges()
                    .iter()
                    .map(|&(u, v)| labels[u] + labels[v])
                    .max()
                    .unwrap_or(0);
                *best = (*best).min(s);
                return;
            }
            for l in 1..=n {
                if !used[l] {
                    used[l] = true;
                    labels.push(l as u64);
                    rec(g, labels, used, best);
                    labels.pop();
                    used[l] = false;
                }
            }
        }
        let mut best = u64::MAX;
        rec(
            g,
            &mut Vec::new(),
            &mut vec![false; g.vertex_count() + 1],
            &mut best,
        );
        best
    }

    #[test]
    fn monotone_in_threshold() {
        let q3 = graph::hypercube(3).unwrap();
        for s in 11..=16 {
            assert!(yes(&q3, s));
        }
    }

    #[test]
    fn node_budget_times_out() {
        let q3 = graph::hypercube(3).unwrap();
        assert_eq!(
            feasible(&q3, 10, &SolveBudget::nodes(1)),
            Feasibility::Timeout
        );
        let out = min_strength(&q3, &SolveBudget::nodes(1)).unwrap();
        assert_eq!(out.status, Status::Timeout);
        assert_eq!(out.best_value, 11);
    }

    #[test]
    fn budget_needs_a_limit() {
        assert!(SolveBudget::new(None, None).is_err());
        assert!(SolveBudget::new(None, Some(5)).is_ok());
    }

    #[test]
    fn floors() {
        assert_eq!(degree_floor(&graph::hypercube(3).unwrap()), 11);
        assert_eq!(degree_floor(&graph::path(3).unwrap()), 4);
        assert_eq!(degree_floor(&Graph::new(4, vec![(0, 1)]).unwrap()), 3);
    }

    #[test]
    fn orbit_representatives_on_q3() {
        let q3 = graph::hypercube(3).unwrap();
        let mut meter = Meter::new(&generous());
        let search = Search::new(&q3, 100, &mut meter);
        let reps: Vec<u64> = (0..8).filter(|&x| search.is_orbit_rep(x)).collect();
        assert_eq!(reps, [0, 1, 3, 7]);
    }
}
