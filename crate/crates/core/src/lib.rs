//! Strength of hypercube labelings.
//!
//! The strength of a vertex labeling `f: V -> {1..|V|}` is the largest
//! `f(u) + f(v)` over the edges `uv`; the strength of a graph is the least
//! strength over all labelings. This crate provides a canonical labeling of
//! the hypercube `Q_n` with O(n) evaluation in both directions, exact
//! strength evaluators, an exact branch-and-bound solver for small graphs,
//! and the closed-form bound tables for `str(Q_n)`.

pub mod binomial;
pub mod bits;
pub mod bounds;
pub mod cli;
mod decimal;
pub mod error;
pub mod graph;
pub mod labeling;
pub mod render;
pub mod solver;
pub mod strength;
pub mod verify;

pub use bits::{BitString, Order};
pub use error::{Error, Result};
pub use graph::{build_graph, Graph, GraphKind};
pub use labeling::{label_of, string_of, Labeler, Labeling};
pub use solver::{feasible, min_strength, Feasibility, SolveBudget, SolveOutcome, Status};
pub use strength::{
    pair_sum, strength_of_labeling, strf_hypercube_edges, strf_hypercube_scan, StrengthResult,
};
