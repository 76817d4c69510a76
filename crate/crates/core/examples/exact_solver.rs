//! Certify the minimum strength of small graphs by exhaustive search.
//!
//! cargo run --release --example exact_solver

use std::time::Duration;

use hypercube_strength::graph::{build_graph, GraphKind};
use hypercube_strength::solver::feasible;
use hypercube_strength::{min_strength, Feasibility, SolveBudget};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let budget = SolveBudget::time(Duration::from_secs(60));
    for (kind, n) in [
        (GraphKind::Hypercube, 1),
        (GraphKind::Hypercube, 2),
        (GraphKind::Hypercube, 3),
        (GraphKind::Hypercube, 4),
        (GraphKind::Hypercube, 5),
        (GraphKind::Path, 7),
        (GraphKind::Cycle, 8),
    ] {
        let g = build_graph(kind, n)?;
        let out = min_strength(&g, &budget)?;
        println!(
            "{kind:?} {n}: {:?} {} after {} nodes",
            out.status, out.best_value, out.nodes_explored
        );
    }

    // a single threshold query: no labeling of Q_3 has strength 10
    let q3 = build_graph(GraphKind::Hypercube, 3)?;
    match feasible(&q3, 10, &budget) {
        Feasibility::No => println!("Q_3 with strength <= 10: impossible"),
        other => println!("Q_3 with strength <= 10: {other:?}"),
    }
    Ok(())
}
