use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Builders understood by [`build_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Hypercube,
    Path,
    Cycle,
}

/// Automorphism structure the exact solver may exploit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    /// `Q_n` with vertex `x` the packed string `x`.
    Hypercube { dim: usize },
    /// `C_N` with vertices in cyclic order.
    Cycle,
}

/// Finite simple graph on vertices `0..vertex_count`.
#[derive(Debug, Clone)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    symmetry: Option<Symmetry>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            if adjacency[u].contains(&v) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Graph {
            vertex_count,
            edges,
            adjacency,
            symmetry: None,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn symmetry(&self) -> Option<Symmetry> {
        self.symmetry
    }

    /// Hypercube dimension, if this graph came from the hypercube builder.
    pub fn hypercube_dim(&self) -> Option<usize> {
        match self.symmetry {
            Some(Symmetry::Hypercube { dim }) => Some(dim),
            _ => None,
        }
    }
}

/// Largest hypercube the builder will materialize.
pub const HYPERCUBE_MAX_DIM: usize = 24;

pub fn hypercube(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::OutOfScope {
            what: "the hypercube builder",
            n,
            min: 1,
        });
    }
    if n > HYPERCUBE_MAX_DIM {
        return Err(Error::DimensionTooLarge {
            what: "the hypercube builder",
            n,
            max: HYPERCUBE_MAX_DIM,
        });
    }
    let edges = (0..1usize << n)
        .flat_map(|x| {
            (0..n)
                .map(move |b| (x, x | 1 << b))
                .filter(move |&(x, y)| x != y)
        })
        .collect();
    let mut g = Graph::new(1 << n, edges)?;
    g.symmetry = Some(Symmetry::Hypercube { dim: n });
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|v| (v - 1, v)).collect())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::OutOfScope {
            what: "the cycle builder",
            n,
            min: 3,
        });
    }
    let mut g = Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)).collect())?;
    g.symmetry = Some(Symmetry::Cycle);
    Ok(g)
}

pub fn build_graph(kind: GraphKind, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidGraph("n must be at least 1".into()));
    }
    match kind {
        GraphKind::Hypercube => hypercube(n),
        GraphKind::Path => path(n),
        GraphKind::Cycle => cycle(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let q3 = build_graph(GraphKind::Hypercube, 3).unwrap();
        assert_eq!((q3.vertex_count(), q3.edges().len()), (8, 12));
        let q1 = build_graph(GraphKind::Hypercube, 1).unwrap();
        assert_eq!((q1.vertex_count(), q1.edges().len()), (2, 1));
        let p2 = build_graph(GraphKind::Path, 2).unwrap();
        assert_eq!((p2.vertex_count(), p2.edges().len()), (2, 1));
        let c5 = build_graph(GraphKind::Cycle, 5).unwrap();
        assert_eq!((c5.vertex_count(), c5.edges().len()), (5, 5));
    }

    #[test]
    fn hypercube_edges_are_single_bit_flips() {
        let q4 = hypercube(4).unwrap();
        assert_eq!(q4.edges().len(), 4 * 8);
        for &(u, v) in q4.edges() {
            assert_eq!((u ^ v).count_ones(), 1);
        }
        assert!((0..16).all(|v| q4.degree(v) == 4));
    }

    #[test]
    fn invalid_graphs() {
        assert!(build_graph(GraphKind::Cycle, 2).is_err());
        assert!(build_graph(GraphKind::Path, 0).is_err());
        assert!(Graph::new(3, vec![(0, 0)]).is_err());
        assert!(Graph::new(3, vec![(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, vec![(0, 3)]).is_err());
    }
}
