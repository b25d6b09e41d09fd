//! Edge sets claimed to be induced matchings, and the check that they are.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{edge, Edge, Graph, Vertex};

/// A set of edges of some reference graph, normalized and sorted.
///
/// Being an *induced* matching is not assumed; see
/// [`verify_induced_matching`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn new<I: IntoIterator<Item = (Vertex, Vertex)>>(edges: I) -> Self {
        let mut edges: Vec<Edge> = edges.into_iter().map(|(u, v)| edge(u, v)).collect();
        edges.sort_unstable();
        edges.dedup();
        Matching { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

impl FromIterator<Edge> for Matching {
    fn from_iter<T: IntoIterator<Item = Edge>>(iter: T) -> Self {
        Matching::new(iter)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("{0}-{1} is not an edge of the graph")]
    NotAnEdge(Vertex, Vertex),
}

/// Outcome of [`verify_induced_matching`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    /// Endpoints of two distinct matching edges that coincide (`x == y`) or
    /// are adjacent.
    Invalid { witness: (Vertex, Vertex) },
}

impl Verdict {
    pub fn is_valid(self) -> bool {
        self == Verdict::Valid
    }
}

/// Checks that any two vertices incident with distinct edges of `m` are
/// distinct and nonadjacent in `g`.
///
/// Runs in `O(|m| * Δ log Δ)`: each endpoint's neighborhood is scanned for
/// vertices owned by another matching edge.
pub fn verify_induced_matching(g: &Graph, m: &Matching) -> Result<Verdict, MatchingError> {
    for &(u, v) in m.edges() {
        if !g.has_edge(u, v) {
            return Err(MatchingError::NotAnEdge(u, v));
        }
    }
    let mut owner: std::collections::HashMap<Vertex, usize> =
        std::collections::HashMap::with_capacity(2 * m.len());
    for (k, &(u, v)) in m.edges().iter().enumerate() {
        for x in [u, v] {
            if owner.insert(x, k).is_some() {
                return Ok(Verdict::Invalid { witness: (x, x) });
            }
        }
    }
    for (k, &(u, v)) in m.edges().iter().enumerate() {
        for x in [u, v] {
            for &y in g.neighbors(x) {
                if matches!(owner.get(&y), Some(&j) if j != k) {
                    return Ok(Verdict::Invalid {
                        witness: (x.min(y), x.max(y)),
                    });
                }
            }
        }
    }
    Ok(Verdict::Valid)
}
