//! Simple undirected graphs with dense vertex ids and the structural queries
//! the rest of the crate leans on: degrees, components, girth and
//! recognition of the subdivided `K_{3,3}`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Dense vertex identifier, `0..vertex_count`.
pub type Vertex = usize;

/// An unordered edge, always stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

/// Normalizes a vertex pair so that the smaller id comes first.
#[inline]
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("vertex set is not a connected component")]
    NotAComponent,
}

/// A finite simple undirected graph.
///
/// Adjacency lists are sorted and the edge list is kept in lexicographic
/// order, so two graphs built from the same edge set compare equal no matter
/// how the edges were supplied.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph on `n` vertices. Loops, repeated pairs (in either
    /// orientation) and ids `>= n` are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, order: n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            list.push(edge(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        let g = Graph {
            adjacency,
            edges: list,
        };
        debug_assert!(g.check_invariants());
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Index of `e` in [`Graph::edges`], if present.
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&edge(e.0, e.1)).ok()
    }

    /// Maximum degree, 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Minimum degree, 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Number of isolated vertices, `i(G)`.
    pub fn isolated_count(&self) -> usize {
        self.adjacency.iter().filter(|a| a.is_empty()).count()
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    /// Every vertex has degree exactly 3 (and there is at least one vertex).
    pub fn is_cubic(&self) -> bool {
        !self.adjacency.is_empty() && self.adjacency.iter().all(|a| a.len() == 3)
    }

    /// Symmetric, loop-free, duplicate-free adjacency whose degree sum is
    /// twice the edge count and agrees with the edge list.
    pub fn check_invariants(&self) -> bool {
        let n = self.vertex_count();
        let mut degree_sum = 0;
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            degree_sum += nbrs.len();
            if nbrs.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &v in nbrs {
                if v >= n || v == u || self.adjacency[v].binary_search(&u).is_err() {
                    return false;
                }
            }
        }
        degree_sum == 2 * self.edges.len()
            && self.edges.windows(2).all(|w| w[0] < w[1])
            && self.edges.iter().all(|&(u, v)| u < v && self.has_edge(u, v))
    }

    /// Connected components ordered by their smallest vertex; each component
    /// is listed in ascending id order.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            stack.push(root);
            let mut comp = Vec::new();
            while let Some(x) = stack.pop() {
                comp.push(x);
                for &y in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Length of a shortest cycle, by breadth-first search from every vertex.
    pub fn girth(&self) -> Girth {
        let n = self.vertex_count();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        let mut touched = Vec::new();
        for root in 0..n {
            dist[root] = 0;
            touched.push(root);
            queue.push_back(root);
            'bfs: while let Some(x) = queue.pop_front() {
                // Any cycle closed from here on is at least 2*dist[x] long.
                if 2 * dist[x] >= best {
                    break;
                }
                for &y in &self.adjacency[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        touched.push(y);
                        queue.push_back(y);
                    } else if parent[x] != y {
                        best = best.min(dist[x] + dist[y] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            for &t in &touched {
                dist[t] = usize::MAX;
                parent[t] = usize::MAX;
            }
            touched.clear();
            queue.clear();
            if best == 3 {
                break;
            }
        }
        if best == usize::MAX {
            Girth::Acyclic
        } else {
            Girth::Cycle(best)
        }
    }

    /// Subgraph induced by `vertices`; vertex `vertices[k]` becomes `k`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut index = std::collections::HashMap::with_capacity(vertices.len());
        for (k, &v) in vertices.iter().enumerate() {
            index.insert(v, k);
        }
        let mut edges = Vec::new();
        for (k, &v) in vertices.iter().enumerate() {
            for w in &self.adjacency[v] {
                if let Some(&j) = index.get(w) {
                    if k < j {
                        edges.push((k, j));
                    }
                }
            }
        }
        Graph::from_edges(vertices.len(), edges).expect("induced subgraph of a simple graph")
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph, GraphError> {
        assert_eq!(perm.len(), self.vertex_count(), "permutation length");
        Graph::from_edges(
            self.vertex_count(),
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        Graph::from_edges(
            shift + other.vertex_count(),
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift))),
        )
        .expect("disjoint union of simple graphs")
    }

    /// Whether `component` (any order) spans a connected component of `self`
    /// that is isomorphic to `K_{3,3}^+`.
    pub fn is_k33plus(&self, component: &[Vertex]) -> Result<bool, GraphError> {
        let mut comp = component.to_vec();
        comp.sort_unstable();
        if !self.is_component(&comp) {
            return Err(GraphError::NotAComponent);
        }
        Ok(self.component_is_k33plus(&comp))
    }

    /// Structural test assuming `comp` is already known to be a component.
    pub(crate) fn component_is_k33plus(&self, comp: &[Vertex]) -> bool {
        if comp.len() != 7 {
            return false;
        }
        let degree_sum: usize = comp.iter().map(|&v| self.degree(v)).sum();
        if degree_sum != 20 {
            return false;
        }
        let low: Vec<Vertex> = comp.iter().copied().filter(|&v| self.degree(v) != 3).collect();
        if low.len() != 1 || self.degree(low[0]) != 2 {
            return false;
        }
        let u = low[0];
        let (a1, b1) = (self.adjacency[u][0], self.adjacency[u][1]);
        if self.has_edge(a1, b1) {
            return false;
        }
        // a1 sits on side A, so its other neighbors are B-side; likewise for b1.
        let side_b: Vec<Vertex> = self.adjacency[a1].iter().copied().filter(|&x| x != u).collect();
        let side_a: Vec<Vertex> = self.adjacency[b1].iter().copied().filter(|&x| x != u).collect();
        let mut six = vec![a1, b1];
        six.extend(&side_a);
        six.extend(&side_b);
        six.sort_unstable();
        six.dedup();
        if six.len() != 6 || six.contains(&u) {
            return false;
        }
        side_a
            .iter()
            .all(|&a| side_b.iter().all(|&b| self.has_edge(a, b)))
    }

    /// Number of components isomorphic to `K_{3,3}^+`, `n_{3,3}^+(G)`.
    pub fn k33plus_component_count(&self) -> usize {
        self.connected_components()
            .iter()
            .filter(|c| self.component_is_k33plus(c))
            .count()
    }

    fn is_component(&self, sorted: &[Vertex]) -> bool {
        let n = self.vertex_count();
        if sorted.is_empty() || sorted.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        if sorted.iter().any(|&v| v >= n) {
            return false;
        }
        let inside = |v: Vertex| sorted.binary_search(&v).is_ok();
        // Closed under adjacency and connected.
        if sorted
            .iter()
            .any(|&v| self.adjacency[v].iter().any(|&w| !inside(w)))
        {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![sorted[0]];
        seen[sorted[0]] = true;
        let mut count = 0;
        while let Some(x) = stack.pop() {
            count += 1;
            for &y in &self.adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        count == sorted.len()
    }
}

/// Length of a shortest cycle, or `Acyclic` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Girth {
    Cycle(usize),
    Acyclic,
}

impl Girth {
    /// True when every cycle has length at least `k` (vacuous for forests).
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Cycle(g) => g >= k,
            Girth::Acyclic => true,
        }
    }

    pub fn value(self) -> Option<usize> {
        match self {
            Girth::Cycle(g) => Some(g),
            Girth::Acyclic => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Cycle(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Cycle(g) => s.serialize_u64(*g as u64),
            Girth::Acyclic => s.serialize_str("acyclic"),
        }
    }
}
