//! Exact strong matching number for small graphs.
//!
//! Induced matchings of `G` are exactly the independent sets of the conflict
//! graph on `E(G)`, where two edges conflict when they share an endpoint or
//! an endpoint of one is adjacent to an endpoint of the other. The solver is
//! a branch-and-bound maximum independent set search over 64-bit masks, so
//! it is capped at 64 edges.

use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::matching::Matching;

/// Largest edge count the exact solver accepts.
pub const MAX_ORACLE_EDGES: usize = 64;

/// Default branch-and-bound node budget.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {0} edges; the exact solver handles at most {MAX_ORACLE_EDGES}")]
    TooManyEdges(usize),
    #[error("node budget of {0} exhausted before the search finished")]
    BudgetExhausted(u64),
}

/// Graph on the edges of `G`; node `k` is `G.edges()[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictGraph {
    nodes: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

impl ConflictGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node_edge(&self, k: usize) -> Edge {
        self.nodes[k]
    }

    pub fn neighbors(&self, k: usize) -> &[usize] {
        &self.adjacency[k]
    }

    pub fn conflict(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Whether no two of `nodes` conflict.
    pub fn is_independent(&self, nodes: &[usize]) -> bool {
        nodes
            .iter()
            .enumerate()
            .all(|(i, &a)| nodes[i + 1..].iter().all(|&b| a != b && !self.conflict(a, b)))
    }

    fn masks(&self) -> Vec<u64> {
        debug_assert!(self.node_count() <= 64);
        self.adjacency
            .iter()
            .map(|nbrs| nbrs.iter().fold(0u64, |m, &k| m | (1 << k)))
            .collect()
    }
}

pub fn build_conflict_graph(g: &Graph) -> ConflictGraph {
    let nodes = g.edges().to_vec();
    let mut adjacency = Vec::with_capacity(nodes.len());
    let mut reach = Vec::new();
    for (k, &(u, v)) in nodes.iter().enumerate() {
        // Edges touching N[u] ∪ N[v] are exactly those in conflict with uv.
        reach.clear();
        for x in [u, v] {
            reach.push(x);
            reach.extend_from_slice(g.neighbors(x));
        }
        reach.sort_unstable();
        reach.dedup();
        let mut list = Vec::new();
        for &x in &reach {
            for &y in g.neighbors(x) {
                let j = g.edge_index((x, y)).expect("adjacent pair is an edge");
                if j != k {
                    list.push(j);
                }
            }
        }
        list.sort_unstable();
        list.dedup();
        adjacency.push(list);
    }
    ConflictGraph { nodes, adjacency }
}

/// Result of an exact solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSolution {
    pub value: usize,
    pub witness: Matching,
    /// Branch-and-bound nodes visited.
    pub nodes: u64,
}

/// Computes the strong matching number of `g` exactly.
///
/// Branches on a node of maximum degree among the remaining candidates
/// (include, then exclude) and prunes with a greedy clique cover of the
/// candidates. Node order is the lexicographic edge order, so the witness is
/// deterministic.
pub fn exact_strong_matching_number(g: &Graph, node_budget: u64) -> Result<ExactSolution, OracleError> {
    let m = g.edge_count();
    if m > MAX_ORACLE_EDGES {
        return Err(OracleError::TooManyEdges(m));
    }
    let cg = build_conflict_graph(g);
    let mut search = Search {
        adj: cg.masks(),
        budget: node_budget,
        nodes: 0,
        best: 0,
        best_set: 0,
        current: 0,
    };
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    search.run(all, 0)?;
    let witness = Matching::new(
        (0..m)
            .filter(|&k| search.best_set >> k & 1 == 1)
            .map(|k| cg.node_edge(k)),
    );
    Ok(ExactSolution {
        value: search.best,
        witness,
        nodes: search.nodes,
    })
}

struct Search {
    adj: Vec<u64>,
    budget: u64,
    nodes: u64,
    best: usize,
    best_set: u64,
    current: u64,
}

impl Search {
    fn run(&mut self, cand: u64, size: usize) -> Result<(), OracleError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OracleError::BudgetExhausted(self.budget));
        }
        if cand == 0 {
            if size > self.best {
                self.best = size;
                self.best_set = self.current;
            }
            return Ok(());
        }
        if size + self.clique_cover_bound(cand) <= self.best {
            return Ok(());
        }
        let (v, degree) = self.max_degree_node(cand);
        if degree == 0 {
            // Remaining candidates are pairwise compatible.
            let total = size + cand.count_ones() as usize;
            if total > self.best {
                self.best = total;
                self.best_set = self.current | cand;
            }
            return Ok(());
        }
        let bit = 1u64 << v;
        self.current |= bit;
        self.run(cand & !self.adj[v] & !bit, size + 1)?;
        self.current &= !bit;
        self.run(cand & !bit, size)
    }

    fn max_degree_node(&self, cand: u64) -> (usize, u32) {
        let mut best = (usize::MAX, 0u32);
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (self.adj[v] & cand).count_ones();
            if best.0 == usize::MAX || d > best.1 {
                best = (v, d);
            }
        }
        best
    }

    /// Number of cliques in a greedy cover of `cand`; each clique holds at
    /// most one node of any independent set.
    fn clique_cover_bound(&self, cand: u64) -> usize {
        let mut rest = cand;
        let mut cliques = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let mut clique = 1u64 << v;
            let mut pool = rest & self.adj[v];
            while pool != 0 {
                let w = pool.trailing_zeros() as usize;
                clique |= 1 << w;
                pool &= self.adj[w];
            }
            rest &= !clique;
            cliques += 1;
        }
        cliques
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::matching::verify_induced_matching;
    use rand::{Rng, SeedableRng};

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// Largest induced matching over all 2^m edge subsets.
    fn by_subsets(g: &Graph) -> usize {
        let m = g.edge_count();
        assert!(m <= 16);
        let mut best = 0;
        for mask in 0u32..(1 << m) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let chosen = Matching::new((0..m).filter(|&k| mask >> k & 1 == 1).map(|k| g.edges()[k]));
            if chosen.len() == size && verify_induced_matching(g, &chosen).unwrap().is_valid() {
                best = size;
            }
        }
        best
    }

    #[test]
    fn conflict_graph_examples() {
        let cg = build_conflict_graph(&path(4));
        assert_eq!(cg.node_count(), 3);
        assert!(cg.conflict(0, 1) && cg.conflict(1, 2) && cg.conflict(0, 2));

        let single = build_conflict_graph(&path(2));
        assert_eq!((single.node_count(), single.neighbors(0).len()), (1, 0));

        let far = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        let cg = build_conflict_graph(&far);
        assert!(!cg.conflict(0, 1));
    }

    #[test]
    fn exact_examples() {
        let sol = exact_strong_matching_number(&path(5), DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(sol.value, 2);
        let k33p = generators::k33plus();
        assert_eq!(exact_strong_matching_number(&k33p, DEFAULT_NODE_BUDGET).unwrap().value, 1);
        assert_eq!(by_subsets(&k33p), 1);
        let petersen = generators::petersen();
        let sol = exact_strong_matching_number(&petersen, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(sol.value, 3);
        assert_eq!(by_subsets(&petersen), 3);
        assert!(verify_induced_matching(&petersen, &sol.witness).unwrap().is_valid());
        let ext = generators::extremal_cubic();
        assert_eq!(exact_strong_matching_number(&ext, DEFAULT_NODE_BUDGET).unwrap().value, 5);
        assert_eq!(exact_strong_matching_number(&Graph::empty(3), 10).unwrap().value, 0);
    }

    #[test]
    fn errors() {
        let big = generators::random_cubic(50, 1).unwrap();
        assert_eq!(
            exact_strong_matching_number(&big, DEFAULT_NODE_BUDGET),
            Err(OracleError::TooManyEdges(75))
        );
        let ext = generators::extremal_cubic();
        assert_eq!(
            exact_strong_matching_number(&ext, 3),
            Err(OracleError::BudgetExhausted(3))
        );
    }

    fn random_graph(rng: &mut impl Rng, n: usize, max_m: usize) -> Graph {
        let mut es = Vec::new();
        for _ in 0..4 * max_m {
            if es.len() == max_m {
                break;
            }
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let e = crate::graph::edge(u, v);
            if u != v && !es.contains(&e) {
                es.push(e);
            }
        }
        Graph::from_edges(n, es).unwrap()
    }

    #[test]
    fn matches_subset_enumeration_and_survives_relabeling() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(14);
        for _ in 0..150 {
            let n = rng.gen_range(2..12);
            let g = random_graph(&mut rng, n, 14);
            let sol = exact_strong_matching_number(&g, DEFAULT_NODE_BUDGET).unwrap();
            assert_eq!(sol.value, by_subsets(&g), "{:?}", g.edges());
            assert_eq!(sol.witness.len(), sol.value);
            assert!(verify_induced_matching(&g, &sol.witness).unwrap().is_valid());
            for _ in 0..10 {
                let mut perm: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    perm.swap(i, rng.gen_range(0..=i));
                }
                let h = g.relabel(&perm).unwrap();
                assert_eq!(exact_strong_matching_number(&h, DEFAULT_NODE_BUDGET).unwrap().value, sol.value);
            }
        }
    }

    #[test]
    fn independent_sets_are_induced_matchings() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let g = random_graph(&mut rng, 10, 14);
            let cg = build_conflict_graph(&g);
            let m = g.edge_count();
            let picks: Vec<usize> = (0..m).filter(|_| rng.gen_bool(0.3)).collect();
            let matching = Matching::new(picks.iter().map(|&k| cg.node_edge(k)));
            assert_eq!(
                cg.is_independent(&picks),
                verify_induced_matching(&g, &matching).unwrap().is_valid()
            );
        }
    }
}
