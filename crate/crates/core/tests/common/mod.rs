//! Helpers shared by the integration tests: an exhaustive strong matching
//! search written directly against the definition, and the stored corpus.

#![allow(dead_code)]

use strongmatch::{parse_graph, Format, Graph};

/// Distance-at-least-2 test for two edges, from the definition: the four
/// endpoints are pairwise distinct across edges and pairwise nonadjacent.
pub fn compatible(g: &Graph, e: (usize, usize), f: (usize, usize)) -> bool {
    for x in [e.0, e.1] {
        for y in [f.0, f.1] {
            if x == y || g.has_edge(x, y) {
                return false;
            }
        }
    }
    true
}

/// Maximum induced matching by enumerating every induced matching
/// (backtracking over edges in order). Returns the size and one maximizer.
pub fn exhaustive_strong_matching(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    fn go(g: &Graph, k: usize, chosen: &mut Vec<(usize, usize)>, best: &mut Vec<(usize, usize)>) {
        let edges = g.edges();
        if chosen.len() + (edges.len() - k) <= best.len() {
            return;
        }
        if k == edges.len() {
            *best = chosen.clone();
            return;
        }
        let e = edges[k];
        if chosen.iter().all(|&f| compatible(g, e, f)) {
            chosen.push(e);
            go(g, k + 1, chosen, best);
            chosen.pop();
        }
        go(g, k + 1, chosen, best);
    }
    let mut best = Vec::new();
    go(g, 0, &mut Vec::new(), &mut best);
    (best.len(), best)
}

/// Whether `edges` is an induced matching of `g`, straight from the
/// definition.
pub fn is_induced_matching(g: &Graph, edges: &[(usize, usize)]) -> bool {
    edges.iter().all(|&(u, v)| g.has_edge(u, v))
        && edges
            .iter()
            .enumerate()
            .all(|(i, &e)| edges[i + 1..].iter().all(|&f| compatible(g, e, f)))
}

pub struct CorpusEntry {
    pub header: String,
    pub text: String,
    pub graph: Graph,
}

pub const CORPUS: &str = include_str!("../data/corpus.txt");

/// Graphs of the stored corpus: blocks separated by blank lines, each
/// starting with a `# id=... family=...` comment.
pub fn corpus() -> Vec<CorpusEntry> {
    CORPUS
        .split("\n\n")
        .filter(|block| !block.trim().is_empty())
        .map(|block| {
            let text = format!("{}\n", block.trim_end());
            let header = text.lines().next().unwrap_or_default().to_string();
            let graph = parse_graph(&text, Format::EdgeList).unwrap_or_else(|e| panic!("{header}: {e}"));
            CorpusEntry { header, text, graph }
        })
        .collect()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}
