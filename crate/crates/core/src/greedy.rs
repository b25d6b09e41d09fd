//! Simple induced-matching heuristics with counting guarantees: min-conflict
//! greedy for arbitrary graphs, deepest-edge greedy for forests, and the
//! end-vertex driven procedure for graphs of girth at least 6.

use std::cmp::Reverse;
use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::graph::{edge, Girth, Graph, Vertex};
use crate::matching::Matching;
use crate::oracle::build_conflict_graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GreedyError {
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph contains a cycle")]
    NotAForest,
    #[error("graph has girth {0}; at least 6 is required")]
    GirthTooSmall(usize),
}

/// Repeatedly takes the surviving edge with the fewest surviving conflicts
/// (ties broken by lexicographic edge order) and discards everything it
/// conflicts with.
///
/// Every pick discards at most `2Δ(Δ-1) + 1` edges, so the result has at
/// least `m / (2Δ(Δ-1) + 1)` edges.
pub fn greedy_induced_matching(g: &Graph) -> Result<Matching, GreedyError> {
    if g.edge_count() == 0 {
        return Err(GreedyError::NoEdges);
    }
    let cg = build_conflict_graph(g);
    let m = cg.node_count();
    let mut alive = vec![true; m];
    let mut load: Vec<usize> = (0..m).map(|k| cg.neighbors(k).len()).collect();
    let mut queue: BTreeSet<(usize, usize)> = (0..m).map(|k| (load[k], k)).collect();
    let mut picked = Vec::new();
    while let Some((_, k)) = queue.pop_first() {
        picked.push(cg.node_edge(k));
        alive[k] = false;
        let doomed: Vec<usize> = cg.neighbors(k).iter().copied().filter(|&j| alive[j]).collect();
        for &j in &doomed {
            alive[j] = false;
            queue.remove(&(load[j], j));
        }
        for &j in &doomed {
            for &x in cg.neighbors(j) {
                if alive[x] {
                    queue.remove(&(load[x], x));
                    load[x] -= 1;
                    queue.insert((load[x], x));
                }
            }
        }
    }
    Ok(Matching::new(picked))
}

/// Greedy for forests guaranteeing `m / (2Δ - 1)` edges.
///
/// Each tree is rooted at a vertex of maximum eccentricity (an end of a
/// longest path, found by one sweep). Vertices are then visited deepest
/// first; whenever a vertex still has its parent edge, that edge is taken
/// and every edge touching the closed neighborhoods of its endpoints is
/// discarded.
pub fn forest_greedy_induced_matching(g: &Graph) -> Result<Matching, GreedyError> {
    if g.girth() != Girth::Acyclic {
        return Err(GreedyError::NotAForest);
    }
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut scratch = vec![usize::MAX; n];
    for comp in g.connected_components() {
        // An end of a longest path has maximum eccentricity.
        let root = farthest(g, comp[0], &mut scratch);
        bfs_tree(g, root, &mut parent, &mut depth);
    }
    // `live[v]`: the edge from v to its parent is still available.
    let mut live: Vec<bool> = (0..n).map(|v| parent[v] != usize::MAX).collect();
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| (Reverse(depth[v]), v));
    let mut picked = Vec::new();
    for x in order {
        if !live[x] {
            continue;
        }
        let p = parent[x];
        picked.push(edge(x, p));
        for centre in [x, p] {
            for w in std::iter::once(centre).chain(g.neighbors(centre).iter().copied()) {
                // Kill every edge at w: its parent edge and its child edges.
                live[w] = false;
                for &c in g.neighbors(w) {
                    if parent[c] == w {
                        live[c] = false;
                    }
                }
            }
        }
    }
    Ok(Matching::new(picked))
}

/// Vertex farthest from `source` (smallest id among ties).
fn farthest(g: &Graph, source: Vertex, dist: &mut [usize]) -> Vertex {
    let mut queue = VecDeque::from([source]);
    let mut seen = vec![source];
    dist[source] = 0;
    let mut best = source;
    while let Some(x) = queue.pop_front() {
        if dist[x] > dist[best] || (dist[x] == dist[best] && x < best) {
            best = x;
        }
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                seen.push(y);
                queue.push_back(y);
            }
        }
    }
    for s in seen {
        dist[s] = usize::MAX;
    }
    best
}

fn bfs_tree(g: &Graph, root: Vertex, parent: &mut [usize], depth: &mut [usize]) {
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if depth[y] == usize::MAX {
                depth[y] = depth[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
}

/// Induced matching for graphs of girth at least 6 with at least
/// `(n - i) / (Δ²/4 + Δ + 1)` edges.
///
/// While edges remain: if some vertex has an end-vertex neighbor, take the
/// vertex `v` with the most end-vertex neighbors (smallest id on ties), add
/// the edge to its smallest end-vertex neighbor and delete `N[v]`; otherwise
/// add the lexicographically smallest edge `uv` and delete `N[u] ∪ N[v]`.
/// Vertices left isolated are dropped.
pub fn girth6_induced_matching(g: &Graph) -> Result<Matching, GreedyError> {
    let girth = g.girth();
    if let Girth::Cycle(len) = girth {
        if len < 6 {
            return Err(GreedyError::GirthTooSmall(len));
        }
    }
    let mut state = Girth6State::new(g);
    let mut picked = Vec::new();
    loop {
        if let Some(&(_, v)) = state.hubs.first() {
            let u = state
                .live_neighbors(v)
                .filter(|&w| state.degree[w] == 1)
                .min()
                .expect("hub has an end-vertex neighbor");
            picked.push(edge(u, v));
            let doomed: Vec<Vertex> = std::iter::once(v).chain(state.live_neighbors(v)).collect();
            state.delete(&doomed);
        } else if let Some(u) = state.smallest_non_isolated() {
            let v = state.live_neighbors(u).min().expect("non-isolated vertex");
            picked.push(edge(u, v));
            let mut doomed: Vec<Vertex> = [u, v]
                .into_iter()
                .flat_map(|c| std::iter::once(c).chain(state.live_neighbors(c)))
                .collect();
            doomed.sort_unstable();
            doomed.dedup();
            state.delete(&doomed);
        } else {
            break;
        }
    }
    Ok(Matching::new(picked))
}

struct Girth6State<'g> {
    g: &'g Graph,
    alive: Vec<bool>,
    degree: Vec<usize>,
    /// Number of live end-vertex neighbors.
    ends: Vec<usize>,
    /// `(Reverse(ends[v]), v)` for every live `v` with `ends[v] > 0`.
    hubs: BTreeSet<(Reverse<usize>, Vertex)>,
    cursor: Vertex,
}

impl<'g> Girth6State<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.vertex_count();
        let degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let mut ends = vec![0; n];
        for v in 0..n {
            if degree[v] == 1 {
                ends[g.neighbors(v)[0]] += 1;
            }
        }
        let hubs = (0..n).filter(|&v| ends[v] > 0).map(|v| (Reverse(ends[v]), v)).collect();
        Girth6State {
            g,
            alive: vec![true; n],
            degree,
            ends,
            hubs,
            cursor: 0,
        }
    }

    fn live_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.g.neighbors(v).iter().copied().filter(|&w| self.alive[w])
    }

    fn smallest_non_isolated(&mut self) -> Option<Vertex> {
        while self.cursor < self.alive.len() {
            let c = self.cursor;
            if self.alive[c] && self.degree[c] > 0 {
                return Some(c);
            }
            self.cursor += 1;
        }
        None
    }

    fn set_ends(&mut self, v: Vertex, value: usize) {
        if self.ends[v] > 0 {
            self.hubs.remove(&(Reverse(self.ends[v]), v));
        }
        self.ends[v] = value;
        if value > 0 && self.alive[v] {
            self.hubs.insert((Reverse(value), v));
        }
    }

    fn delete(&mut self, doomed: &[Vertex]) {
        let g = self.g;
        let mut touched = Vec::new();
        for &x in doomed {
            if self.degree[x] == 1 {
                // x stops being an end-vertex of its surviving neighbor.
                let anchor = self.live_neighbors(x).next();
                if let Some(w) = anchor {
                    self.set_ends(w, self.ends[w] - 1);
                }
            }
            self.set_ends(x, 0);
            self.alive[x] = false;
        }
        for &x in doomed {
            for &y in g.neighbors(x) {
                if self.alive[y] {
                    self.degree[y] -= 1;
                    touched.push(y);
                }
            }
        }
        touched.sort_unstable();
        touched.dedup();
        for &y in &touched {
            match self.degree[y] {
                0 => {
                    self.alive[y] = false;
                    self.set_ends(y, 0);
                }
                1 => {
                    let w = self.live_neighbors(y).next();
                    let w = w.expect("degree one");
                    self.set_ends(w, self.ends[w] + 1);
                }
                _ => {}
            }
        }
    }
}
