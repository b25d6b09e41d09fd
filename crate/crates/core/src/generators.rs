//! Extremal constructions and seeded random families.
//!
//! All randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64(seed)`, drawing with `Rng::gen_range` / `SliceRandom::shuffle`
//! from `rand` 0.8. The output for a given parameter tuple is therefore fixed
//! across platforms.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{edge, Edge, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("degree {0} must be even and at least 4")]
    BadEvenDegree(usize),
    #[error("degree {0} must be odd and at least 3")]
    BadOddDegree(usize),
    #[error("a cubic graph needs an even order of at least 4, got {0}")]
    BadCubicOrder(usize),
    #[error("{target_m} edges exceed the subcubic maximum for {n} vertices")]
    TooManyEdges { n: usize, target_m: usize },
    #[error("no simple pairing found after {0} attempts")]
    RejectionLimit(usize),
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn build(n: usize, edges: Vec<Edge>) -> Graph {
    Graph::from_edges(n, edges).expect("generator emits simple graphs")
}

/// `K_{3,3}` with the edge `a1 b1` subdivided by vertex 6.
///
/// Vertices 0..3 are `a1 a2 a3`, 3..6 are `b1 b2 b3`.
pub fn k33plus() -> Graph {
    let mut es = Vec::with_capacity(10);
    for a in 0..3 {
        for b in 3..6 {
            if (a, b) != (0, 3) {
                es.push((a, b));
            }
        }
    }
    es.extend([(0, 6), (3, 6)]);
    build(7, es)
}

/// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10.
pub fn petersen() -> Graph {
    let mut es = Vec::with_capacity(15);
    for i in 0..5 {
        es.push((i, (i + 1) % 5));
        es.push((i, i + 5));
        es.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, es)
}

/// Cubic graph of order 30 and size 45 with strong matching number 5.
///
/// Four copies of [`k33plus`] on vertices `7c..7c+7`, plus hubs 28 and 29.
/// Hub 28 is joined to the subdivision vertices of copies 0 and 1, hub 29 to
/// those of copies 2 and 3, and the hubs are adjacent.
pub fn extremal_cubic() -> Graph {
    let base = k33plus();
    let mut es = Vec::with_capacity(45);
    for c in 0..4 {
        es.extend(base.edges().iter().map(|&(u, v)| (u + 7 * c, v + 7 * c)));
    }
    let (u, v) = (28, 29);
    es.extend([(u, 6), (u, 13), (v, 20), (v, 27), (u, v)]);
    build(30, es)
}

/// Cycle `C_5` with every vertex replaced by an independent set of size
/// `delta / 2`; consecutive sets are completely joined.
pub fn c5_blowup(delta: usize) -> Result<Graph, GenError> {
    if delta < 4 || delta % 2 != 0 {
        return Err(GenError::BadEvenDegree(delta));
    }
    Ok(cycle_blowup(&[delta / 2; 5]).0)
}

/// Blow-up of `C_5` with the given class sizes in cyclic order. Returns the
/// graph and the vertex range of each class.
fn cycle_blowup(sizes: &[usize; 5]) -> (Graph, [std::ops::Range<usize>; 5]) {
    let mut start = 0;
    let classes = sizes.map(|s| {
        let r = start..start + s;
        start += s;
        r
    });
    let mut es = Vec::new();
    for i in 0..5 {
        for x in classes[i].clone() {
            for y in classes[(i + 1) % 5].clone() {
                es.push(edge(x, y));
            }
        }
    }
    (build(start, es), classes)
}

/// `delta`-regular graph of order `10 * delta` with strong matching number 5,
/// for odd `delta = 2r + 1`.
///
/// `G0` is the `C_5` blow-up with class sizes `r+1, r+1, r, r, r`; its fourth
/// class (`r` vertices) has degree `delta - 1`. Copy `c` of `G0` occupies ids
/// `c * (5r + 2)..`, the hubs are the last two ids. The first hub is joined
/// to the deficient class of copies 0 and 1, the second to copies 2 and 3,
/// and the hubs are adjacent. [`odd_regular_extremal_layout`] describes the
/// labeling.
pub fn odd_regular_extremal(delta: usize) -> Result<Graph, GenError> {
    if delta < 3 || delta % 2 == 0 {
        return Err(GenError::BadOddDegree(delta));
    }
    let r = (delta - 1) / 2;
    let (g0, classes) = cycle_blowup(&[r + 1, r + 1, r, r, r]);
    let s = g0.vertex_count();
    let (u, v) = (4 * s, 4 * s + 1);
    let mut es = Vec::with_capacity(5 * delta);
    for c in 0..4 {
        let shift = c * s;
        es.extend(g0.edges().iter().map(|&(x, y)| (x + shift, y + shift)));
        let hub = if c < 2 { u } else { v };
        es.extend(classes[3].clone().map(|x| (x + shift, hub)));
    }
    es.push((u, v));
    Ok(build(4 * s + 2, es))
}

/// Comment lines recording which vertices the hubs of
/// [`odd_regular_extremal`] attach to.
pub fn odd_regular_extremal_layout(delta: usize) -> Result<Vec<String>, GenError> {
    if delta < 3 || delta % 2 == 0 {
        return Err(GenError::BadOddDegree(delta));
    }
    let r = (delta - 1) / 2;
    let s = 5 * r + 2;
    let deficient = 3 * r + 2..4 * r + 2;
    let mut lines = vec![format!(
        "odd-regular extremal: delta={delta} r={r}; copy c occupies c*{s}..(c+1)*{s}; class sizes r+1,r+1,r,r,r"
    )];
    for c in 0..4 {
        let hub = if c < 2 { 4 * s } else { 4 * s + 1 };
        lines.push(format!(
            "hub {hub} <- copy {c} vertices {}..{}",
            deficient.start + c * s,
            deficient.end + c * s
        ));
    }
    lines.push(format!("hubs {} and {} adjacent", 4 * s, 4 * s + 1));
    Ok(lines)
}

/// Random graph with maximum degree at most `cap` and at most `target_m`
/// edges, by rejection-sampled uniform vertex pairs.
pub fn random_bounded_degree(n: usize, cap: usize, target_m: usize, seed: u64) -> Result<Graph, GenError> {
    if target_m > n * cap / 2 {
        return Err(GenError::TooManyEdges { n, target_m });
    }
    let mut rng = rng(seed);
    let mut adjacency: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut es = Vec::with_capacity(target_m);
    if n >= 2 {
        let attempts = 20 * target_m + 100;
        for _ in 0..attempts {
            if es.len() == target_m {
                break;
            }
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v || adjacency[u].len() >= cap || adjacency[v].len() >= cap || adjacency[u].contains(&v) {
                continue;
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            es.push(edge(u, v));
        }
    }
    Ok(build(n, es))
}

/// Random subcubic graph with at most `target_m` edges.
pub fn random_subcubic(n: usize, target_m: usize, seed: u64) -> Result<Graph, GenError> {
    random_bounded_degree(n, 3, target_m, seed)
}

const PAIRING_ATTEMPTS: usize = 10_000;

/// Random cubic graph from the configuration model: shuffle the `3n` half
/// edges, pair them consecutively, and reject pairings with loops or
/// parallel edges.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 4 || n % 2 != 0 {
        return Err(GenError::BadCubicOrder(n));
    }
    let mut rng = rng(seed);
    let mut points: Vec<Vertex> = (0..3 * n).map(|p| p / 3).collect();
    'attempt: for _ in 0..PAIRING_ATTEMPTS {
        points.shuffle(&mut rng);
        let mut es: Vec<Edge> = points.chunks_exact(2).map(|p| edge(p[0], p[1])).collect();
        if es.iter().any(|&(u, v)| u == v) {
            continue;
        }
        es.sort_unstable();
        for w in es.windows(2) {
            if w[0] == w[1] {
                continue 'attempt;
            }
        }
        return Ok(build(n, es));
    }
    Err(GenError::RejectionLimit(PAIRING_ATTEMPTS))
}

/// Random graph of girth at least 6 and maximum degree at most `max_degree`.
///
/// Makes `10 * n * max_degree` attempts; a uniform pair is inserted when both
/// endpoints are below the cap and currently at distance at least 5.
pub fn random_girth6(n: usize, max_degree: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut adjacency: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut es = Vec::new();
    let mut dist = vec![usize::MAX; n];
    if n >= 2 {
        for _ in 0..10 * n * max_degree {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v || adjacency[u].len() >= max_degree || adjacency[v].len() >= max_degree {
                continue;
            }
            if within_distance(&adjacency, u, v, 4, &mut dist) {
                continue;
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            es.push(edge(u, v));
        }
    }
    build(n, es)
}

/// Breadth-first search from `from`, limited to `radius` levels.
fn within_distance(adjacency: &[Vec<Vertex>], from: Vertex, to: Vertex, radius: usize, dist: &mut [usize]) -> bool {
    let mut queue = VecDeque::from([from]);
    let mut touched = vec![from];
    dist[from] = 0;
    let mut found = false;
    while let Some(x) = queue.pop_front() {
        if x == to {
            found = true;
            break;
        }
        if dist[x] == radius {
            continue;
        }
        for &y in &adjacency[x] {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                touched.push(y);
                queue.push_back(y);
            }
        }
    }
    for t in touched {
        dist[t] = usize::MAX;
    }
    found
}

/// Random forest grown vertex by vertex: each vertex after the first starts
/// a new tree with probability 1/8, otherwise it attaches to a uniformly
/// chosen earlier vertex with spare degree (four tries). `max_degree == 0`
/// leaves degrees uncapped.
pub fn random_forest(n: usize, max_degree: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut degree = vec![0usize; n];
    let mut es = Vec::new();
    let cap = if max_degree == 0 { usize::MAX } else { max_degree };
    for i in 1..n {
        if rng.gen_range(0..8) == 0 {
            continue;
        }
        // A few tries at a parent with spare degree; otherwise start a tree.
        for _ in 0..4 {
            let p = rng.gen_range(0..i);
            if degree[p] < cap {
                degree[p] += 1;
                degree[i] += 1;
                es.push((p, i));
                break;
            }
        }
    }
    build(n, es)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Girth;

    #[test]
    fn k33plus_shape() {
        let g = k33plus();
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 10));
        let mut degrees: Vec<usize> = (0..7).map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, [2, 3, 3, 3, 3, 3, 3]);
        assert!(g.is_k33plus(&[0, 1, 2, 3, 4, 5, 6]).unwrap());
    }

    #[test]
    fn extremal_cubic_shape() {
        let g = extremal_cubic();
        assert_eq!((g.vertex_count(), g.edge_count()), (30, 45));
        assert!(g.is_cubic());
        assert_eq!(g.connected_components().len(), 1);
        assert_eq!(g.girth(), Girth::Cycle(4));
    }

    #[test]
    fn blowups() {
        let g = c5_blowup(4).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert!((0..10).all(|v| g.degree(v) == 4));
        let g = c5_blowup(6).unwrap();
        assert_eq!(g.vertex_count(), 15);
        assert!((0..15).all(|v| g.degree(v) == 6));
        assert_eq!(c5_blowup(5), Err(GenError::BadEvenDegree(5)));
        assert_eq!(c5_blowup(2), Err(GenError::BadEvenDegree(2)));
    }

    #[test]
    fn odd_regular() {
        for delta in [3, 5, 7] {
            let g = odd_regular_extremal(delta).unwrap();
            assert_eq!(g.vertex_count(), 10 * delta);
            assert!((0..g.vertex_count()).all(|v| g.degree(v) == delta), "delta={delta}");
            assert_eq!(g.connected_components().len(), 1);
        }
        let g = odd_regular_extremal(3).unwrap();
        assert_eq!(g.edge_count(), 45);
        assert_eq!(odd_regular_extremal(4), Err(GenError::BadOddDegree(4)));
        // For delta = 3 each copy of G0 is a subdivided K_{3,3}.
        let g0 = g.induced_subgraph(&(0..7).collect::<Vec<_>>());
        assert!(g0.is_k33plus(&[0, 1, 2, 3, 4, 5, 6]).unwrap());
        assert_eq!(odd_regular_extremal_layout(3).unwrap().len(), 6);
    }

    #[test]
    fn random_families() {
        assert_eq!(random_subcubic(0, 0, 9).unwrap().vertex_count(), 0);
        let a = random_subcubic(50, 60, 1).unwrap();
        assert_eq!(a, random_subcubic(50, 60, 1).unwrap());
        assert!(a.max_degree() <= 3 && a.edge_count() <= 60);
        assert_eq!(
            random_subcubic(4, 7, 1),
            Err(GenError::TooManyEdges { n: 4, target_m: 7 })
        );

        let c = random_cubic(10, 3).unwrap();
        assert_eq!(c.edge_count(), 15);
        assert!(c.is_cubic());
        assert_eq!(c, random_cubic(10, 3).unwrap());
        assert_eq!(random_cubic(11, 3), Err(GenError::BadCubicOrder(11)));

        for seed in 0..50 {
            let g = random_girth6(40, 4, seed);
            assert!(g.girth().at_least(6));
            assert!(g.max_degree() <= 4);
        }
        assert_eq!(random_girth6(30, 3, 8), random_girth6(30, 3, 8));
        let c6 = (0..200).map(|s| random_girth6(6, 2, s)).find(|g| g.edge_count() == 6);
        assert!(c6.is_some_and(|g| g.girth() == Girth::Cycle(6)));

        let f = random_forest(60, 0, 4);
        assert_eq!(f.girth(), Girth::Acyclic);
        assert!(random_forest(60, 3, 4).max_degree() <= 3);
    }
}
