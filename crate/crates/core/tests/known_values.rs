//! Values for small named graphs, computed by the exhaustive search in
//! `common` and frozen here; the library must agree with both.

mod common;

use common::{cycle, exhaustive_strong_matching, is_induced_matching, path};
use strongmatch::bounds::{bound_values, Bound};
use strongmatch::oracle::DEFAULT_NODE_BUDGET;
use strongmatch::reduction::find_induced_matching_subcubic;
use strongmatch::{exact_strong_matching_number, generators, Girth, Graph};

fn spider() -> Graph {
    Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
}

fn k33() -> Graph {
    Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap()
}

/// (name, graph, strong matching number frozen from the exhaustive search)
fn named() -> Vec<(&'static str, Graph, usize)> {
    vec![
        ("P4", path(4), 1),
        ("P5", path(5), 2),
        ("P7", path(7), 2),
        ("C5", cycle(5), 1),
        ("C6", cycle(6), 2),
        ("C7", cycle(7), 2),
        ("spider", spider(), 3),
        ("K33", k33(), 1),
        ("K33+", generators::k33plus(), 1),
        ("Petersen", generators::petersen(), 3),
        ("C5 blow-up, degree 4", generators::c5_blowup(4).unwrap(), 1),
    ]
}

#[test]
fn exhaustive_search_reproduces_frozen_values() {
    for (name, g, expected) in named() {
        let (value, witness) = exhaustive_strong_matching(&g);
        assert_eq!(value, expected, "{name}");
        assert!(is_induced_matching(&g, &witness), "{name}");
    }
}

#[test]
fn branch_and_bound_agrees() {
    for (name, g, expected) in named() {
        let sol = exact_strong_matching_number(&g, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(sol.value, expected, "{name}");
        assert!(is_induced_matching(&g, sol.witness.edges()), "{name}");
    }
}

#[test]
fn larger_constructions() {
    // Too large for the plain enumeration to be quick in every profile; the
    // branch-and-bound value is checked against its own witness instead.
    for g in [generators::extremal_cubic(), generators::odd_regular_extremal(3).unwrap()] {
        let sol = exact_strong_matching_number(&g, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(sol.value, 5);
        assert!(is_induced_matching(&g, sol.witness.edges()));
        let (m, _) = find_induced_matching_subcubic(&g).unwrap();
        assert_eq!(m.len(), 5);
        assert!(is_induced_matching(&g, m.edges()));
    }
}

#[test]
fn reduction_on_small_examples() {
    let expected = [("C5", cycle(5), 1), ("P4", path(4), 1), ("K33+", generators::k33plus(), 1)];
    for (name, g, size) in expected {
        assert_eq!(find_induced_matching_subcubic(&g).unwrap().0.len(), size, "{name}");
    }
    let p = generators::petersen();
    let (m, _) = find_induced_matching_subcubic(&p).unwrap();
    assert!(m.len() >= 2 && is_induced_matching(&p, m.edges()));
}

#[test]
fn structural_values() {
    assert_eq!(generators::k33plus().girth(), Girth::Cycle(4));
    assert_eq!(generators::extremal_cubic().girth(), Girth::Cycle(4));
    assert_eq!(generators::petersen().girth(), Girth::Cycle(5));
    assert_eq!(path(4).girth(), Girth::Acyclic);

    let c6 = bound_values(&cycle(6));
    assert_eq!((c6.prop1_bound, c6.thm2_bound), (Bound::Value(2), Bound::Value(1)));
    let k = bound_values(&generators::k33plus());
    assert_eq!((k.n, k.i, k.n33plus, k.thm2_bound), (7, 0, 1, Bound::Value(1)));
    let x = bound_values(&generators::extremal_cubic());
    assert_eq!((x.n, x.m, x.thm1_bound, x.thm2_bound), (30, 45, Bound::Value(5), Bound::Value(5)));
}
