//! Regenerates `tests/data/corpus.txt`: small graphs (at most 25 edges) from
//! every family, used for exact cross-checks.
//!
//! cargo run --example build_corpus > tests/data/corpus.txt

use strongmatch::fuzz::{generate, Family};
use strongmatch::{generators, write_edge_list, Graph};

const MAX_EDGES: usize = 25;
const PER_FAMILY: usize = 420;

fn main() {
    let mut blocks: Vec<(String, Graph)> = vec![
        ("k33plus".into(), generators::k33plus()),
        ("petersen".into(), generators::petersen()),
        ("c5-blowup delta=4".into(), generators::c5_blowup(4).unwrap()),
    ];
    for n in 2..=12 {
        if n >= 3 {
            let cycle = Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
            blocks.push((format!("cycle n={n}"), cycle));
        }
        let path = Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap();
        blocks.push((format!("path n={n}"), path));
    }
    let families = [Family::Subcubic, Family::Cubic, Family::Girth6, Family::Forest, Family::General];
    for family in families {
        let mut kept = 0;
        let mut seed = 0u64;
        while kept < PER_FAMILY {
            let n = 2 + (seed as usize * 5) % 17;
            if let Ok(g) = generate(family, n, seed) {
                if g.edge_count() <= MAX_EDGES {
                    blocks.push((format!("{family} n={n} seed={seed}"), g));
                    kept += 1;
                }
            }
            seed += 1;
        }
    }
    let mut out = String::new();
    for (id, (label, g)) in blocks.iter().enumerate() {
        out.push_str(&format!("# id={id} {label}\n"));
        out.push_str(&write_edge_list(g));
        out.push('\n');
    }
    print!("{out}");
}
