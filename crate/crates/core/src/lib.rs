//! Induced (strong) matchings in graphs of small maximum degree.
//!
//! * [`reduction`]: certified reduction engine for subcubic graphs.
//! * [`greedy`] and [`bounds`]: simpler heuristics and the exact lower
//!   bounds they are measured against.
//! * [`oracle`]: exact strong matching number for graphs with at most 64
//!   edges.
//! * [`generators`]: extremal constructions and seeded random families.
//! * [`fuzz`] and [`batch`]: seeded invariant checking over many instances,
//!   parallel when the `parallel` feature is on.
//! * [`cli`]: the `strongmatch` command-line front end.

pub mod batch;
pub mod bounds;
pub mod cli;
pub mod fuzz;
pub mod generators;
pub mod graph;
pub mod greedy;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod reduction;

pub use bounds::{bound_values, count_invariants, BoundReport};
pub use graph::{Edge, Girth, Graph, GraphError, Vertex};
pub use greedy::{forest_greedy_induced_matching, girth6_induced_matching, greedy_induced_matching};
pub use io::{parse_graph, write_edge_list, Format};
pub use matching::{verify_induced_matching, Matching, Verdict};
pub use oracle::{build_conflict_graph, exact_strong_matching_number};
pub use reduction::{find_induced_matching_subcubic, ledger_check, LedgerVerdict, ReductionTrace};
