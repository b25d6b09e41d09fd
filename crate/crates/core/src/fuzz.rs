//! Seeded invariant checking over random families.
//!
//! Instance `k` of a run with base seed `s` is generated from seed `s + k`.
//! Every applicable algorithm is run on it, its output verified and compared
//! against the relevant guarantee, and, when the graph has at most
//! [`ORACLE_EDGE_LIMIT`] edges, against the exact strong matching number.

use std::fmt;

use clap::ValueEnum;
use serde::Serialize;

use crate::batch::{map_seeds, map_seeds_sequential};
use crate::bounds::{bound_values, ceil, greedy_forest_ratio, greedy_general_ratio, prop1_ratio, thm1_bound};
use crate::generators::{self, GenError};
use crate::graph::{Girth, Graph};
use crate::greedy::{forest_greedy_induced_matching, girth6_induced_matching, greedy_induced_matching};
use crate::matching::{verify_induced_matching, Matching, Verdict};
use crate::oracle::{exact_strong_matching_number, DEFAULT_NODE_BUDGET};
use crate::reduction::{find_induced_matching_subcubic, ledger_check, LedgerVerdict};

/// Instances with at most this many edges are also solved exactly.
pub const ORACLE_EDGE_LIMIT: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Subcubic graphs with density varying by seed.
    Subcubic,
    /// Cubic graphs (order rounded up to an even number, at least 4).
    Cubic,
    /// Girth at least 6, maximum degree 1..=5 by seed.
    Girth6,
    /// Forests, degree cap varying by seed.
    Forest,
    /// Bounded-degree graphs, maximum degree 1..=6 by seed.
    General,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

/// Deterministic instance of `family` with `n` vertices for `seed`.
pub fn generate(family: Family, n: usize, seed: u64) -> Result<Graph, GenError> {
    let k = seed as usize;
    match family {
        Family::Subcubic => generators::random_subcubic(n, (3 * n / 2) * (1 + k % 4) / 4, seed),
        Family::Cubic => generators::random_cubic(n.max(4).next_multiple_of(2), seed),
        Family::Girth6 => Ok(generators::random_girth6(n, 1 + k % 5, seed)),
        Family::Forest => Ok(generators::random_forest(n, [0, 2, 3, 4][k % 4], seed)),
        Family::General => {
            let cap = 1 + k % 6;
            generators::random_bounded_degree(n, cap, (n * cap / 2) * (1 + k % 4) / 4, seed)
        }
    }
}

/// Result of checking one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceReport {
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    /// Human-readable description of each broken invariant.
    pub failures: Vec<String>,
}

impl InstanceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Generates and checks one instance.
pub fn check_instance(family: Family, n: usize, seed: u64) -> InstanceReport {
    match generate(family, n, seed) {
        Ok(g) => {
            let failures = check_graph(&g);
            InstanceReport {
                seed,
                n: g.vertex_count(),
                m: g.edge_count(),
                failures,
            }
        }
        Err(e) => InstanceReport {
            seed,
            n,
            m: 0,
            failures: vec![format!("generator: {e}")],
        },
    }
}

/// Runs every applicable algorithm on `g` and lists the invariants it breaks.
pub fn check_graph(g: &Graph) -> Vec<String> {
    let mut failures = Vec::new();
    let report = bound_values(g);
    let mut outputs: Vec<(&str, Matching)> = Vec::new();
    let mut check = |name: &'static str, m: Matching, bound: usize, failures: &mut Vec<String>| {
        match verify_induced_matching(g, &m) {
            Ok(Verdict::Valid) => {}
            Ok(Verdict::Invalid { witness }) => failures.push(format!("{name}: not induced, witness {witness:?}")),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
        if m.len() < bound {
            failures.push(format!("{name}: size {} below bound {bound}", m.len()));
        }
        outputs.push((name, m));
    };

    if g.is_subcubic() {
        match find_induced_matching_subcubic(g) {
            Ok((m, trace)) => {
                let bound = report.thm2_bound.value().expect("subcubic");
                if ledger_check(&trace) != LedgerVerdict::Ok {
                    failures.push(format!("reduction: ledger {:?}", ledger_check(&trace)));
                }
                if let Err(e) = trace.check_consistency() {
                    failures.push(format!("reduction: trace {e}"));
                }
                if trace.steps.len() > g.vertex_count() {
                    failures.push("reduction: more steps than vertices".into());
                }
                let bound = if g.is_cubic() { bound.max(thm1_bound(g.edge_count())) } else { bound };
                check("reduction", m, bound, &mut failures);
            }
            Err(e) => failures.push(format!("reduction: {e}")),
        }
    }
    if g.edge_count() > 0 {
        match greedy_induced_matching(g) {
            Ok(m) => check("greedy", m, ceil(greedy_general_ratio(g.edge_count(), g.max_degree())), &mut failures),
            Err(e) => failures.push(format!("greedy: {e}")),
        }
    }
    if report.girth == Girth::Acyclic {
        match forest_greedy_induced_matching(g) {
            Ok(m) => check("forest", m, ceil(greedy_forest_ratio(g.edge_count(), g.max_degree())), &mut failures),
            Err(e) => failures.push(format!("forest: {e}")),
        }
    }
    if report.girth.at_least(6) {
        match girth6_induced_matching(g) {
            Ok(m) => check(
                "girth6",
                m,
                ceil(prop1_ratio(g.vertex_count(), g.isolated_count(), g.max_degree())),
                &mut failures,
            ),
            Err(e) => failures.push(format!("girth6: {e}")),
        }
    }

    if g.edge_count() <= ORACLE_EDGE_LIMIT {
        match exact_strong_matching_number(g, DEFAULT_NODE_BUDGET) {
            Ok(exact) => {
                if !matches!(verify_induced_matching(g, &exact.witness), Ok(Verdict::Valid)) {
                    failures.push("oracle: invalid witness".into());
                }
                for (name, m) in &outputs {
                    if m.len() > exact.value {
                        failures.push(format!("{name}: size {} exceeds optimum {}", m.len(), exact.value));
                    }
                }
                for (name, b) in report.integer_bounds() {
                    if b > exact.value {
                        failures.push(format!("bound {name}={b} exceeds optimum {}", exact.value));
                    }
                }
            }
            Err(e) => failures.push(format!("oracle: {e}")),
        }
    }
    failures
}

/// Aggregate of a fuzz run, in seed order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub family: Family,
    pub count: u64,
    pub size: usize,
    pub seed: u64,
    pub passed: u64,
    pub failed: u64,
    /// Seed and failures of the first failing instance.
    pub first_failure: Option<InstanceReport>,
}

impl FuzzSummary {
    fn from_reports(family: Family, size: usize, seed: u64, reports: Vec<InstanceReport>) -> Self {
        let passed = reports.iter().filter(|r| r.passed()).count() as u64;
        FuzzSummary {
            family,
            count: reports.len() as u64,
            size,
            seed,
            passed,
            failed: reports.len() as u64 - passed,
            first_failure: reports.into_iter().find(|r| !r.passed()),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Checks `count` instances of `family` on `size` vertices, seeds
/// `seed..seed + count`; parallel when the `parallel` feature is on.
pub fn fuzz(family: Family, count: u64, size: usize, seed: u64) -> FuzzSummary {
    let reports = map_seeds(seed, count, |s| check_instance(family, size, s));
    FuzzSummary::from_reports(family, size, seed, reports)
}

/// Single-threaded [`fuzz`].
pub fn fuzz_sequential(family: Family, count: u64, size: usize, seed: u64) -> FuzzSummary {
    let reports = map_seeds_sequential(seed, count, |s| check_instance(family, size, s));
    FuzzSummary::from_reports(family, size, seed, reports)
}
