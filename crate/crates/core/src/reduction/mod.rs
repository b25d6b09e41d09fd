//! Induced matchings of guaranteed size in subcubic graphs by local
//! reductions.
//!
//! Every reduction commits one or two matching edges `e`, deletes a vertex
//! set containing `N[x] ∪ N[y]` for each committed `xy`, and drops the
//! vertices this leaves isolated. Each rule deletes and isolates at most six
//! vertices per committed edge, which yields a matching of size at least
//! `⌈(n - i(G) - n33plus(G)) / 6⌉`. Components on at most 12 vertices are
//! solved exactly instead, and components isomorphic to `K_{3,3}^+` get a
//! single edge.
//!
//! Rules are tried in a fixed priority order (see [`Rule`]). The per-rule
//! accounting is only valid when no earlier rule applies, so the engine
//! always fires the lowest-numbered applicable rule anywhere in the graph.
//! Each step is logged in a [`ReductionTrace`] that [`ledger_check`] and
//! [`ReductionTrace::check_consistency`] can audit independently of the
//! engine.

mod engine;

use std::fmt;

use thiserror::Error;

use crate::bounds::thm2_bound;
use crate::graph::{Edge, Graph, Vertex};
use crate::matching::Matching;

pub use engine::find_induced_matching_subcubic;
#[doc(hidden)]
pub use engine::find_induced_matching_rescan;

/// Components with at most this many vertices are solved exactly.
pub const BRUTE_FORCE_ORDER: usize = 12;

/// Largest component the ledger fallback will hand to the exact solver.
pub const FALLBACK_ORDER: usize = 30;

/// Reduction rules in priority order.
///
/// * `R1`: a `K_{3,3}^+` subgraph; commit an edge between the two branch
///   vertices far from the subdivision vertex, delete the six branch vertices.
/// * `R2`: end-vertex `u` whose neighbor `v` has degree 2; commit `uv`,
///   delete `N[v]`.
/// * `R3`: two end-vertices with a common neighbor `v`; commit one of them
///   with `v`, delete `N[v]`.
/// * `R4`: end-vertices `u1, u2` at distance 4 via `u1 v1 w v2 u2`; commit
///   `u1v1` and `u2v2`, delete `N[v1] ∪ N[v2]`.
/// * `R5`: any end-vertex `u` with neighbor `v`; commit `uv`, delete `N[v]`.
/// * `R6`: adjacent degree-2 vertices `u1, u2`; commit `u1u2`, delete
///   `N[u1] ∪ N[u2]`.
/// * `R7`: degree-2 vertex `u` in a triangle `u v1 v2`; commit `uv1`, delete
///   `N[v1]`.
/// * `R8`: degree-2 vertex `u` on a 4-cycle `u v1 w v2`; commit `uv1`, delete
///   `N[v1] ∪ N[u]`, choosing the side that isolates at most one vertex.
/// * `R9`: any degree-2 vertex `u`; as `R8` with its two neighbors.
/// * `R10`: a triangle `v1 v2 v3`; commit `v1v2`, delete `N[v1] ∪ N[v2]`.
/// * `R11`: a 4-cycle; commit a cycle edge `xy` for which deleting
///   `N[x] ∪ N[y]` isolates nothing.
/// * `R12`: the lexicographically smallest edge `uv`; delete `N[u] ∪ N[v]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    R10,
    R11,
    R12,
    /// A whole component isomorphic to `K_{3,3}^+`.
    ComponentK33Plus,
    /// A whole component solved by the exact oracle.
    ComponentBrute,
}

impl Rule {
    pub const LOCAL: [Rule; 12] = [
        Rule::R1,
        Rule::R2,
        Rule::R3,
        Rule::R4,
        Rule::R5,
        Rule::R6,
        Rule::R7,
        Rule::R8,
        Rule::R9,
        Rule::R10,
        Rule::R11,
        Rule::R12,
    ];

    /// Local rules carry the six-vertices-per-edge ledger; component steps
    /// are exact and are audited only through the global bound.
    pub fn is_local(self) -> bool {
        !matches!(self, Rule::ComponentK33Plus | Rule::ComponentBrute)
    }

    pub fn name(self) -> &'static str {
        match self {
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3 => "R3",
            Rule::R4 => "R4",
            Rule::R5 => "R5",
            Rule::R6 => "R6",
            Rule::R7 => "R7",
            Rule::R8 => "R8",
            Rule::R9 => "R9",
            Rule::R10 => "R10",
            Rule::R11 => "R11",
            Rule::R12 => "R12",
            Rule::ComponentK33Plus => "COMPONENT-K33PLUS",
            Rule::ComponentBrute => "COMPONENT-BRUTE",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One applied reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub rule: Rule,
    /// Deleted vertices (original ids, ascending), excluding those dropped
    /// because the deletion isolated them.
    pub removed: Vec<Vertex>,
    /// Edges committed to the matching.
    pub added: Vec<Edge>,
    /// Vertices left isolated by the deletion (ascending).
    pub isolated: Vec<Vertex>,
}

impl ReductionStep {
    pub fn isolated_created(&self) -> usize {
        self.isolated.len()
    }

    /// `removed + isolated <= 6 * added`.
    pub fn within_ledger(&self) -> bool {
        self.removed.len() + self.isolated.len() <= 6 * self.added.len()
    }
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rule={} removed=", self.rule)?;
        join(f, self.removed.iter().map(|v| v.to_string()))?;
        f.write_str(" added=")?;
        join(f, self.added.iter().map(|(u, v)| format!("{u}-{v}")))?;
        write!(f, " isolated={}", self.isolated.len())
    }
}

fn join(f: &mut fmt::Formatter<'_>, items: impl Iterator<Item = String>) -> fmt::Result {
    for (k, item) in items.enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        f.write_str(&item)?;
    }
    Ok(())
}

/// Ordered log of the steps taken on one input graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace<'g> {
    pub original: &'g Graph,
    pub steps: Vec<ReductionStep>,
}

impl<'g> ReductionTrace<'g> {
    /// Concatenation of every step's committed edges.
    pub fn matching(&self) -> Matching {
        Matching::new(self.steps.iter().flat_map(|s| s.added.iter().copied()))
    }

    /// `⌈(n - i - n33plus) / 6⌉` for the original graph.
    pub fn guaranteed_size(&self) -> usize {
        let g = self.original;
        thm2_bound(g.vertex_count(), g.isolated_count(), g.k33plus_component_count())
    }

    /// Replays the deletions on the original graph and checks that each step
    /// only touches live vertices, commits edges inside its deleted set,
    /// deletes closed neighborhoods of what it commits, reports exactly the
    /// vertices it isolates, and that component steps consume a whole live
    /// component. Every non-isolated vertex must be consumed by the end.
    pub fn check_consistency(&self) -> Result<(), String> {
        let g = self.original;
        let n = g.vertex_count();
        let mut alive: Vec<bool> = (0..n).map(|v| g.degree(v) > 0).collect();
        let live_degree = |alive: &[bool], v: Vertex| g.neighbors(v).iter().filter(|&&w| alive[w]).count();
        for (k, step) in self.steps.iter().enumerate() {
            let fail = |msg: &str| Err(format!("step {k} ({}): {msg}", step.rule));
            if step.removed.is_empty() {
                return fail("empty deletion");
            }
            if step.removed.iter().chain(&step.isolated).any(|&v| v >= n || !alive[v]) {
                return fail("touches a deleted vertex");
            }
            for &(u, v) in &step.added {
                if !g.has_edge(u, v) {
                    return fail("commits a non-edge");
                }
                for c in [u, v] {
                    let closed = std::iter::once(c).chain(g.neighbors(c).iter().copied());
                    if closed.filter(|&w| alive[w]).any(|w| step.removed.binary_search(&w).is_err()) {
                        return fail("committed edge's neighborhood survives");
                    }
                }
            }
            if !step.rule.is_local() {
                let comp = live_component(g, &alive, step.removed[0]);
                if comp != step.removed {
                    return fail("not a whole component");
                }
            }
            for &v in &step.removed {
                alive[v] = false;
            }
            let mut stranded: Vec<Vertex> = step
                .removed
                .iter()
                .flat_map(|&v| g.neighbors(v).iter().copied())
                .filter(|&w| alive[w] && live_degree(&alive, w) == 0)
                .collect();
            stranded.sort_unstable();
            stranded.dedup();
            if stranded != step.isolated {
                return fail("isolated set mismatch");
            }
            for &v in &step.isolated {
                alive[v] = false;
            }
        }
        match alive.iter().position(|&a| a) {
            Some(v) => Err(format!("vertex {v} never consumed")),
            None => Ok(()),
        }
    }

    /// One line per step, then `matching=<size> bound=<thm2> ok=<bool>`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            out.push_str(&step.to_string());
            out.push('\n');
        }
        let size = self.matching().len();
        let ok = ledger_check(self) == LedgerVerdict::Ok;
        out.push_str(&format!(
            "matching={size} bound={} ok={ok}\n",
            self.guaranteed_size()
        ));
        out
    }
}

fn live_component(g: &Graph, alive: &[bool], start: Vertex) -> Vec<Vertex> {
    let mut seen = vec![start];
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            if alive[y] && !seen.contains(&y) {
                seen.push(y);
                stack.push(y);
            }
        }
    }
    seen.sort_unstable();
    seen
}

/// Result of auditing a trace's accounting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LedgerVerdict {
    Ok,
    /// Local step whose deleted plus isolated count exceeds six per edge.
    StepViolation(usize),
    /// The matching is smaller than the order bound.
    BelowBound { size: usize, bound: usize },
}

/// Checks `removed + isolated <= 6 * added` for every local step and
/// `|M| >= ⌈(n - i - n33plus) / 6⌉` overall.
pub fn ledger_check(trace: &ReductionTrace<'_>) -> LedgerVerdict {
    if let Some(k) = trace
        .steps
        .iter()
        .position(|s| s.rule.is_local() && !s.within_ledger())
    {
        return LedgerVerdict::StepViolation(k);
    }
    let size = trace.matching().len();
    let bound = trace.guaranteed_size();
    if size < bound {
        return LedgerVerdict::BelowBound { size, bound };
    }
    LedgerVerdict::Ok
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("vertex {vertex} has degree {degree}; the input must be subcubic")]
    NotSubcubic { vertex: Vertex, degree: usize },
    /// A local rule would break its accounting inside a component too large
    /// for the exact fallback. Unreachable if the rule analysis is sound.
    #[error("ledger violation by {rule} at vertex {anchor} in a component of order > {FALLBACK_ORDER}: {dump}")]
    LedgerViolation {
        rule: Rule,
        anchor: Vertex,
        dump: String,
    },
}

#[cfg(test)]
mod tests;
