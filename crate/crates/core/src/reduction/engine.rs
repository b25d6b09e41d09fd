use std::collections::BTreeSet;
use std::ops::Deref;

use super::{EngineError, ReductionStep, ReductionTrace, Rule, BRUTE_FORCE_ORDER, FALLBACK_ORDER};
use crate::graph::{edge, Edge, Graph, Vertex};
use crate::matching::Matching;
use crate::oracle::{exact_strong_matching_number, DEFAULT_NODE_BUDGET};

/// Computes an induced matching of size at least
/// `⌈(n - i(G) - n33plus(G)) / 6⌉` in a subcubic graph, with its trace.
///
/// Runs in `O(n log n)`: rules R1, R10 and R11 look for subgraphs that
/// deletions can never create, so each vertex is examined for them once;
/// rules R2–R9 are anchored at vertices of degree 1 or 2 and are re-examined
/// only around vertices that just lost a neighbor.
pub fn find_induced_matching_subcubic(g: &Graph) -> Result<(Matching, ReductionTrace<'_>), EngineError> {
    run(g, Schedule::Incremental)
}

/// Same reductions with a full rescan of the graph before every step.
/// Quadratic; exists to cross-check the incremental scheduler.
pub fn find_induced_matching_rescan(g: &Graph) -> Result<(Matching, ReductionTrace<'_>), EngineError> {
    run(g, Schedule::Rescan)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Schedule {
    Incremental,
    Rescan,
}

fn run(g: &Graph, schedule: Schedule) -> Result<(Matching, ReductionTrace<'_>), EngineError> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) > 3) {
        return Err(EngineError::NotSubcubic {
            vertex: v,
            degree: g.degree(v),
        });
    }
    let mut engine = Engine::new(g, schedule);
    engine.run()?;
    let trace = ReductionTrace {
        original: g,
        steps: engine.steps,
    };
    Ok((trace.matching(), trace))
}

/// Live neighbors of a vertex; at most three in a subcubic graph.
#[derive(Clone, Copy)]
struct Nbrs {
    buf: [Vertex; 3],
    len: usize,
}

impl Deref for Nbrs {
    type Target = [Vertex];

    fn deref(&self) -> &[Vertex] {
        &self.buf[..self.len]
    }
}

/// A step about to be taken.
struct Plan {
    rule: Rule,
    added: Vec<Edge>,
    removed: Vec<Vertex>,
}

impl Plan {
    fn new(rule: Rule, added: Vec<Edge>, mut removed: Vec<Vertex>) -> Self {
        removed.sort_unstable();
        removed.dedup();
        Plan { rule, added, removed }
    }
}

const CANDIDATE_RULES: usize = 11;

struct Engine<'g> {
    g: &'g Graph,
    schedule: Schedule,
    alive: Vec<bool>,
    degree: Vec<u8>,
    /// Candidate anchors for R1..R11, popped in ascending order. Entries may
    /// be stale; every vertex where a rule currently applies is present.
    candidates: [BTreeSet<Vertex>; CANDIDATE_RULES],
    /// Smallest possibly-live vertex, for R12.
    cursor: Vertex,
    /// Scratch marks for bounded component searches.
    stamp: Vec<u32>,
    epoch: u32,
    steps: Vec<ReductionStep>,
}

impl<'g> Engine<'g> {
    fn new(g: &'g Graph, schedule: Schedule) -> Self {
        let n = g.vertex_count();
        Engine {
            g,
            schedule,
            alive: (0..n).map(|v| g.degree(v) > 0).collect(),
            degree: (0..n).map(|v| g.degree(v) as u8).collect(),
            candidates: Default::default(),
            cursor: 0,
            stamp: vec![0; n],
            epoch: 0,
            steps: Vec::new(),
        }
    }

    fn nbrs(&self, v: Vertex) -> Nbrs {
        let mut out = Nbrs { buf: [0; 3], len: 0 };
        for &w in self.g.neighbors(v) {
            if self.alive[w] {
                out.buf[out.len] = w;
                out.len += 1;
            }
        }
        out
    }

    fn deg(&self, v: Vertex) -> usize {
        self.degree[v] as usize
    }

    /// Both endpoints are live and adjacent.
    fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.alive[u] && self.alive[v] && self.g.has_edge(u, v)
    }

    fn closed(&self, v: Vertex) -> impl Iterator<Item = Vertex> {
        let nb = self.nbrs(v);
        std::iter::once(v).chain((0..nb.len).map(move |k| nb.buf[k]))
    }

    fn run(&mut self) -> Result<(), EngineError> {
        let n = self.g.vertex_count();
        let small: Vec<Vec<Vertex>> = self
            .g
            .connected_components()
            .into_iter()
            .filter(|c| c.len() > 1 && c.len() <= BRUTE_FORCE_ORDER)
            .collect();
        for comp in small {
            self.consume_component(comp, false);
        }
        if self.schedule == Schedule::Incremental {
            for v in 0..n {
                if !self.alive[v] {
                    continue;
                }
                for k in [0, 9, 10] {
                    self.candidates[k].insert(v);
                }
                self.mark_by_degree(v);
            }
        }
        while let Some((plan, anchor)) = self.next_plan() {
            self.fire(plan, anchor)?;
        }
        debug_assert!(self.alive.iter().all(|&a| !a));
        Ok(())
    }

    /// Lowest-numbered applicable rule at the smallest anchor.
    fn next_plan(&mut self) -> Option<(Plan, Vertex)> {
        for k in 0..CANDIDATE_RULES {
            let rule = Rule::LOCAL[k];
            match self.schedule {
                Schedule::Incremental => {
                    while let Some(x) = self.candidates[k].pop_first() {
                        if !self.alive[x] {
                            continue;
                        }
                        if let Some(plan) = self.check(rule, x) {
                            // x may anchor further instances.
                            self.candidates[k].insert(x);
                            return Some((plan, x));
                        }
                    }
                }
                Schedule::Rescan => {
                    for x in 0..self.alive.len() {
                        if self.alive[x] {
                            if let Some(plan) = self.check(rule, x) {
                                return Some((plan, x));
                            }
                        }
                    }
                }
            }
        }
        while self.cursor < self.alive.len() && !self.alive[self.cursor] {
            self.cursor += 1;
        }
        let u = self.cursor;
        (u < self.alive.len()).then(|| (self.rule12(u), u))
    }

    fn check(&self, rule: Rule, x: Vertex) -> Option<Plan> {
        match rule {
            Rule::R1 => self.rule1(x),
            Rule::R2 => self.rule2(x),
            Rule::R3 => self.rule3(x),
            Rule::R4 => self.rule4(x),
            Rule::R5 => self.rule5(x),
            Rule::R6 => self.rule6(x),
            Rule::R7 => self.rule7(x),
            Rule::R8 => self.rule8(x),
            Rule::R9 => self.rule9(x),
            Rule::R10 => self.rule10(x),
            Rule::R11 => self.rule11(x),
            _ => unreachable!("not an anchored rule"),
        }
    }

    // R1: u adjacent to a1 and b1, N(a1) - u = {b2, b3}, N(b1) - u = {a2, a3},
    // and {a2, a3} x {b2, b3} complete.
    fn rule1(&self, u: Vertex) -> Option<Plan> {
        let nu = self.nbrs(u);
        for i in 0..nu.len() {
            for j in i + 1..nu.len() {
                let (a1, b1) = (nu[i], nu[j]);
                let side_b: Vec<Vertex> = self.nbrs(a1).iter().copied().filter(|&w| w != u).collect();
                let side_a: Vec<Vertex> = self.nbrs(b1).iter().copied().filter(|&w| w != u).collect();
                if side_a.len() != 2 || side_b.len() != 2 {
                    continue;
                }
                let mut seven = vec![u, a1, b1, side_a[0], side_a[1], side_b[0], side_b[1]];
                seven.sort_unstable();
                seven.dedup();
                if seven.len() != 7 {
                    continue;
                }
                if side_a.iter().all(|&a| side_b.iter().all(|&b| self.adjacent(a, b))) {
                    let removed = vec![a1, b1, side_a[0], side_a[1], side_b[0], side_b[1]];
                    return Some(Plan::new(Rule::R1, vec![edge(side_a[0], side_b[0])], removed));
                }
            }
        }
        None
    }

    fn end_neighbor(&self, u: Vertex) -> Option<Vertex> {
        (self.deg(u) == 1).then(|| self.nbrs(u)[0])
    }

    fn rule2(&self, u: Vertex) -> Option<Plan> {
        let v = self.end_neighbor(u)?;
        (self.deg(v) == 2).then(|| Plan::new(Rule::R2, vec![edge(u, v)], self.closed(v).collect()))
    }

    fn rule3(&self, u1: Vertex) -> Option<Plan> {
        let v = self.end_neighbor(u1)?;
        self.nbrs(v)
            .iter()
            .any(|&w| w != u1 && self.deg(w) == 1)
            .then(|| Plan::new(Rule::R3, vec![edge(u1, v)], self.closed(v).collect()))
    }

    fn rule4(&self, u1: Vertex) -> Option<Plan> {
        let v1 = self.end_neighbor(u1)?;
        for &w in self.nbrs(v1).iter().filter(|&&w| w != u1) {
            for &v2 in self.nbrs(w).iter().filter(|&&v2| v2 != v1) {
                if self.adjacent(v1, v2) {
                    continue;
                }
                if let Some(&u2) = self.nbrs(v2).iter().find(|&&x| x != u1 && self.deg(x) == 1) {
                    let removed = self.closed(v1).chain(self.closed(v2)).collect();
                    return Some(Plan::new(Rule::R4, vec![edge(u1, v1), edge(u2, v2)], removed));
                }
            }
        }
        None
    }

    fn rule5(&self, u: Vertex) -> Option<Plan> {
        let v = self.end_neighbor(u)?;
        (self.deg(v) == 3).then(|| Plan::new(Rule::R5, vec![edge(u, v)], self.closed(v).collect()))
    }

    fn rule6(&self, u1: Vertex) -> Option<Plan> {
        if self.deg(u1) != 2 {
            return None;
        }
        let u2 = *self.nbrs(u1).iter().find(|&&w| self.deg(w) == 2)?;
        let removed = self.closed(u1).chain(self.closed(u2)).collect();
        Some(Plan::new(Rule::R6, vec![edge(u1, u2)], removed))
    }

    fn rule7(&self, u: Vertex) -> Option<Plan> {
        if self.deg(u) != 2 {
            return None;
        }
        let nu = self.nbrs(u);
        self.adjacent(nu[0], nu[1])
            .then(|| Plan::new(Rule::R7, vec![edge(u, nu[0])], self.closed(nu[0]).collect()))
    }

    fn rule8(&self, u: Vertex) -> Option<Plan> {
        if self.deg(u) != 2 {
            return None;
        }
        let nu = self.nbrs(u);
        let (v1, v2) = (nu[0], nu[1]);
        let on_square = self.nbrs(v1).iter().any(|&w| w != u && self.adjacent(w, v2));
        on_square.then(|| self.degree_two_step(Rule::R8, u, v1, v2))
    }

    fn rule9(&self, u: Vertex) -> Option<Plan> {
        if self.deg(u) != 2 {
            return None;
        }
        let nu = self.nbrs(u);
        Some(self.degree_two_step(Rule::R9, u, nu[0], nu[1]))
    }

    /// Commit `u v` and delete `N[v] ∪ N[u]` for the first neighbor `v` that
    /// isolates at most one vertex; the first side is returned regardless so
    /// that a violation surfaces through the ledger.
    fn degree_two_step(&self, rule: Rule, u: Vertex, v1: Vertex, v2: Vertex) -> Plan {
        let side = |v: Vertex| Plan::new(rule, vec![edge(u, v)], self.closed(v).chain(self.closed(u)).collect());
        let first = side(v1);
        if self.isolated_after(&first.removed).len() <= 1 {
            return first;
        }
        let second = side(v2);
        if self.isolated_after(&second.removed).len() <= 1 {
            return second;
        }
        first
    }

    fn rule10(&self, x: Vertex) -> Option<Plan> {
        let nx = self.nbrs(x);
        for i in 0..nx.len() {
            for j in i + 1..nx.len() {
                if self.adjacent(nx[i], nx[j]) {
                    let mut tri = [x, nx[i], nx[j]];
                    tri.sort_unstable();
                    let (v1, v2) = (tri[0], tri[1]);
                    let removed = self.closed(v1).chain(self.closed(v2)).collect();
                    return Some(Plan::new(Rule::R10, vec![edge(v1, v2)], removed));
                }
            }
        }
        None
    }

    fn rule11(&self, x: Vertex) -> Option<Plan> {
        let nx = self.nbrs(x);
        for i in 0..nx.len() {
            for j in i + 1..nx.len() {
                let (a, b) = (nx[i], nx[j]);
                let Some(&w) = self
                    .nbrs(a)
                    .iter()
                    .find(|&&w| w != x && w != b && self.adjacent(w, b))
                else {
                    continue;
                };
                let cycle = [(x, a), (a, w), (w, b), (b, x)];
                let plans: Vec<Plan> = cycle
                    .iter()
                    .map(|&(p, q)| Plan::new(Rule::R11, vec![edge(p, q)], self.closed(p).chain(self.closed(q)).collect()))
                    .collect();
                let pick = plans
                    .iter()
                    .position(|p| self.isolated_after(&p.removed).is_empty())
                    .unwrap_or(0);
                return plans.into_iter().nth(pick);
            }
        }
        None
    }

    fn rule12(&self, u: Vertex) -> Plan {
        let v = self.nbrs(u)[0];
        Plan::new(Rule::R12, vec![edge(u, v)], self.closed(u).chain(self.closed(v)).collect())
    }

    /// Live vertices outside `removed` all of whose live neighbors are in it.
    fn isolated_after(&self, removed: &[Vertex]) -> Vec<Vertex> {
        let mut out = Vec::new();
        for &x in removed {
            for &y in self.g.neighbors(x) {
                if self.alive[y]
                    && removed.binary_search(&y).is_err()
                    && self.nbrs(y).iter().all(|w| removed.binary_search(w).is_ok())
                    && !out.contains(&y)
                {
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn fire(&mut self, plan: Plan, anchor: Vertex) -> Result<(), EngineError> {
        let isolated = self.isolated_after(&plan.removed);
        if plan.removed.len() + isolated.len() > 6 * plan.added.len() {
            return self.fallback(plan, anchor, isolated);
        }
        let mut frontier = self.delete(&plan.removed);
        frontier.retain(|&v| self.alive[v] && self.degree[v] > 0);
        for &v in &isolated {
            self.alive[v] = false;
        }
        self.steps.push(ReductionStep {
            rule: plan.rule,
            removed: plan.removed,
            added: plan.added,
            isolated,
        });
        self.after_deletion(frontier);
        Ok(())
    }

    /// Marks `set` dead and returns the live vertices that lost a neighbor.
    fn delete(&mut self, set: &[Vertex]) -> Vec<Vertex> {
        for &v in set {
            self.alive[v] = false;
        }
        let mut frontier = Vec::new();
        for &v in set {
            for &w in self.g.neighbors(v) {
                if self.alive[w] {
                    self.degree[w] -= 1;
                    frontier.push(w);
                }
            }
        }
        frontier.sort_unstable();
        frontier.dedup();
        frontier
    }

    /// Consumes components that just became small, then re-queues anchors
    /// around the frontier.
    fn after_deletion(&mut self, frontier: Vec<Vertex>) {
        let mut small = Vec::new();
        self.epoch += 2;
        for &v in &frontier {
            if self.stamp[v] < self.epoch {
                if let Some(comp) = self.bounded_component(v, BRUTE_FORCE_ORDER) {
                    small.push(comp);
                }
            }
        }
        small.sort_unstable_by_key(|c| c[0]);
        for comp in small {
            self.consume_component(comp, false);
        }
        if self.schedule == Schedule::Incremental {
            for &c in &frontier {
                if self.alive[c] {
                    self.requeue_around(c);
                }
            }
        }
    }

    /// A degree drop at `c` can enable R2–R9 only at anchors within distance
    /// 2 of `c`, except R4, whose two end-vertices lie at distance up to 4.
    fn requeue_around(&mut self, c: Vertex) {
        let reach = if self.degree[c] == 1 { 4 } else { 2 };
        let mut ball = vec![(c, 0)];
        let mut head = 0;
        while head < ball.len() {
            let (x, d) = ball[head];
            head += 1;
            if d <= 2 {
                self.mark_by_degree(x);
            } else if self.degree[x] == 1 {
                self.candidates[3].insert(x);
            }
            if d < reach {
                for &y in self.nbrs(x).iter() {
                    if !ball.iter().any(|&(z, _)| z == y) {
                        ball.push((y, d + 1));
                    }
                }
            }
        }
    }

    fn mark_by_degree(&mut self, v: Vertex) {
        let rules = match self.degree[v] {
            1 => 1..5,
            2 => 5..9,
            _ => return,
        };
        for k in rules {
            self.candidates[k].insert(v);
        }
    }

    /// The live component of `start` (ascending) if it has at most `limit`
    /// vertices. Within one epoch, vertices of a component found too large
    /// are marked `epoch + 1` so later searches stop early.
    fn bounded_component(&mut self, start: Vertex, limit: usize) -> Option<Vec<Vertex>> {
        let big = self.epoch + 1;
        let mut comp = vec![start];
        self.stamp[start] = self.epoch;
        let mut head = 0;
        while head < comp.len() {
            let x = comp[head];
            head += 1;
            for w in self.nbrs(x).iter().copied() {
                if self.stamp[w] == big || (self.stamp[w] != self.epoch && comp.len() == limit) {
                    for &v in &comp {
                        self.stamp[v] = big;
                    }
                    return None;
                }
                if self.stamp[w] != self.epoch {
                    self.stamp[w] = self.epoch;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        Some(comp)
    }

    /// Solves a whole live component exactly and removes it.
    fn consume_component(&mut self, comp: Vec<Vertex>, fallback: bool) {
        let sub = self.g.induced_subgraph(&comp);
        let rule = if !fallback && sub.component_is_k33plus(&(0..sub.vertex_count()).collect::<Vec<_>>()) {
            Rule::ComponentK33Plus
        } else {
            Rule::ComponentBrute
        };
        let solution = exact_strong_matching_number(&sub, DEFAULT_NODE_BUDGET)
            .expect("component within the exact solver's reach");
        let added = solution
            .witness
            .edges()
            .iter()
            .map(|&(a, b)| edge(comp[a], comp[b]))
            .collect();
        let frontier = self.delete(&comp);
        debug_assert!(frontier.is_empty());
        self.steps.push(ReductionStep {
            rule,
            removed: comp,
            added,
            isolated: Vec::new(),
        });
    }

    fn fallback(&mut self, plan: Plan, anchor: Vertex, isolated: Vec<Vertex>) -> Result<(), EngineError> {
        self.epoch += 2;
        match self.bounded_component(anchor, FALLBACK_ORDER) {
            Some(comp) => {
                self.consume_component(comp, true);
                Ok(())
            }
            None => Err(EngineError::LedgerViolation {
                rule: plan.rule,
                anchor,
                dump: format!(
                    "removed={:?} added={:?} isolated={:?} neighborhood={:?}",
                    plan.removed,
                    plan.added,
                    isolated,
                    plan.removed.iter().map(|&v| (v, self.g.neighbors(v).to_vec())).collect::<Vec<_>>()
                ),
            }),
        }
    }
}
