use super::*;
use crate::generators;
use crate::matching::verify_induced_matching;
use crate::oracle::exact_strong_matching_number;

fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

fn solve(g: &Graph) -> (Matching, ReductionTrace<'_>) {
    find_induced_matching_subcubic(g).unwrap()
}

fn assert_certified(g: &Graph) {
    let (m, trace) = solve(g);
    assert!(verify_induced_matching(g, &m).unwrap().is_valid());
    assert_eq!(ledger_check(&trace), LedgerVerdict::Ok);
    trace.check_consistency().unwrap();
    assert_eq!(m, trace.matching());
}

#[test]
fn k33plus_gets_one_edge() {
    let g = generators::k33plus();
    let (m, trace) = solve(&g);
    assert_eq!(m.len(), 1);
    assert_eq!(trace.steps.len(), 1);
    assert_eq!(trace.steps[0].rule, Rule::ComponentK33Plus);
    assert_eq!(ledger_check(&trace), LedgerVerdict::Ok);
}

#[test]
fn extremal_cubic_reaches_five() {
    let g = generators::extremal_cubic();
    let (m, trace) = solve(&g);
    assert_eq!(m.len(), 5);
    assert!(verify_induced_matching(&g, &m).unwrap().is_valid());
    assert_eq!(ledger_check(&trace), LedgerVerdict::Ok);
    trace.check_consistency().unwrap();
}

#[test]
fn small_examples() {
    let c5 = cycle(5);
    assert_eq!(solve(&c5).0.len(), 1);
    assert_eq!(solve(&path(4)).0.len(), 1);
    let p = generators::petersen();
    assert!(solve(&p).0.len() >= 2);
    assert_certified(&p);
    let empty = Graph::empty(3);
    let (m, trace) = solve(&empty);
    assert!(m.is_empty() && trace.steps.is_empty());
    assert_eq!(ledger_check(&trace), LedgerVerdict::Ok);
}

#[test]
fn ledger_on_hand_built_cycle_step() {
    // C5 reduced by hand: degree-2 neighbors 0 and 1, delete N[0] ∪ N[1],
    // which strands vertex 3.
    let c5 = cycle(5);
    let trace = ReductionTrace {
        original: &c5,
        steps: vec![ReductionStep {
            rule: Rule::R6,
            removed: vec![0, 1, 2, 4],
            added: vec![(0, 1)],
            isolated: vec![3],
        }],
    };
    assert_eq!(ledger_check(&trace), LedgerVerdict::Ok);
    trace.check_consistency().unwrap();
    assert_eq!(trace.render(), "rule=R6 removed=0,1,2,4 added=0-1 isolated=1\nmatching=1 bound=1 ok=true\n");

    let mut corrupted = trace.clone();
    corrupted.steps[0].added.clear();
    assert_eq!(ledger_check(&corrupted), LedgerVerdict::StepViolation(0));
}

#[test]
fn ledger_reports_shortfall() {
    let g = path(13);
    let trace = ReductionTrace {
        original: &g,
        steps: vec![ReductionStep {
            rule: Rule::ComponentBrute,
            removed: (0..13).collect(),
            added: vec![(0, 1)],
            isolated: vec![],
        }],
    };
    assert_eq!(ledger_check(&trace), LedgerVerdict::BelowBound { size: 1, bound: 3 });
}

#[test]
fn consistency_rejects_tampering() {
    let g = generators::random_cubic(40, 3).unwrap();
    let (_, trace) = solve(&g);
    let mut bad = trace.clone();
    let first = bad.steps[0].removed[0];
    bad.steps[0].isolated.push(first);
    assert!(bad.check_consistency().is_err());
    let mut bad = trace.clone();
    bad.steps.pop();
    assert!(bad.check_consistency().is_err());
}

#[test]
fn rejects_high_degree() {
    let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
    assert_eq!(
        find_induced_matching_subcubic(&star).unwrap_err(),
        EngineError::NotSubcubic { vertex: 0, degree: 4 }
    );
}

#[test]
fn step_display_format() {
    let step = ReductionStep {
        rule: Rule::R4,
        removed: vec![1, 2, 3],
        added: vec![(0, 1), (4, 5)],
        isolated: vec![],
    };
    assert_eq!(step.to_string(), "rule=R4 removed=1,2,3 added=0-1,4-5 isolated=0");
    assert_eq!(Rule::ComponentK33Plus.to_string(), "COMPONENT-K33PLUS");
}

#[test]
fn incremental_matches_full_rescan() {
    for seed in 0..300u64 {
        let n = 13 + (seed as usize * 7) % 90;
        let g = if seed % 3 == 0 && n % 2 == 0 {
            generators::random_cubic(n, seed).unwrap()
        } else {
            generators::random_subcubic(n, (n * 3 / 2) * (2 + seed as usize % 3) / 4, seed).unwrap()
        };
        let (_, fast) = find_induced_matching_subcubic(&g).unwrap();
        let (_, slow) = find_induced_matching_rescan(&g).unwrap();
        assert_eq!(fast.steps, slow.steps, "seed {seed}");
    }
}

#[test]
fn certified_on_random_subcubic() {
    for seed in 0..400u64 {
        let n = 1 + seed as usize % 120;
        let g = generators::random_subcubic(n, n * 3 / 2 - (seed as usize % 5).min(n * 3 / 2), seed).unwrap();
        assert_certified(&g);
        let g = generators::random_subcubic(n, n / 2 + n / 3, seed).unwrap();
        assert_certified(&g);
    }
}

#[test]
fn never_beats_the_optimum() {
    for seed in 0..200u64 {
        let n = 8 + seed as usize % 14;
        let g = generators::random_subcubic(n, (n * 3 / 2).min(22), seed).unwrap();
        let (m, _) = solve(&g);
        let exact = exact_strong_matching_number(&g, crate::oracle::DEFAULT_NODE_BUDGET).unwrap();
        assert!(m.len() <= exact.value, "seed {seed}");
    }
}

#[test]
fn deterministic_and_steps_shrink() {
    let g = generators::random_cubic(200, 11).unwrap();
    let (m1, t1) = solve(&g);
    let (m2, t2) = solve(&g);
    assert_eq!((m1, &t1.steps), (m2, &t2.steps));
    assert!(t1.steps.len() <= g.vertex_count());
    assert!(t1.steps.iter().all(|s| !s.removed.is_empty()));
}

#[test]
fn copies_of_k33plus_each_get_one() {
    let k = generators::k33plus();
    let g = k.disjoint_union(&k).disjoint_union(&cycle(20));
    let (m, trace) = solve(&g);
    let comp_steps = trace.steps.iter().filter(|s| s.rule == Rule::ComponentK33Plus).count();
    assert_eq!(comp_steps, 2);
    assert!(m.len() >= trace.guaranteed_size());
    assert_certified(&g);
}
