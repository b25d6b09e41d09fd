//! Lower bounds on the strong matching number, in exact arithmetic.

use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::graph::{Girth, Graph};

/// Exact non-negative rational.
pub type Rational = Ratio<u64>;

/// Smallest integer not below `r`.
pub fn ceil(r: Rational) -> usize {
    r.numer().div_ceil(*r.denom()) as usize
}

/// Why a bound does not apply to a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotApplicable {
    NotCubic,
    NotSubcubic,
    GirthBelowSix,
    NotForest,
}

impl fmt::Display for NotApplicable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotApplicable::NotCubic => "not cubic",
            NotApplicable::NotSubcubic => "not subcubic",
            NotApplicable::GirthBelowSix => "girth < 6",
            NotApplicable::NotForest => "not a forest",
        })
    }
}

/// A bound value, or the reason it is absent. Serializes as the value or
/// `null`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound<T> {
    Value(T),
    Absent(NotApplicable),
}

impl<T: Copy> Bound<T> {
    pub fn value(&self) -> Option<T> {
        match self {
            Bound::Value(v) => Some(*v),
            Bound::Absent(_) => None,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Bound<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Value(v) => v.fmt(f),
            Bound::Absent(why) => write!(f, "absent ({why})"),
        }
    }
}

impl Serialize for Bound<usize> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Bound::Value(v) => s.serialize_u64(*v as u64),
            Bound::Absent(_) => s.serialize_none(),
        }
    }
}

impl Serialize for Bound<Rational> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Bound::Value(r) => s.collect_str(r),
            Bound::Absent(_) => s.serialize_none(),
        }
    }
}

/// `⌈(n - i - n33plus) / 6⌉`, the order-based guarantee for subcubic graphs.
pub fn thm2_bound(n: usize, isolated: usize, k33plus: usize) -> usize {
    (n - isolated - k33plus).div_ceil(6)
}

/// `⌈m / 9⌉`, the size-based guarantee for cubic graphs.
pub fn thm1_bound(m: usize) -> usize {
    m.div_ceil(9)
}

/// `(n - i) / (Δ²/4 + Δ + 1)`, written as `4 (n - i) / (Δ + 2)²`.
pub fn prop1_ratio(n: usize, isolated: usize, max_degree: usize) -> Rational {
    let d = max_degree as u64 + 2;
    Ratio::new(4 * (n - isolated) as u64, d * d)
}

/// `m / (2Δ(Δ-1) + 1)`; the denominator is 1 for `Δ <= 1`.
pub fn greedy_general_ratio(m: usize, max_degree: usize) -> Rational {
    let d = max_degree as u64;
    Ratio::new(m as u64, 2 * d * d.saturating_sub(1) + 1)
}

/// `m / (2Δ - 1)`; the denominator is clamped to 1 for the edgeless case.
pub fn greedy_forest_ratio(m: usize, max_degree: usize) -> Rational {
    let d = max_degree as u64;
    Ratio::new(m as u64, (2 * d).saturating_sub(1).max(1))
}

/// Structural counts and every applicable lower bound for one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub i: usize,
    pub n33plus: usize,
    pub max_degree: usize,
    pub girth: Girth,
    pub thm2_bound: Bound<usize>,
    pub thm1_bound: Bound<usize>,
    pub prop1_bound: Bound<usize>,
    pub prop1_ratio: Bound<Rational>,
    pub greedy_general_bound: Rational,
    pub greedy_forest_bound: Bound<Rational>,
}

impl BoundReport {
    /// Every present integer bound (ceilings of the rational ones included).
    pub fn integer_bounds(&self) -> Vec<(&'static str, usize)> {
        let mut out = Vec::new();
        let named = [
            ("thm2", self.thm2_bound),
            ("thm1", self.thm1_bound),
            ("prop1", self.prop1_bound),
        ];
        for (name, b) in named {
            if let Some(v) = b.value() {
                out.push((name, v));
            }
        }
        out.push(("greedy", ceil(self.greedy_general_bound)));
        if let Some(r) = self.greedy_forest_bound.value() {
            out.push(("forest", ceil(r)));
        }
        out
    }
}

/// Counts `n, m, i(G), n33plus(G), Δ, girth` and assembles every bound.
///
/// The order bound is only reported for subcubic graphs, the size bound for
/// cubic graphs, the girth-6 bound when every cycle has length at least 6,
/// and the forest greedy bound for acyclic graphs.
pub fn bound_values(g: &Graph) -> BoundReport {
    let n = g.vertex_count();
    let m = g.edge_count();
    let i = g.isolated_count();
    let n33plus = g.k33plus_component_count();
    let max_degree = g.max_degree();
    let girth = g.girth();

    let thm2 = if g.is_subcubic() {
        Bound::Value(thm2_bound(n, i, n33plus))
    } else {
        Bound::Absent(NotApplicable::NotSubcubic)
    };
    let thm1 = if g.is_cubic() {
        Bound::Value(thm1_bound(m))
    } else {
        Bound::Absent(NotApplicable::NotCubic)
    };
    let prop1_ratio = if girth.at_least(6) {
        Bound::Value(prop1_ratio(n, i, max_degree))
    } else {
        Bound::Absent(NotApplicable::GirthBelowSix)
    };
    let forest = if girth == Girth::Acyclic {
        Bound::Value(greedy_forest_ratio(m, max_degree))
    } else {
        Bound::Absent(NotApplicable::NotForest)
    };
    BoundReport {
        n,
        m,
        i,
        n33plus,
        max_degree,
        girth,
        thm2_bound: thm2,
        thm1_bound: thm1,
        prop1_bound: match prop1_ratio {
            Bound::Value(r) => Bound::Value(ceil(r)),
            Bound::Absent(why) => Bound::Absent(why),
        },
        prop1_ratio,
        greedy_general_bound: greedy_general_ratio(m, max_degree),
        greedy_forest_bound: forest,
    }
}

/// Same report as [`bound_values`]; the name used by structural tooling.
pub fn count_invariants(g: &Graph) -> BoundReport {
    bound_values(g)
}
