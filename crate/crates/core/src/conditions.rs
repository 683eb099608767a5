//! Nonadjacent dominated and dominating pairs and the degree conditions
//! built on them.
//!
//! Two nonadjacent vertices form a dominated pair when they share an
//! in-neighbour and a dominating pair when they share an out-neighbour.
//! The pair condition used throughout this crate asks that every vertex
//! belonging to such a pair has degree at least `n`.

use serde::Serialize;

use crate::digraph::Digraph;
use crate::vertex_set::{Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    /// `common -> x` and `common -> y`.
    Dominated,
    /// `x -> common` and `y -> common`.
    Dominating,
}

/// A nonadjacent pair `x < y` together with one common neighbour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PairWitness {
    pub x: Vertex,
    pub y: Vertex,
    pub common: Vertex,
    pub kind: PairKind,
}

impl PairWitness {
    pub fn contains(&self, v: Vertex) -> bool {
        self.x == v || self.y == v
    }

    /// Re-checks the witness against `d`.
    pub fn is_valid_in(&self, d: &Digraph) -> bool {
        let (x, y, c) = (self.x, self.y, self.common);
        if x == y || d.adjacent(x, y) || c == x || c == y {
            return false;
        }
        match self.kind {
            PairKind::Dominated => d.has_arc(c, x) && d.has_arc(c, y),
            PairKind::Dominating => d.has_arc(x, c) && d.has_arc(y, c),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: Vertex,
    pub degree: usize,
    pub witness: PairWitness,
}

/// Outcome of a degree-condition check; `holds` iff `violations` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionVerdict {
    pub holds: bool,
    pub violations: Vec<Violation>,
}

impl ConditionVerdict {
    fn from_violations(violations: Vec<Violation>) -> Self {
        ConditionVerdict { holds: violations.is_empty(), violations }
    }
}

/// Every nonadjacent dominated or dominating pair with each common
/// neighbour, ordered by `(x, y, common, kind)`.
pub fn special_pairs(d: &Digraph) -> Vec<PairWitness> {
    let n = d.order();
    let mut out = Vec::new();
    for x in 0..n {
        let non_adjacent = d.vertices().difference(d.neighbors(x)).without(x);
        for y in non_adjacent.iter().filter(|&y| y > x) {
            let ins = d.in_neighbors(x).intersection(d.in_neighbors(y));
            let outs = d.out_neighbors(x).intersection(d.out_neighbors(y));
            for common in ins.union(outs) {
                if ins.contains(common) {
                    out.push(PairWitness { x, y, common, kind: PairKind::Dominated });
                }
                if outs.contains(common) {
                    out.push(PairWitness { x, y, common, kind: PairKind::Dominating });
                }
            }
        }
    }
    out
}

/// Vertices lying in some nonadjacent dominated (`dominated = true`) or
/// dominating pair, computed with word operations only.
pub fn pair_vertices(d: &Digraph, dominated: bool, dominating: bool) -> VertexSet {
    let mut hit = 0u64;
    for c in 0..d.order() {
        for (enabled, group) in [(dominated, d.out_neighbors(c)), (dominating, d.in_neighbors(c))] {
            if !enabled || group.len() < 2 {
                continue;
            }
            for x in group {
                let rivals = group.difference(d.neighbors(x)).without(x);
                if !rivals.is_empty() {
                    hit |= 1 << x;
                }
            }
        }
    }
    VertexSet::from_bits(hit)
}

/// Fast form of [`conjecture1_condition_holds`] without witnesses.
pub fn satisfies_pair_condition(d: &Digraph) -> bool {
    let n = d.order();
    let low: VertexSet = (0..n).filter(|&u| d.degree(u) < n).collect();
    if low.is_empty() {
        return true;
    }
    pair_vertices(d, true, true).is_disjoint(low)
}

/// Every vertex in a nonadjacent dominated or dominating pair has `d(u) >= n`.
pub fn conjecture1_condition_holds(d: &Digraph) -> ConditionVerdict {
    let n = d.order();
    let mut seen = VertexSet::EMPTY;
    let mut violations = Vec::new();
    for w in special_pairs(d) {
        for v in [w.x, w.y] {
            if !seen.contains(v) && d.degree(v) < n {
                seen.insert(v);
                violations.push(Violation { vertex: v, degree: d.degree(v), witness: w });
            }
        }
    }
    violations.sort_by_key(|v| v.vertex);
    ConditionVerdict::from_violations(violations)
}

/// For every nonadjacent dominated pair `{x, y}`: one of them has degree at
/// least `n` and the other at least `n - 1`. One violation is reported per
/// failing pair, naming the endpoint of smaller degree.
pub fn theorem1_condition_holds(d: &Digraph) -> ConditionVerdict {
    let n = d.order();
    let mut violations = Vec::new();
    let mut last_pair = None;
    for w in special_pairs(d).into_iter().filter(|w| w.kind == PairKind::Dominated) {
        if last_pair == Some((w.x, w.y)) {
            continue;
        }
        last_pair = Some((w.x, w.y));
        let (dx, dy) = (d.degree(w.x), d.degree(w.y));
        if dx.max(dy) < n || dx.min(dy) + 1 < n {
            let vertex = if dy < dx { w.y } else { w.x };
            violations.push(Violation { vertex, degree: d.degree(vertex), witness: w });
        }
    }
    ConditionVerdict::from_violations(violations)
}
