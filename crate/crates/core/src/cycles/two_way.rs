//! Two-way paths and the degree-sum bound for two-way arcs in 3-cycle-free
//! strong digraphs.

use serde::Serialize;

use crate::cycles::certificate::PreconditionError;
use crate::digraph::Digraph;
use crate::vertex_set::{Vertex, VertexSet};

/// `u_0 ... u_k` such that both it and its reverse are directed paths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct TwoWayPath(Vec<Vertex>);

impl TwoWayPath {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        TwoWayPath(vertices)
    }

    /// Number of arcs in one direction.
    pub fn length(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().collect()
    }

    pub fn validates(&self, d: &Digraph) -> bool {
        let rev: Vec<Vertex> = self.0.iter().rev().copied().collect();
        !self.0.is_empty() && d.is_path(&self.0) && d.is_path(&rev)
    }
}

fn two_way_neighbors(d: &Digraph, u: Vertex) -> VertexSet {
    d.out_neighbors(u).intersection(d.in_neighbors(u))
}

fn extend(d: &Digraph, path: &mut Vec<Vertex>, used: VertexSet, best: &mut Vec<Vertex>) -> bool {
    if path.len() > best.len() {
        *best = path.clone();
        if best.len() == d.order() {
            return true;
        }
    }
    let last = *path.last().unwrap();
    for w in two_way_neighbors(d, last).difference(used) {
        path.push(w);
        let done = extend(d, path, used.with(w), best);
        path.pop();
        if done {
            return true;
        }
    }
    false
}

/// A longest two-way path; among those, the lexicographically least vertex
/// sequence. Length 0 (the single vertex 0) when there is no 2-cycle.
pub fn longest_two_way_path(d: &Digraph) -> TwoWayPath {
    let mut best = vec![0];
    for s in 0..d.order() {
        let mut path = vec![s];
        if extend(d, &mut path, VertexSet::singleton(s), &mut best) {
            break;
        }
    }
    TwoWayPath(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeSumBound {
    pub degree_sum: usize,
    /// `d(u) + d(v) <= 2n`.
    pub bound_holds: bool,
    /// `d(u) + d(v) = 2n`.
    pub equality: bool,
    /// Every other vertex has exactly two arcs to or from `{u, v}`.
    pub all_pairs_two: bool,
}

/// Evaluates the degree-sum bound for a two-way arc `uv` of a strong
/// 3-cycle-free digraph.
pub fn degree_sum_bound_check(
    d: &Digraph,
    u: Vertex,
    v: Vertex,
) -> Result<DegreeSumBound, PreconditionError> {
    let n = d.order();
    for x in [u, v] {
        if x >= n {
            return Err(PreconditionError::VertexOutOfRange(x));
        }
    }
    if u == v || !d.has_two_cycle(u, v) {
        return Err(PreconditionError::MissingTwoCycle { u, v });
    }
    if !d.is_strong() {
        return Err(PreconditionError::NotStrong);
    }
    if crate::cycles::triangle::find_triangle(d).is_some() {
        return Err(PreconditionError::HasThreeCycle);
    }
    let pair = VertexSet::singleton(u).with(v);
    let degree_sum = d.degree(u) + d.degree(v);
    let all_pairs_two = d
        .vertices()
        .difference(pair)
        .iter()
        .all(|x| d.degree_into(x, pair) == 2);
    Ok(DegreeSumBound {
        degree_sum,
        bound_holds: degree_sum <= 2 * n,
        equality: degree_sum == 2 * n,
        all_pairs_two,
    })
}
