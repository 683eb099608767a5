//! Bypasses of a cycle: paths of length at least two whose ends are distinct
//! cycle vertices and whose interior avoids the cycle.

use serde::Serialize;

use crate::digraph::{Digraph, VertexCycle, VertexPath};
use crate::vertex_set::{Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bypass {
    pub path: VertexPath,
    pub cycle: VertexCycle,
    /// Number of cycle arcs from the first to the last vertex of `path`.
    pub gap_length: usize,
}

impl Bypass {
    pub fn interior(&self) -> &[Vertex] {
        &self.path[1..self.path.len() - 1]
    }

    pub fn validates(&self, d: &Digraph) -> bool {
        let p = &self.path;
        let on = self.cycle.vertex_set();
        let k = self.cycle.length();
        if p.len() < 3 || !d.validate_path(p) || !d.validate_cycle(&self.cycle) {
            return false;
        }
        let (a, b) = (p[0], p[p.len() - 1]);
        match (self.cycle.position(a), self.cycle.position(b)) {
            (Some(i), Some(j)) if a != b => {
                (j + k - i) % k == self.gap_length
                    && self.interior().iter().all(|&x| !on.contains(x))
            }
            _ => false,
        }
    }
}

/// Breadth-first distances inside `within` to the set `targets`, following
/// arcs forwards (distance of a target is 0).
fn distances_to_set(d: &Digraph, targets: VertexSet, within: VertexSet) -> Vec<usize> {
    let mut dist = vec![usize::MAX; d.order()];
    let mut frontier = targets.intersection(within);
    let mut seen = frontier;
    let mut level = 0;
    while !frontier.is_empty() {
        for v in frontier {
            dist[v] = level;
        }
        level += 1;
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next.union(d.in_neighbors(v));
        }
        frontier = next.intersection(within).difference(seen);
        seen = seen.union(frontier);
    }
    dist
}

/// Least bypass from `c.at(i)` with gap `gap`, shortest first, then
/// lexicographically least.
fn bypass_from(d: &Digraph, c: &VertexCycle, i: usize, gap: usize) -> Option<VertexPath> {
    let outside = d.vertices().difference(c.vertex_set());
    let (x0, xl) = (c.at(i), c.at(i + gap));
    let dist = distances_to_set(d, d.in_neighbors(xl), outside);
    let first = d.out_neighbors(x0).intersection(outside);
    let best = first.iter().map(|w| dist[w]).min()?;
    if best == usize::MAX {
        return None;
    }
    let mut path = vec![x0];
    let mut current = first;
    for remaining in (0..=best).rev() {
        let next = current.iter().find(|&w| dist[w] == remaining)?;
        path.push(next);
        current = d.out_neighbors(next).intersection(outside);
    }
    path.push(xl);
    Some(VertexPath::new(path))
}

/// All bypasses of gap `gap`, one per start vertex, ordered by
/// (length, path).
fn bypasses_with_gap(d: &Digraph, c: &VertexCycle, gap: usize) -> Vec<Bypass> {
    let mut found: Vec<Bypass> = (0..c.length())
        .filter_map(|i| bypass_from(d, c, i, gap))
        .map(|path| Bypass { path, cycle: c.clone(), gap_length: gap })
        .collect();
    found.sort_by(|a, b| a.path.len().cmp(&b.path.len()).then_with(|| a.path.cmp(&b.path)));
    found
}

/// Some bypass of `c`: the one of [`minimum_gap_bypass`].
pub fn find_bypass(d: &Digraph, c: &VertexCycle) -> Option<Bypass> {
    minimum_gap_bypass(d, c)
}

/// A bypass minimising the gap; ties go to the shortest bypass and then to
/// the lexicographically least vertex sequence.
pub fn minimum_gap_bypass(d: &Digraph, c: &VertexCycle) -> Option<Bypass> {
    (1..c.length()).find_map(|gap| bypasses_with_gap(d, c, gap).into_iter().next())
}

/// Every shortest bypass of each gap, listed by gap.
pub fn bypasses_by_gap(d: &Digraph, c: &VertexCycle) -> Vec<Bypass> {
    (1..c.length()).flat_map(|gap| bypasses_with_gap(d, c, gap)).collect()
}
