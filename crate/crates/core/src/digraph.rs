//! Loop-free digraphs on dense vertex ids with bit-packed adjacency rows.
//!
//! A [`Digraph`] stores both out- and in-rows so that `N^+(u)`, `N^-(u)` and
//! the degree `d(u) = |N^+(u)| + |N^-(u)|` are single word operations. Arcs in
//! both directions between two vertices (2-cycles) are allowed; a two-way arc
//! contributes 2 to the degree of each endpoint.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use thiserror::Error;

use crate::vertex_set::{Vertex, VertexSet, MAX_ORDER};

type Rows = SmallVec<[u64; 8]>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("digraph must have at least one vertex")]
    Empty,
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} out of range for a digraph of order {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("loop arc at vertex {0}")]
    Loop(Vertex),
    #[error("vertex sets overlap in {0:?}")]
    Overlap(VertexSet),
    #[error("vertex {0} repeated")]
    RepeatedVertex(Vertex),
}

/// Immutable loop-free digraph without multiple arcs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Rows,
    inn: Rows,
}

impl Digraph {
    /// Builds a digraph of order `n` from an arc list. Duplicate arcs collapse.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        check_order(n)?;
        let mut out: Rows = SmallVec::from_elem(0, n);
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            out[u] |= 1 << v;
        }
        Ok(Self::from_rows_unchecked(n, out))
    }

    /// Digraph of order `n` with no arcs.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, std::iter::empty())
    }

    /// Builds a digraph from out-neighbourhood rows (`rows[u]` bit `v` set iff `u -> v`).
    pub fn from_out_rows(n: usize, rows: &[u64]) -> Result<Self, GraphError> {
        check_order(n)?;
        if rows.len() != n {
            return Err(GraphError::VertexOutOfRange { vertex: rows.len(), n });
        }
        let full = VertexSet::full(n).bits();
        for (u, &row) in rows.iter().enumerate() {
            if row & (1 << u) != 0 {
                return Err(GraphError::Loop(u));
            }
            if row & !full != 0 {
                let vertex = (row & !full).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
        }
        Ok(Self::from_rows_unchecked(n, rows.iter().copied().collect()))
    }

    /// Builds the digraph whose off-diagonal adjacency entries, listed in
    /// row-major order, are the low `n(n-1)` bits of `mask` (bit 0 first).
    ///
    /// This is the labelling used by exhaustive enumeration.
    pub fn from_offdiag_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n >= 1 && n * (n - 1) <= 64);
        let mut out: Rows = SmallVec::from_elem(0, n);
        let mut bit = 0;
        for (u, row) in out.iter_mut().enumerate() {
            let chunk = if n == 1 {
                0
            } else {
                (mask >> bit) & ((1u64 << (n - 1)) - 1)
            };
            // spread the n-1 bits around the diagonal position u
            let low = chunk & ((1u64 << u) - 1);
            let high = (chunk >> u) << (u + 1);
            *row = low | high;
            bit += n - 1;
        }
        Self::from_rows_unchecked(n, out)
    }

    /// Inverse of [`Digraph::from_offdiag_mask`].
    pub fn offdiag_mask(&self) -> u64 {
        debug_assert!(self.n * (self.n - 1) <= 64);
        let mut mask = 0u64;
        let mut bit = 0;
        for u in 0..self.n {
            let row = self.out[u];
            let low = row & ((1u64 << u) - 1);
            let high = row >> (u + 1);
            mask |= (low | (high << u)) << bit;
            bit += self.n - 1;
        }
        mask
    }

    pub(crate) fn from_rows_unchecked(n: usize, out: Rows) -> Self {
        let mut inn: Rows = SmallVec::from_elem(0, n);
        for (u, &row) in out.iter().enumerate() {
            for v in VertexSet::from_bits(row) {
                inn[v] |= 1 << u;
            }
        }
        Digraph { n, out, inn }
    }

    /// Order `n`.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbors(u).iter().map(move |v| (u, v)))
    }

    #[inline]
    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.out[u] & (1 << v) != 0
    }

    /// `u` and `v` are joined by an arc in at least one direction.
    #[inline]
    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        (self.out[u] | self.inn[u]) & (1 << v) != 0
    }

    /// `u -> v` and `v -> u`.
    #[inline]
    pub fn has_two_cycle(&self, u: Vertex, v: Vertex) -> bool {
        self.out[u] & self.inn[u] & (1 << v) != 0
    }

    #[inline]
    pub fn out_neighbors(&self, u: Vertex) -> VertexSet {
        VertexSet::from_bits(self.out[u])
    }

    #[inline]
    pub fn in_neighbors(&self, u: Vertex) -> VertexSet {
        VertexSet::from_bits(self.inn[u])
    }

    /// Vertices adjacent to `u` in either direction.
    #[inline]
    pub fn neighbors(&self, u: Vertex) -> VertexSet {
        VertexSet::from_bits(self.out[u] | self.inn[u])
    }

    #[inline]
    pub fn out_degree(&self, u: Vertex) -> usize {
        self.out[u].count_ones() as usize
    }

    #[inline]
    pub fn in_degree(&self, u: Vertex) -> usize {
        self.inn[u].count_ones() as usize
    }

    /// `d(u) = |N^+(u)| + |N^-(u)|`.
    #[inline]
    pub fn degree(&self, u: Vertex) -> usize {
        self.out_degree(u) + self.in_degree(u)
    }

    /// Minimum degree `δ(D)`.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    /// `d_F(u)`: number of arcs between `u` and the vertices of `set`.
    #[inline]
    pub fn degree_into(&self, u: Vertex, set: VertexSet) -> usize {
        let s = set.without(u).bits();
        ((self.out[u] & s).count_ones() + (self.inn[u] & s).count_ones()) as usize
    }

    /// `d(F, H)`: number of arcs with one end in `f` and the other in `h`.
    pub fn degree_between(&self, f: VertexSet, h: VertexSet) -> Result<usize, GraphError> {
        if !f.is_disjoint(h) {
            return Err(GraphError::Overlap(f.intersection(h)));
        }
        self.check_set(f)?;
        self.check_set(h)?;
        Ok(f.iter().map(|u| self.degree_into(u, h)).sum())
    }

    fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        match s.difference(self.vertices()).first() {
            Some(vertex) => Err(GraphError::VertexOutOfRange { vertex, n: self.n }),
            None => Ok(()),
        }
    }

    /// Vertices reachable from `start` (including `start`) inside `within`.
    pub fn reachable_within(&self, start: VertexSet, within: VertexSet) -> VertexSet {
        let mut seen = start.intersection(within);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = 0u64;
            for u in frontier {
                next |= self.out[u];
            }
            frontier = VertexSet::from_bits(next).intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Vertices that can reach `target` inside `within`.
    pub fn coreachable_within(&self, target: VertexSet, within: VertexSet) -> VertexSet {
        let mut seen = target.intersection(within);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = 0u64;
            for u in frontier {
                next |= self.inn[u];
            }
            frontier = VertexSet::from_bits(next).intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Every ordered pair of vertices is joined by a directed path.
    pub fn is_strong(&self) -> bool {
        let all = self.vertices();
        let root = VertexSet::singleton(0);
        self.reachable_within(root, all) == all && self.coreachable_within(root, all) == all
    }

    /// Whether the subdigraph induced by `set` is strong (the empty set is not).
    pub fn is_strong_within(&self, set: VertexSet) -> bool {
        let Some(root) = set.first() else {
            return false;
        };
        let root = VertexSet::singleton(root);
        self.reachable_within(root, set) == set && self.coreachable_within(root, set) == set
    }

    /// Length of a shortest directed cycle, `None` when acyclic.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.n {
            let back = self.in_neighbors(v);
            if back.is_empty() || self.out[v] == 0 {
                continue;
            }
            let mut seen = VertexSet::singleton(v);
            let mut frontier = seen;
            let mut level = 0;
            while !frontier.is_empty() {
                if best.is_some_and(|b| level + 1 >= b) {
                    break;
                }
                if !frontier.is_disjoint(back) {
                    best = Some(level + 1);
                    break;
                }
                let mut next = 0u64;
                for u in frontier {
                    next |= self.out[u];
                }
                frontier = VertexSet::from_bits(next).difference(seen);
                seen = seen.union(frontier);
                level += 1;
            }
            if best == Some(2) {
                break;
            }
        }
        best
    }

    /// Consecutive vertices of `path` are joined by arcs and no vertex repeats.
    pub fn is_path(&self, path: &[Vertex]) -> bool {
        self.distinct_in_range(path) && path.windows(2).all(|w| self.has_arc(w[0], w[1]))
    }

    /// Like [`Digraph::is_path`] plus the closing arc; at least two vertices.
    pub fn is_cycle(&self, cycle: &[Vertex]) -> bool {
        cycle.len() >= 2
            && self.is_path(cycle)
            && self.has_arc(cycle[cycle.len() - 1], cycle[0])
    }

    fn distinct_in_range(&self, seq: &[Vertex]) -> bool {
        let mut seen = VertexSet::EMPTY;
        for &v in seq {
            if v >= self.n || seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        true
    }

    /// Digraph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let mut out: Rows = SmallVec::from_elem(0, self.n);
        for u in 0..self.n {
            let mut row = 0u64;
            for v in self.out_neighbors(u) {
                row |= 1 << perm[v];
            }
            out[perm[u]] = row;
        }
        Self::from_rows_unchecked(self.n, out)
    }

    /// Subdigraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Result<Self, GraphError> {
        check_order(vertices.len())?;
        let mut seen = VertexSet::EMPTY;
        for &v in vertices {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
            if seen.contains(v) {
                return Err(GraphError::RepeatedVertex(v));
            }
            seen.insert(v);
        }
        let out = vertices
            .iter()
            .map(|&u| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.has_arc(u, v))
                    .fold(0u64, |row, (j, _)| row | 1 << j)
            })
            .collect();
        Ok(Self::from_rows_unchecked(vertices.len(), out))
    }

    /// Out-rows as raw words.
    pub fn out_rows(&self) -> &[u64] {
        &self.out
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n == 0 {
        Err(GraphError::Empty)
    } else if n > MAX_ORDER {
        Err(GraphError::OrderTooLarge(n))
    } else {
        Ok(())
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs=[", self.n)?;
        for (i, (u, v)) in self.arcs().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}->{v}")?;
        }
        write!(f, "])")
    }
}

/// Ordered list of distinct vertices; a directed path when validated
/// against a host digraph. Its length is the number of arcs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexPath(Vec<Vertex>);

impl VertexPath {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        VertexPath(vertices)
    }

    /// Number of arcs.
    pub fn length(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().collect()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl Deref for VertexPath {
    type Target = [Vertex];
    fn deref(&self) -> &[Vertex] {
        &self.0
    }
}

impl From<Vec<Vertex>> for VertexPath {
    fn from(v: Vec<Vertex>) -> Self {
        VertexPath(v)
    }
}

/// Cyclically ordered list of distinct vertices. Its length is the number of
/// vertices, which equals the number of arcs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexCycle(Vec<Vertex>);

impl VertexCycle {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        VertexCycle(vertices)
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().collect()
    }

    /// Position of `v` on the cycle.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.0.iter().position(|&w| w == v)
    }

    /// Same cycle listed from position `start`.
    pub fn rotated(&self, start: usize) -> Self {
        let mut v = self.0.clone();
        v.rotate_left(start);
        VertexCycle(v)
    }

    /// Vertex at cyclic position `i`.
    pub fn at(&self, i: usize) -> Vertex {
        self.0[i % self.0.len()]
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl Deref for VertexCycle {
    type Target = [Vertex];
    fn deref(&self) -> &[Vertex] {
        &self.0
    }
}

impl From<Vec<Vertex>> for VertexCycle {
    fn from(v: Vec<Vertex>) -> Self {
        VertexCycle(v)
    }
}

impl Digraph {
    pub fn validate_path(&self, path: &VertexPath) -> bool {
        self.is_path(path)
    }

    pub fn validate_cycle(&self, cycle: &VertexCycle) -> bool {
        self.is_cycle(cycle)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn bicomplete_2_2() -> Digraph {
        let mut arcs = vec![];
        for a in [0, 1] {
            for b in [2, 3] {
                arcs.push((a, b));
                arcs.push((b, a));
            }
        }
        Digraph::new(4, arcs).unwrap()
    }

    #[test]
    fn builds_directed_triangle() {
        let d = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(d.arc_count(), 3);
        assert!(d.has_arc(2, 0));
        assert!(!d.has_arc(0, 2));
    }

    #[test]
    fn two_way_arc_counts_twice() {
        let d = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(d.degree(0), 2);
        assert!(d.has_two_cycle(0, 1));
    }

    #[test]
    fn duplicate_arcs_collapse() {
        let d = Digraph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(d.arc_count(), 1);
    }

    #[test]
    fn rejects_loops_and_bad_ids() {
        assert_eq!(Digraph::new(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Digraph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Digraph::empty(0), Err(GraphError::Empty));
        assert_eq!(Digraph::empty(65), Err(GraphError::OrderTooLarge(65)));
    }

    #[test]
    fn bicomplete_degrees() {
        let d = bicomplete_2_2();
        assert!((0..4).all(|u| d.degree(u) == 4));
        assert_eq!(
            d.degree_between(VertexSet::singleton(0), VertexSet::singleton(2)),
            Ok(2)
        );
    }

    #[test]
    fn degree_between_examples() {
        let c4 = cycle(4);
        let s = |v: &[usize]| v.iter().collect::<VertexSet>();
        assert_eq!(c4.degree_between(s(&[0]), s(&[2])), Ok(0));
        assert_eq!(c4.degree_between(s(&[0, 1]), s(&[2, 3])), Ok(2));
        assert!(matches!(
            c4.degree_between(s(&[0, 1]), s(&[1, 2])),
            Err(GraphError::Overlap(_))
        ));
    }

    #[test]
    fn strongness_examples() {
        assert!(cycle(5).is_strong());
        assert!(bicomplete_2_2().is_strong());
        let path = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!path.is_strong());
        assert!(Digraph::empty(1).unwrap().is_strong());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(cycle(6).girth(), Some(6));
        assert_eq!(bicomplete_2_2().girth(), Some(2));
        assert_eq!(Digraph::new(3, [(0, 1), (1, 2)]).unwrap().girth(), None);
    }

    #[test]
    fn validation_examples() {
        let c3 = cycle(3);
        assert!(c3.validate_cycle(&VertexCycle::new(vec![0, 1, 2])));
        assert!(!c3.validate_cycle(&VertexCycle::new(vec![0, 2, 1])));
        assert!(cycle(4).validate_path(&VertexPath::new(vec![0, 1, 2])));
        assert!(!cycle(4).validate_path(&VertexPath::new(vec![0, 1, 0])));
        assert!(!c3.validate_cycle(&VertexCycle::new(vec![0])));
    }

    #[test]
    fn offdiag_mask_round_trip() {
        for n in 1..=4usize {
            for mask in 0..(1u64 << (n * (n - 1))) {
                let d = Digraph::from_offdiag_mask(n, mask);
                assert_eq!(d.offdiag_mask(), mask);
                assert_eq!(d.arc_count(), mask.count_ones() as usize);
            }
        }
    }

    #[test]
    fn relabel_and_induce() {
        let d = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let r = d.relabel(&[2, 0, 1]);
        assert!(r.has_arc(2, 0) && r.has_arc(0, 1));
        let h = d.induced(&[2, 1]).unwrap();
        assert!(h.has_arc(1, 0) && !h.has_arc(0, 1));
    }
}
