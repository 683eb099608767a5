//! Semicompleteness predicates.

use crate::digraph::Digraph;
use crate::vertex_set::VertexSet;

/// Every pair of distinct vertices of `set` is adjacent.
pub fn is_semicomplete_within(d: &Digraph, set: VertexSet) -> bool {
    set.iter().all(|u| set.without(u).is_subset(d.neighbors(u)))
}

pub fn is_semicomplete(d: &Digraph) -> bool {
    is_semicomplete_within(d, d.vertices())
}

/// Each in-neighbourhood induces a semicomplete digraph.
pub fn is_locally_in_semicomplete(d: &Digraph) -> bool {
    (0..d.order()).all(|v| is_semicomplete_within(d, d.in_neighbors(v)))
}

/// Each out-neighbourhood induces a semicomplete digraph.
pub fn is_locally_out_semicomplete(d: &Digraph) -> bool {
    (0..d.order()).all(|v| is_semicomplete_within(d, d.out_neighbors(v)))
}

/// Locally semicomplete: both of the above.
pub fn is_lsd(d: &Digraph) -> bool {
    is_locally_in_semicomplete(d) && is_locally_out_semicomplete(d)
}

pub fn has_two_cycle(d: &Digraph) -> bool {
    (0..d.order()).any(|u| !d.out_neighbors(u).is_disjoint(d.in_neighbors(u)))
}

/// Locally semicomplete without 2-cycles.
pub fn is_local_tournament(d: &Digraph) -> bool {
    !has_two_cycle(d) && is_lsd(d)
}
