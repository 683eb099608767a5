//! Round labellings.
//!
//! A labelling `v_0, ..., v_{n-1}` is round when, cyclically,
//! `N^+(v_i) = {v_{i+1}, ..., v_{i+d^+(v_i)}}` and
//! `N^-(v_i) = {v_{i-d^-(v_i)}, ..., v_{i-1}}`.

use crate::digraph::Digraph;
use crate::vertex_set::{Vertex, VertexSet};

/// Independent definitional check of a candidate labelling.
pub fn is_round_labeling(d: &Digraph, order: &[Vertex]) -> bool {
    let n = d.order();
    if order.len() != n || order.iter().collect::<VertexSet>() != d.vertices() {
        return false;
    }
    (0..n).all(|i| {
        let v = order[i];
        let succ: VertexSet = (1..=d.out_degree(v)).map(|s| order[(i + s) % n]).collect();
        let pred: VertexSet = (1..=d.in_degree(v)).map(|s| order[(i + n - s) % n]).collect();
        succ == d.out_neighbors(v) && pred == d.in_neighbors(v)
    })
}

/// Finds a round labelling starting at vertex 0, or `None`.
///
/// Rotating a round labelling gives another one, so vertex 0 is pinned to
/// position 0. Positions are then filled left to right; a vertex `w` may go
/// to position `q` only if, for every placed `v_p`, the arc relations between
/// `v_p` and `w` match what the offsets `q - p` and `p - q` prescribe. Once
/// all positions are filled every pair has been checked, so the result is
/// round by construction.
pub fn find_round_labeling(d: &Digraph) -> Option<Vec<Vertex>> {
    let n = d.order();
    let mut order = Vec::with_capacity(n);
    order.push(0);
    let placed = VertexSet::singleton(0);
    if extend(d, &mut order, placed) {
        debug_assert!(is_round_labeling(d, &order));
        Some(order)
    } else {
        None
    }
}

fn compatible(d: &Digraph, order: &[Vertex], w: Vertex) -> bool {
    let n = d.order();
    let q = order.len();
    let (dw_out, dw_in) = (d.out_degree(w), d.in_degree(w));
    order.iter().enumerate().all(|(p, &v)| {
        let fwd = q - p; // offset from v to w
        let back = n - fwd; // offset from w to v
        let v_to_w = d.has_arc(v, w);
        let w_to_v = d.has_arc(w, v);
        v_to_w == (fwd <= d.out_degree(v))
            && v_to_w == (fwd <= dw_in)
            && w_to_v == (back <= dw_out)
            && w_to_v == (back <= d.in_degree(v))
    })
}

fn extend(d: &Digraph, order: &mut Vec<Vertex>, placed: VertexSet) -> bool {
    if order.len() == d.order() {
        return true;
    }
    let last = *order.last().unwrap();
    // Whenever the previous vertex has an out-neighbour, the next position is
    // its first out-neighbour.
    let candidates = if d.out_degree(last) > 0 {
        d.out_neighbors(last).difference(placed)
    } else {
        d.vertices().difference(placed)
    };
    for w in candidates {
        if compatible(d, order, w) {
            order.push(w);
            if extend(d, order, placed.with(w)) {
                return true;
            }
            order.pop();
        }
    }
    false
}
