//! Brute-force cycle oracles.
//!
//! [`has_cycle_of_length`] is a depth-first search from the least vertex of
//! each candidate cycle, pruned by the distance back to that vertex.
//! [`has_cycle_of_length_dp`] is an independent subset dynamic program used
//! to re-validate anything the search reports.

use crate::digraph::{Digraph, VertexCycle};
use crate::vertex_set::{Vertex, VertexSet};

/// Distance from every vertex of `within` back to `target` inside `within`.
fn distances_to(d: &Digraph, target: Vertex, within: VertexSet) -> Vec<usize> {
    let mut dist = vec![usize::MAX; d.order()];
    dist[target] = 0;
    let mut frontier = VertexSet::singleton(target);
    let mut seen = frontier;
    let mut level = 0;
    while !frontier.is_empty() {
        level += 1;
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next.union(d.in_neighbors(v));
        }
        next = next.intersection(within).difference(seen);
        for v in next {
            dist[v] = level;
        }
        seen = seen.union(next);
        frontier = next;
    }
    dist
}

struct Search<'a, F> {
    d: &'a Digraph,
    k: usize,
    start: Vertex,
    allowed: VertexSet,
    dist: Vec<usize>,
    path: Vec<Vertex>,
    on_cycle: F,
}

impl<F: FnMut(&[Vertex]) -> bool> Search<'_, F> {
    /// Returns `true` once `on_cycle` asks to stop.
    fn extend(&mut self, used: VertexSet) -> bool {
        let v = *self.path.last().unwrap();
        let len = self.path.len();
        if len == self.k {
            return self.d.has_arc(v, self.start) && (self.on_cycle)(&self.path);
        }
        let candidates = self.d.out_neighbors(v).intersection(self.allowed).difference(used);
        for w in candidates {
            if self.dist[w] > self.k - len {
                continue;
            }
            self.path.push(w);
            let stop = self.extend(used.with(w));
            self.path.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

/// Calls `on_cycle` for every `k`-cycle once, listed from its least vertex,
/// in lexicographic order, until it returns `true`.
fn for_each_cycle<F: FnMut(&[Vertex]) -> bool>(d: &Digraph, k: usize, mut on_cycle: F) {
    let n = d.order();
    if k < 2 || k > n {
        return;
    }
    for start in 0..n {
        if n - start < k {
            return;
        }
        let allowed = VertexSet::from_bits(!0u64 << start).intersection(d.vertices());
        let dist = distances_to(d, start, allowed);
        let mut search = Search {
            d,
            k,
            start,
            allowed: allowed.without(start),
            dist,
            path: vec![start],
            on_cycle: &mut on_cycle,
        };
        if search.extend(VertexSet::singleton(start)) {
            return;
        }
    }
}

/// Lexicographically least cycle on exactly `k` vertices, if any.
pub fn has_cycle_of_length(d: &Digraph, k: usize) -> Option<VertexCycle> {
    let mut found = None;
    for_each_cycle(d, k, |c| {
        found = Some(VertexCycle::new(c.to_vec()));
        true
    });
    found
}

/// Every cycle on exactly `k` vertices, each listed once from its least vertex.
pub fn cycles_of_length(d: &Digraph, k: usize) -> Vec<VertexCycle> {
    let mut all = Vec::new();
    for_each_cycle(d, k, |c| {
        all.push(VertexCycle::new(c.to_vec()));
        false
    });
    all
}

/// All `k` in `2..=n` such that `d` has a `k`-cycle, ascending.
pub fn cycle_spectrum(d: &Digraph) -> Vec<usize> {
    (2..=d.order()).filter(|&k| has_cycle_of_length(d, k).is_some()).collect()
}

/// Cycles of every length `3..=n` (vacuous for `n < 3`).
pub fn is_pancyclic(d: &Digraph) -> bool {
    (3..=d.order()).all(|k| has_cycle_of_length(d, k).is_some())
}

pub fn hamiltonian_cycle(d: &Digraph) -> Option<VertexCycle> {
    has_cycle_of_length(d, d.order())
}

/// Longest cycle missing at least one vertex.
pub fn longest_nonhamiltonian_cycle(d: &Digraph) -> Option<VertexCycle> {
    (2..d.order()).rev().find_map(|k| has_cycle_of_length(d, k))
}

/// Subset dynamic program: for each least vertex `s`, the set of endpoints of
/// paths from `s` over each vertex subset. Independent of the search above.
pub fn has_cycle_of_length_dp(d: &Digraph, k: usize) -> bool {
    let n = d.order();
    assert!(n <= 20, "subset oracle is limited to 20 vertices");
    if k < 2 || k > n {
        return false;
    }
    let mut ends = vec![0u32; 1 << n];
    for s in 0..n {
        let higher: u32 = ((1u64 << n) - 1) as u32 & !((1u32 << (s + 1)) - 1);
        let back = d.in_neighbors(s).bits() as u32;
        // subsets of the vertices above s, shifted in with s
        let mut sub: u32 = 0;
        loop {
            let mask = sub | 1 << s;
            ends[mask as usize] = if sub == 0 { 1 << s } else { 0 };
            if sub == higher {
                break;
            }
            sub = (sub.wrapping_sub(higher)) & higher;
        }
        let mut sub: u32 = 0;
        loop {
            let mask = sub | 1 << s;
            let e = ends[mask as usize];
            if e != 0 {
                if mask.count_ones() as usize == k && e & back != 0 {
                    return true;
                }
                if (mask.count_ones() as usize) < k {
                    for v in VertexSet::from_bits(e as u64) {
                        let next = d.out_neighbors(v).bits() as u32 & higher & !mask;
                        for w in VertexSet::from_bits(next as u64) {
                            ends[(mask | 1 << w) as usize] |= 1 << w;
                        }
                    }
                }
            }
            if sub == higher {
                break;
            }
            sub = (sub.wrapping_sub(higher)) & higher;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::generators::{gen_bicomplete, gen_complete, gen_cycle};

    #[test]
    fn cycle_examples() {
        let c5 = gen_cycle(5);
        assert_eq!(has_cycle_of_length(&c5, 5).unwrap().to_vec(), vec![0, 1, 2, 3, 4]);
        for k in 2..5 {
            assert!(has_cycle_of_length(&c5, k).is_none());
        }
        let k22 = gen_bicomplete(2);
        assert!(has_cycle_of_length(&k22, 3).is_none());
        assert!(has_cycle_of_length(&k22, 4).is_some());
        assert!(has_cycle_of_length(&gen_complete(3), 3).is_some());
    }

    #[test]
    fn spectrum_examples() {
        assert_eq!(cycle_spectrum(&gen_bicomplete(3)), vec![2, 4, 6]);
        assert!(!is_pancyclic(&gen_bicomplete(2)));
        assert_eq!(cycle_spectrum(&gen_cycle(6)), vec![6]);
        assert!(!is_pancyclic(&gen_cycle(4)));
        assert_eq!(cycle_spectrum(&gen_complete(3)), vec![2, 3]);
        assert!(is_pancyclic(&gen_complete(3)));
    }

    #[test]
    fn search_agrees_with_subset_program() {
        for n in 1..=4usize {
            for mask in 0..(1u64 << (n * (n - 1))) {
                let d = Digraph::from_offdiag_mask(n, mask);
                for k in 2..=n {
                    let found = has_cycle_of_length(&d, k);
                    assert_eq!(found.is_some(), has_cycle_of_length_dp(&d, k), "{d:?} k={k}");
                    if let Some(c) = found {
                        assert_eq!(c.length(), k);
                        assert!(d.validate_cycle(&c));
                    }
                }
            }
        }
    }

    #[test]
    fn cycle_listing_counts() {
        // K_4 with all arcs both ways has (4 choose k) (k-1)! cycles of length k
        let k4 = gen_complete(4);
        assert_eq!(cycles_of_length(&k4, 2).len(), 6);
        assert_eq!(cycles_of_length(&k4, 3).len(), 8);
        assert_eq!(cycles_of_length(&k4, 4).len(), 6);
        for c in cycles_of_length(&k4, 4) {
            assert_eq!(c[0], 0);
        }
    }
}
