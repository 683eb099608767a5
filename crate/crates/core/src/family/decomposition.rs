//! Substitution `R[S_1, ..., S_r]` and recovery of round decompositions.

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::digraph::{Digraph, GraphError};
use crate::family::local::{is_local_tournament, is_lsd, is_semicomplete_within};
use crate::family::round::{find_round_labeling, is_round_labeling};
use crate::vertex_set::{Vertex, VertexSet, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompositionError {
    #[error("quotient has {quotient} vertices but {parts} parts were given")]
    PartCount { quotient: usize, parts: usize },
    #[error("composed order {0} exceeds {MAX_ORDER}")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Replaces vertex `i` of `quotient` by `parts[i]` and every arc `i -> j` by
/// all arcs from the vertices of `parts[i]` to those of `parts[j]`. Part
/// vertices are laid out consecutively in part order.
pub fn compose(quotient: &Digraph, parts: &[Digraph]) -> Result<Digraph, CompositionError> {
    if parts.len() != quotient.order() {
        return Err(CompositionError::PartCount { quotient: quotient.order(), parts: parts.len() });
    }
    let total: usize = parts.iter().map(Digraph::order).sum();
    if total > MAX_ORDER {
        return Err(CompositionError::TooLarge(total));
    }
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0, |acc, p| {
            let start = *acc;
            *acc += p.order();
            Some(start)
        })
        .collect();
    let block = |i: usize| -> VertexSet {
        VertexSet::from_bits(VertexSet::full(parts[i].order()).bits() << offsets[i])
    };
    let mut rows = vec![0u64; total];
    for (i, part) in parts.iter().enumerate() {
        let mut external = VertexSet::EMPTY;
        for j in quotient.out_neighbors(i) {
            external = external.union(block(j));
        }
        for u in 0..part.order() {
            let internal = part.out_neighbors(u).bits() << offsets[i];
            rows[offsets[i] + u] = internal | external.bits();
        }
    }
    Ok(Digraph::from_out_rows(total, &rows)?)
}

/// `D = R[S_1, ..., S_r]` with `R` a round local tournament whose vertex `i`
/// stands for `blocks[i]`; `R` is labelled in round order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundDecomposition {
    pub quotient: Digraph,
    pub blocks: Vec<Vec<Vertex>>,
}

impl RoundDecomposition {
    pub fn r(&self) -> usize {
        self.blocks.len()
    }

    pub fn max_block(&self) -> usize {
        self.blocks.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Rebuilds the host digraph on its original labels from `R` and the
    /// subdigraphs of `host` induced by the blocks.
    pub fn recompose(&self, host: &Digraph) -> Result<Digraph, CompositionError> {
        let parts = self
            .blocks
            .iter()
            .map(|b| host.induced(b))
            .collect::<Result<Vec<_>, _>>()?;
        let composed = compose(&self.quotient, &parts)?;
        let mut perm = vec![0; composed.order()];
        for (slot, &v) in self.blocks.iter().flatten().enumerate() {
            perm[slot] = v;
        }
        Ok(composed.relabel(&perm))
    }

    /// Checks every structural invariant against `host`.
    pub fn validate(&self, host: &Digraph) -> bool {
        let r = self.r();
        if r == 0 || self.quotient.order() != r {
            return false;
        }
        let mut covered = VertexSet::EMPTY;
        for b in &self.blocks {
            let set: VertexSet = b.iter().collect();
            if b.is_empty() || set.len() != b.len() || !set.is_disjoint(covered) {
                return false;
            }
            if !set.is_subset(host.vertices()) {
                return false;
            }
            if !(is_semicomplete_within(host, set) && host.is_strong_within(set)) {
                return false;
            }
            covered = covered.union(set);
        }
        if covered != host.vertices() {
            return false;
        }
        let identity: Vec<Vertex> = (0..r).collect();
        is_local_tournament(&self.quotient)
            && is_round_labeling(&self.quotient, &identity)
            && self.recompose(host).is_ok_and(|d| &d == host)
    }
}

impl Serialize for RoundDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct View<'a> {
            r: usize,
            blocks: &'a [Vec<Vertex>],
            quotient_arcs: Vec<(Vertex, Vertex)>,
        }
        View {
            r: self.r(),
            blocks: &self.blocks,
            quotient_arcs: self.quotient.arcs().collect(),
        }
        .serialize(serializer)
    }
}

/// Smallest module of `d` containing `seed`: a vertex outside is added
/// whenever its arcs to or from the current set are not uniform.
pub fn minimal_module(d: &Digraph, seed: VertexSet) -> VertexSet {
    let mut m = seed;
    loop {
        let splitters: VertexSet = d
            .vertices()
            .difference(m)
            .iter()
            .filter(|&w| {
                let to = d.out_neighbors(w).intersection(m);
                let from = d.in_neighbors(w).intersection(m);
                !(to.is_empty() || to == m) || !(from.is_empty() || from == m)
            })
            .collect();
        if splitters.is_empty() {
            return m;
        }
        m = m.union(splitters);
    }
}

fn is_strong_semicomplete_set(d: &Digraph, s: VertexSet) -> bool {
    is_semicomplete_within(d, s) && d.is_strong_within(s)
}

/// Partition of `V(D)` into the maximal modules inducing strong
/// semicomplete subdigraphs, blocks ordered by least vertex.
///
/// Overlapping strong semicomplete modules have a strong semicomplete
/// module as union, so the maximal ones are disjoint. They are found by
/// repeatedly merging two current blocks whenever the smallest module
/// containing both is strong and semicomplete.
pub fn strong_semicomplete_blocks(d: &Digraph) -> Vec<VertexSet> {
    let mut blocks: Vec<VertexSet> = (0..d.order()).map(VertexSet::singleton).collect();
    'merge: loop {
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                let m = minimal_module(d, blocks[i].union(blocks[j]));
                if !is_strong_semicomplete_set(d, m) {
                    continue;
                }
                let mut union = m;
                for b in &blocks {
                    if !b.is_disjoint(m) {
                        union = union.union(*b);
                    }
                }
                blocks.retain(|b| b.is_disjoint(union));
                blocks.push(union);
                blocks.sort_by_key(|b| b.first());
                continue 'merge;
            }
        }
        return blocks;
    }
}

/// Round decomposition of an LSD, or `None` when `d` is not an LSD or the
/// quotient by its maximal strong semicomplete modules is not a round
/// local tournament.
pub fn round_decomposition(d: &Digraph) -> Option<RoundDecomposition> {
    if !is_lsd(d) {
        return None;
    }
    let blocks = strong_semicomplete_blocks(d);
    let r = blocks.len();
    let reps: Vec<Vertex> = blocks.iter().map(|b| b.first().unwrap()).collect();
    let quotient = d.induced(&reps).ok()?;
    // Blocks are modules, so the quotient arcs are uniform; a 2-cycle between
    // blocks or a non-LSD quotient rules out a decomposition.
    if !is_local_tournament(&quotient) {
        return None;
    }
    let order = find_round_labeling(&quotient)?;
    let mut perm = vec![0; r];
    for (pos, &b) in order.iter().enumerate() {
        perm[b] = pos;
    }
    let decomposition = RoundDecomposition {
        quotient: quotient.relabel(&perm),
        blocks: order.iter().map(|&b| blocks[b].to_vec()).collect(),
    };
    debug_assert!(decomposition.validate(d));
    Some(decomposition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::generators::{gen_complete, gen_cycle, gen_tournament_random};

    fn k1() -> Digraph {
        Digraph::empty(1).unwrap()
    }

    #[test]
    fn compose_with_singletons_is_identity() {
        let c4 = gen_cycle(4);
        let d = compose(&c4, &vec![k1(); 4]).unwrap();
        assert_eq!(d, c4);
    }

    #[test]
    fn compose_into_single_vertex() {
        let k3 = gen_complete(3);
        assert_eq!(compose(&k1(), std::slice::from_ref(&k3)).unwrap(), k3);
    }

    #[test]
    fn compose_triangle_with_two_way_arc() {
        let d = compose(&gen_cycle(3), &[gen_complete(2), k1(), k1()]).unwrap();
        let expected =
            Digraph::new(4, [(0, 1), (1, 0), (0, 2), (1, 2), (2, 3), (3, 0), (3, 1)]).unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn compose_rejects_wrong_part_count() {
        assert_eq!(
            compose(&gen_cycle(3), &[k1()]),
            Err(CompositionError::PartCount { quotient: 3, parts: 1 })
        );
    }

    #[test]
    fn cycle_decomposes_into_singletons() {
        for n in 4..9 {
            let c = gen_cycle(n);
            let dec = round_decomposition(&c).unwrap();
            assert_eq!(dec.quotient, c);
            assert_eq!(dec.block_sizes(), vec![1; n]);
            assert!(dec.validate(&c));
        }
    }

    #[test]
    fn strong_semicomplete_is_a_single_block() {
        let mut checked = 0;
        for seed in 0..40 {
            let t = gen_tournament_random(5, seed);
            if !t.is_strong() {
                continue;
            }
            checked += 1;
            let dec = round_decomposition(&t).unwrap();
            assert_eq!(dec.r(), 1);
            assert_eq!(dec.blocks[0], vec![0, 1, 2, 3, 4]);
        }
        assert!(checked > 5);
    }

    #[test]
    fn cycle_with_doubled_vertex_round_trips() {
        let mut parts = vec![gen_complete(2)];
        parts.extend(vec![k1(); 4]);
        let d = compose(&gen_cycle(5), &parts).unwrap();
        let dec = round_decomposition(&d).unwrap();
        assert_eq!(dec.block_sizes(), vec![2, 1, 1, 1, 1]);
        assert_eq!(dec.blocks[0], vec![0, 1]);
        assert_eq!(dec.recompose(&d).unwrap(), d);
    }

    #[test]
    fn non_lsd_has_no_decomposition() {
        assert!(round_decomposition(&crate::family::generators::gen_bicomplete(2)).is_none());
    }

    #[test]
    fn minimal_module_closure() {
        let c4 = gen_cycle(4);
        let m = minimal_module(&c4, [0, 1].into_iter().collect());
        assert_eq!(m, c4.vertices());
        let k = gen_complete(4);
        assert_eq!(minimal_module(&k, [0, 1].into_iter().collect()).len(), 2);
    }
}
