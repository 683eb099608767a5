//! 3-cycles under the pair degree condition.
//!
//! Without a 3-cycle the longest two-way path decides the structure: length
//! at most one forces an LSD whose round decomposition has blocks of size at
//! most two, length two or more forces a balanced complete bipartite digraph.

use crate::cycles::certificate::{check, require_condition, CycleCertificate, FinderError, PreconditionError, ProofMode};
use crate::cycles::two_way::{degree_sum_bound_check, longest_two_way_path, TwoWayPath};
use crate::conditions::special_pairs;
use crate::digraph::{Digraph, VertexCycle};
use crate::family::{is_exceptional_db, is_exceptional_dl, is_lsd, FamilyLabel};
use crate::vertex_set::VertexSet;

/// Lexicographically least 3-cycle, listed from its least vertex.
pub fn find_triangle(d: &Digraph) -> Option<VertexCycle> {
    for u in 0..d.order() {
        let above = VertexSet::from_bits(!0u64 << u).without(u);
        for v in d.out_neighbors(u).intersection(above) {
            let closing = d.out_neighbors(v).intersection(d.in_neighbors(u)).intersection(above);
            if let Some(w) = closing.first() {
                return Some(VertexCycle::new(vec![u, v, w]));
            }
        }
    }
    None
}

/// A 3-cycle, or the exceptional family that rules one out.
pub fn find_3_cycle(d: &Digraph, mode: ProofMode) -> Result<CycleCertificate, FinderError> {
    let n = d.order();
    if n < 3 {
        return Err(PreconditionError::OrderTooSmall { n, min: 3 }.into());
    }
    if !d.is_strong() {
        return Err(PreconditionError::NotStrong.into());
    }
    require_condition(d)?;
    if let Some(c) = find_triangle(d) {
        return Ok(CycleCertificate::found(c));
    }
    let path = longest_two_way_path(d);
    if path.length() <= 1 {
        short_two_way_paths(d, mode)
    } else {
        long_two_way_path(d, &path, mode)
    }
}

fn short_two_way_paths(d: &Digraph, mode: ProofMode) -> Result<CycleCertificate, FinderError> {
    let n = d.order();
    for u in 0..n {
        for v in d.out_neighbors(u).intersection(d.in_neighbors(u)) {
            let rest = d.vertices().without(u).without(v);
            check(
                mode,
                "two-way arc ends have equal neighbourhoods",
                || {
                    d.out_neighbors(u).intersection(rest) == d.out_neighbors(v).intersection(rest)
                        && d.in_neighbors(u).intersection(rest)
                            == d.in_neighbors(v).intersection(rest)
                },
                || format!("two-way arc {u}-{v}"),
            )?;
        }
    }
    check(
        mode,
        "every degree is at most n-1",
        || (0..n).all(|u| d.degree(u) < n),
        || format!("degrees {:?}", (0..n).map(|u| d.degree(u)).collect::<Vec<_>>()),
    )?;
    check(
        mode,
        "no nonadjacent dominated or dominating pair",
        || special_pairs(d).is_empty(),
        || format!("{:?}", special_pairs(d).first()),
    )?;
    check(mode, "digraph is an LSD", || is_lsd(d), String::new)?;
    match is_exceptional_dl(d) {
        label @ FamilyLabel::RoundLsd { .. } => {
            let small = matches!(&label, FamilyLabel::RoundLsd { decomposition, .. } if decomposition.max_block() <= 2);
            if small {
                Ok(CycleCertificate::exception(3, label))
            } else {
                Err(FinderError::Unclassified("round decomposition has a block of size above 2".into()))
            }
        }
        _ => Err(FinderError::Unclassified("3-cycle-free LSD outside the round family".into())),
    }
}

fn long_two_way_path(
    d: &Digraph,
    path: &TwoWayPath,
    mode: ProofMode,
) -> Result<CycleCertificate, FinderError> {
    let n = d.order();
    let p = path.vertices();
    let k = path.length();
    check(mode, "longest two-way path has length at least 3", || k >= 3, || format!("length {k}"))?;
    check(
        mode,
        "every vertex of the two-way path has degree n",
        || p.iter().all(|&u| d.degree(u) == n),
        || format!("degrees {:?}", p.iter().map(|&u| d.degree(u)).collect::<Vec<_>>()),
    )?;
    if mode.verifying() {
        for w in p.windows(2) {
            let bound = degree_sum_bound_check(d, w[0], w[1]).map_err(FinderError::from)?;
            check(
                mode,
                "degree sum of a two-way arc attains 2n with two arcs to every other vertex",
                || bound.equality && bound.all_pairs_two,
                || format!("arc {}-{}: {bound:?}", w[0], w[1]),
            )?;
        }
        for w in p.windows(3) {
            check(
                mode,
                "vertices two apart on the path share out- and in-neighbourhoods",
                || {
                    d.out_neighbors(w[0]) == d.out_neighbors(w[2])
                        && d.in_neighbors(w[0]) == d.in_neighbors(w[2])
                },
                || format!("u={} and u={}", w[0], w[2]),
            )?;
        }
    }
    check(
        mode,
        "longest two-way path spans every vertex",
        || path.vertex_set() == d.vertices(),
        || format!("path {p:?}"),
    )?;
    match is_exceptional_db(d) {
        label @ FamilyLabel::Bicomplete { .. } => Ok(CycleCertificate::exception(3, label)),
        _ => Err(FinderError::Unclassified("long two-way path without bipartite structure".into())),
    }
}
