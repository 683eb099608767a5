//! The exceptional families: balanced complete bipartite digraphs (`DB`),
//! non-pancyclic round-decomposable LSDs (`DL`) and bare cycles.

use serde::Serialize;

use crate::digraph::{Digraph, VertexCycle};
use crate::family::decomposition::{round_decomposition, RoundDecomposition};
use crate::family::local::is_lsd;
use crate::vertex_set::{Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyKind {
    #[serde(rename = "DB")]
    Bicomplete,
    #[serde(rename = "DL")]
    RoundLsd,
    #[serde(rename = "PureCycle")]
    PureCycle,
    #[serde(rename = "None")]
    None,
}

/// Membership of a digraph in an exceptional family, with evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "evidence")]
pub enum FamilyLabel {
    /// Both-way complete bipartite `K_{m,m}` with `2m >= 4`.
    #[serde(rename = "DB")]
    Bicomplete { parts: [Vec<Vertex>; 2] },
    /// Strong LSD `R[S_1..S_r]`, `R` round, `g(R) > max{2, |S_i|} + 1`.
    #[serde(rename = "DL")]
    RoundLsd { decomposition: RoundDecomposition, quotient_girth: usize },
    /// `D` is exactly the cycle.
    #[serde(rename = "PureCycle")]
    PureCycle { cycle: VertexCycle },
    #[serde(rename = "None")]
    None,
}

impl FamilyLabel {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilyLabel::Bicomplete { .. } => FamilyKind::Bicomplete,
            FamilyLabel::RoundLsd { .. } => FamilyKind::RoundLsd,
            FamilyLabel::PureCycle { .. } => FamilyKind::PureCycle,
            FamilyLabel::None => FamilyKind::None,
        }
    }

    pub fn is_none(&self) -> bool {
        matches!(self, FamilyLabel::None)
    }

    /// Re-checks the evidence against `d`.
    pub fn validates(&self, d: &Digraph) -> bool {
        match self {
            FamilyLabel::Bicomplete { parts } => bicomplete_parts_valid(d, parts),
            FamilyLabel::RoundLsd { decomposition, quotient_girth } => {
                d.is_strong()
                    && is_lsd(d)
                    && decomposition.validate(d)
                    && decomposition.quotient.girth() == Some(*quotient_girth)
                    && *quotient_girth > decomposition.max_block().max(2) + 1
            }
            FamilyLabel::PureCycle { cycle } => {
                cycle.length() == d.order() && d.arc_count() == d.order() && d.is_cycle(cycle)
            }
            FamilyLabel::None => true,
        }
    }
}

fn bicomplete_parts_valid(d: &Digraph, parts: &[Vec<Vertex>; 2]) -> bool {
    let a: VertexSet = parts[0].iter().collect();
    let b: VertexSet = parts[1].iter().collect();
    let n = d.order();
    n >= 4
        && parts[0].len() == parts[1].len()
        && a.len() == parts[0].len()
        && b.len() == parts[1].len()
        && a.is_disjoint(b)
        && a.union(b) == d.vertices()
        && a.iter().all(|v| d.out_neighbors(v) == b && d.in_neighbors(v) == b)
        && b.iter().all(|v| d.out_neighbors(v) == a && d.in_neighbors(v) == a)
}

/// Recognises `D ≅ K_{m,m}` (all arcs both ways, `2m >= 4`) structurally:
/// the part of vertex 0 must be its non-neighbourhood.
pub fn is_exceptional_db(d: &Digraph) -> FamilyLabel {
    let n = d.order();
    if n < 4 || n % 2 == 1 {
        return FamilyLabel::None;
    }
    let b = d.neighbors(0);
    let a = d.vertices().difference(b);
    let parts = [a.to_vec(), b.to_vec()];
    if bicomplete_parts_valid(d, &parts) {
        FamilyLabel::Bicomplete { parts }
    } else {
        FamilyLabel::None
    }
}

/// Recognises the non-pancyclic strong LSDs by the girth inequality on the
/// round decomposition.
///
/// Any decomposition whose quotient has girth at least 4 uses the maximal
/// strong semicomplete modules as blocks (refining a block would put a
/// strong tournament, hence a 3-cycle, into the quotient), so checking the
/// decomposition returned by [`round_decomposition`] is exhaustive.
pub fn is_exceptional_dl(d: &Digraph) -> FamilyLabel {
    if !d.is_strong() {
        return FamilyLabel::None;
    }
    let Some(decomposition) = round_decomposition(d) else {
        return FamilyLabel::None;
    };
    match decomposition.quotient.girth() {
        Some(g) if g > decomposition.max_block().max(2) + 1 => {
            FamilyLabel::RoundLsd { decomposition, quotient_girth: g }
        }
        _ => FamilyLabel::None,
    }
}

/// `D` is a bare cycle through all its vertices.
pub fn as_pure_cycle(d: &Digraph) -> FamilyLabel {
    let n = d.order();
    if n < 2 || d.arc_count() != n || !d.is_strong() {
        return FamilyLabel::None;
    }
    let mut order = vec![0];
    while order.len() < n {
        let next = d.out_neighbors(*order.last().unwrap()).first().unwrap();
        order.push(next);
    }
    FamilyLabel::PureCycle { cycle: VertexCycle::new(order) }
}
