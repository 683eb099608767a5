//! Inserting paths into paths and cycles, and multi-insertion: splitting a
//! path into consecutive pieces that are each insertable, then merging them
//! all into the host at once.

use std::ops::Range;

use serde::Serialize;
use thiserror::Error;

use crate::digraph::{Digraph, VertexCycle, VertexPath};
use crate::vertex_set::Vertex;

/// A path or a cycle receiving insertions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Host {
    Path(VertexPath),
    Cycle(VertexCycle),
}

impl Host {
    pub fn vertices(&self) -> &[Vertex] {
        match self {
            Host::Path(p) => p,
            Host::Cycle(c) => c,
        }
    }

    fn is_cycle(&self) -> bool {
        matches!(self, Host::Cycle(_))
    }

    /// Seam `i` joins `vertices[i]` to the next vertex (cyclically for a cycle).
    fn seam_count(&self) -> usize {
        let len = self.vertices().len();
        if self.is_cycle() {
            len
        } else {
            len.saturating_sub(1)
        }
    }

    fn seam(&self, i: usize) -> (Vertex, Vertex) {
        let v = self.vertices();
        (v[i], v[(i + 1) % v.len()])
    }

    fn rebuild(&self, vertices: Vec<Vertex>) -> Host {
        match self {
            Host::Path(_) => Host::Path(VertexPath::new(vertices)),
            Host::Cycle(_) => Host::Cycle(VertexCycle::new(vertices)),
        }
    }

    pub fn validates(&self, d: &Digraph) -> bool {
        match self {
            Host::Path(p) => !p.is_empty() && d.validate_path(p),
            Host::Cycle(c) => d.validate_cycle(c),
        }
    }
}

impl From<VertexPath> for Host {
    fn from(p: VertexPath) -> Self {
        Host::Path(p)
    }
}

impl From<VertexCycle> for Host {
    fn from(c: VertexCycle) -> Self {
        Host::Cycle(c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InsertionError {
    #[error("path to insert is empty")]
    EmptyPath,
    #[error("path and host share a vertex")]
    NotDisjoint,
    #[error("path to insert is not a path of the digraph")]
    InvalidPath,
    #[error("host is not a path or cycle of the digraph")]
    InvalidHost,
}

fn check_inputs(d: &Digraph, p: &[Vertex], q: &Host) -> Result<(), InsertionError> {
    if p.is_empty() {
        return Err(InsertionError::EmptyPath);
    }
    if !d.is_path(p) {
        return Err(InsertionError::InvalidPath);
    }
    if !q.validates(d) {
        return Err(InsertionError::InvalidHost);
    }
    let ps: crate::vertex_set::VertexSet = p.iter().collect();
    if q.vertices().iter().any(|&v| ps.contains(v)) {
        return Err(InsertionError::NotDisjoint);
    }
    Ok(())
}

/// First seam of `q` into which `p` fits.
fn first_seam(d: &Digraph, p: &[Vertex], q: &Host) -> Option<usize> {
    let (a, b) = (p[0], p[p.len() - 1]);
    (0..q.seam_count()).find(|&i| {
        let (x, y) = q.seam(i);
        d.has_arc(x, a) && d.has_arc(b, y)
    })
}

/// Inserts `p` into `q` at the first seam `(v_i, v_{i+1})` with
/// `v_i -> first(p)` and `last(p) -> v_{i+1}`.
pub fn insert_path(d: &Digraph, p: &[Vertex], q: &Host) -> Result<Option<Host>, InsertionError> {
    check_inputs(d, p, q)?;
    Ok(first_seam(d, p, q).map(|i| splice(q, &[(i, p.to_vec())])))
}

/// `q` with each `pieces[j].1` placed after seam start `pieces[j].0`; seams distinct.
fn splice(q: &Host, pieces: &[(usize, Vec<Vertex>)]) -> Host {
    let mut out = Vec::new();
    for (i, &v) in q.vertices().iter().enumerate() {
        out.push(v);
        for (_, piece) in pieces.iter().filter(|(s, _)| *s == i) {
            out.extend(piece);
        }
    }
    q.rebuild(out)
}

/// Split of `p` into consecutive index ranges, each with a seam of `q`
/// where it fits on its own.
pub type InsertionPlan = Vec<(Range<usize>, usize)>;

/// Finds a split of `p` into consecutive pieces that each fit some seam of
/// `q`, scanning from the left and preferring long pieces, with
/// backtracking memoised on the start index.
pub fn multi_insertion_plan(d: &Digraph, p: &[Vertex], q: &Host) -> Option<InsertionPlan> {
    let s = p.len();
    // fits[i][j]: seam for p[i..j]
    let fits: Vec<Vec<Option<usize>>> = (0..s)
        .map(|i| (0..=s).map(|j| if j > i { first_seam(d, &p[i..j], q) } else { None }).collect())
        .collect();
    let mut dead = vec![false; s + 1];
    let mut plan = Vec::new();
    if plan_from(0, s, &fits, &mut dead, &mut plan) {
        Some(plan)
    } else {
        None
    }
}

fn plan_from(
    i: usize,
    s: usize,
    fits: &[Vec<Option<usize>>],
    dead: &mut [bool],
    plan: &mut InsertionPlan,
) -> bool {
    if i == s {
        return true;
    }
    if dead[i] {
        return false;
    }
    for j in (i + 1..=s).rev() {
        if let Some(seam) = fits[i][j] {
            plan.push((i..j, seam));
            if plan_from(j, s, fits, dead, plan) {
                return true;
            }
            plan.pop();
        }
    }
    dead[i] = true;
    false
}

/// Merges a plan into pieces with distinct seams: when two pieces share a
/// seam, everything from the first to the second is one path that fits the
/// same seam.
pub fn consolidate(plan: &InsertionPlan) -> InsertionPlan {
    let mut plan = plan.clone();
    'again: loop {
        for a in 0..plan.len() {
            for b in a + 1..plan.len() {
                if plan[a].1 == plan[b].1 {
                    let merged = (plan[a].0.start..plan[b].0.end, plan[a].1);
                    plan.splice(a..=b, [merged]);
                    continue 'again;
                }
            }
        }
        return plan;
    }
}

/// Multi-inserts `p` into `q`: a path with the same ends as `q` (or a cycle)
/// on the union of both vertex sets, or `None` when `p` has no split into
/// individually insertable pieces.
pub fn multi_insert(d: &Digraph, p: &[Vertex], q: &Host) -> Result<Option<Host>, InsertionError> {
    check_inputs(d, p, q)?;
    let Some(plan) = multi_insertion_plan(d, p, q) else {
        return Ok(None);
    };
    let pieces: Vec<(usize, Vec<Vertex>)> =
        consolidate(&plan).into_iter().map(|(r, seam)| (seam, p[r].to_vec())).collect();
    let merged = splice(q, &pieces);
    debug_assert!(merged.validates(d));
    Ok(Some(merged))
}
