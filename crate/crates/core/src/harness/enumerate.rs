//! Exhaustive enumeration of labelled digraphs with filters, sharding and
//! optional isomorphism dedup.

use std::collections::HashSet;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::conditions::satisfies_pair_condition;
use crate::cycles::triangle::find_triangle;
use crate::digraph::Digraph;
use crate::family::is_lsd;
use crate::harness::canonical::{canonical_key, isomorphism_class_representatives, key_of_mask};

/// Largest order enumerated without `big`.
pub const MAX_SMALL_ORDER: usize = 5;
/// Largest order enumerated at all (`2^30` raw digraphs).
pub const MAX_BIG_ORDER: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order {n} is too large for exhaustive enumeration (limit {limit})")]
    TooLarge { n: usize, limit: usize },
    #[error("order {0} needs the big flag")]
    NeedsBig(usize),
    #[error("order must be positive")]
    Empty,
    #[error("bad shard {index}/{total}")]
    BadShard { index: usize, total: usize },
    #[error("unknown filter {0:?}")]
    UnknownFilter(String),
    #[error("bad shard syntax {0:?}, expected i/t")]
    ShardSyntax(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    Strong,
    BglCondition,
    Lsd,
    NoThreeCycle,
}

impl Filter {
    pub fn accepts(self, d: &Digraph) -> bool {
        match self {
            Filter::Strong => d.is_strong(),
            Filter::BglCondition => satisfies_pair_condition(d),
            Filter::Lsd => is_lsd(d),
            Filter::NoThreeCycle => find_triangle(d).is_none(),
        }
    }
}

impl FromStr for Filter {
    type Err = EnumerationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strong" => Ok(Filter::Strong),
            "bgl" | "bgl-condition" => Ok(Filter::BglCondition),
            "lsd" => Ok(Filter::Lsd),
            "no-3-cycle" => Ok(Filter::NoThreeCycle),
            other => Err(EnumerationError::UnknownFilter(other.to_string())),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::Strong => "strong",
            Filter::BglCondition => "bgl-condition",
            Filter::Lsd => "lsd",
            Filter::NoThreeCycle => "no-3-cycle",
        })
    }
}

/// Shard `index` of `total`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Shard {
    pub index: usize,
    pub total: usize,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, total: 1 };

    pub fn new(index: usize, total: usize) -> Result<Self, EnumerationError> {
        if total == 0 || index >= total {
            return Err(EnumerationError::BadShard { index, total });
        }
        Ok(Shard { index, total })
    }

    /// Contiguous slice of `0..len` owned by this shard.
    pub fn range(self, len: u64) -> Range<u64> {
        let (i, t) = (self.index as u128, self.total as u128);
        let len = len as u128;
        (len * i / t) as u64..(len * (i + 1) / t) as u64
    }
}

impl FromStr for Shard {
    type Err = EnumerationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || EnumerationError::ShardSyntax(s.to_string());
        let (i, t) = s.split_once('/').ok_or_else(bad)?;
        Shard::new(i.trim().parse().map_err(|_| bad())?, t.trim().parse().map_err(|_| bad())?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Dedup {
    #[default]
    None,
    Canonical,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub n: usize,
    /// Applied in this order.
    pub filters: Vec<Filter>,
    pub shard: Shard,
    pub dedup: Dedup,
    /// Permits `n = 6`.
    pub big: bool,
}

impl EnumerationSpec {
    pub fn new(n: usize) -> Self {
        EnumerationSpec { n, filters: Vec::new(), shard: Shard::WHOLE, dedup: Dedup::None, big: false }
    }

    pub fn accepts(&self, d: &Digraph) -> bool {
        self.filters.iter().all(|f| f.accepts(d))
    }
}

pub(crate) fn check_order(n: usize, big: bool) -> Result<(), EnumerationError> {
    if n == 0 {
        return Err(EnumerationError::Empty);
    }
    if n > MAX_BIG_ORDER {
        return Err(EnumerationError::TooLarge { n, limit: MAX_BIG_ORDER });
    }
    if n > MAX_SMALL_ORDER && !big {
        return Err(EnumerationError::NeedsBig(n));
    }
    Ok(())
}

/// Number of labelled loop-free digraphs of order `n`.
pub fn labelled_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1))
}

/// Labelled digraphs passing the filters, in offdiag-mask order.
///
/// Without dedup, shards are contiguous mask ranges. With canonical dedup,
/// each shard keeps the classes whose canonical key falls in its residue
/// class, and emits each class once as its canonical form.
pub fn enumerate_digraphs(
    spec: &EnumerationSpec,
) -> Result<Box<dyn Iterator<Item = Digraph> + '_>, EnumerationError> {
    check_order(spec.n, spec.big)?;
    Shard::new(spec.shard.index, spec.shard.total)?;
    let n = spec.n;
    match spec.dedup {
        Dedup::None => Ok(Box::new(
            spec.shard
                .range(labelled_count(n))
                .map(move |mask| Digraph::from_offdiag_mask(n, mask))
                .filter(move |d| spec.accepts(d)),
        )),
        Dedup::Canonical => {
            let mut seen = HashSet::new();
            let total = spec.shard.total as u64;
            let index = spec.shard.index as u64;
            Ok(Box::new((0..labelled_count(n)).filter_map(move |mask| {
                let d = Digraph::from_offdiag_mask(n, mask);
                if !spec.accepts(&d) {
                    return None;
                }
                let key = canonical_key(&d).expect("order is at most 6");
                (key % total == index && seen.insert(key))
                    .then(|| Digraph::from_offdiag_mask(n, key_of_mask(n, key)))
            })))
        }
    }
}

/// One representative (at least) of every isomorphism class of order `n`,
/// indexable for sharding.
///
/// Orders up to 5 list the class representatives themselves. Order 6 lists
/// each order-5 representative with every way of attaching vertex 5, which
/// meets every class since deleting vertex 5 of any labelling leaves some
/// order-5 class.
#[derive(Debug, Clone, Copy)]
pub struct IsoCover {
    n: usize,
    bases: &'static [Digraph],
}

impl IsoCover {
    pub fn new(n: usize) -> Result<Self, EnumerationError> {
        match n {
            0 => Err(EnumerationError::Empty),
            1..=5 => Ok(IsoCover { n, bases: isomorphism_class_representatives(n).unwrap() }),
            6 => Ok(IsoCover { n, bases: isomorphism_class_representatives(5).unwrap() }),
            _ => Err(EnumerationError::TooLarge { n, limit: MAX_BIG_ORDER }),
        }
    }

    fn attachments(&self) -> u64 {
        if self.n <= MAX_SMALL_ORDER {
            1
        } else {
            1 << (2 * (self.n - 1))
        }
    }

    pub fn len(&self) -> u64 {
        self.bases.len() as u64 * self.attachments()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, i: u64) -> Digraph {
        let per = self.attachments();
        let base = &self.bases[(i / per) as usize];
        if per == 1 {
            return base.clone();
        }
        extend_by_vertex(base, i % per)
    }
}

/// `base` plus a new last vertex `v`: bit `j` of `attach` is the arc
/// `v -> j`, bit `m + j` the arc `j -> v`, for `m = |base|`.
pub fn extend_by_vertex(base: &Digraph, attach: u64) -> Digraph {
    let m = base.order();
    let low = (1u64 << m) - 1;
    let (out_new, in_new) = (attach & low, attach >> m & low);
    let mut rows: Vec<u64> = base.out_rows().to_vec();
    for (j, row) in rows.iter_mut().enumerate() {
        if in_new >> j & 1 == 1 {
            *row |= 1 << m;
        }
    }
    rows.push(out_new);
    Digraph::from_out_rows(m + 1, &rows).expect("row bits stay off the diagonal")
}
