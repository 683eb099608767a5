//! Canonical labelling: the relabelling whose adjacency bit-string, read
//! row by row off the diagonal, is lexicographically least.

use std::sync::OnceLock;

use itertools::Itertools;

use crate::digraph::Digraph;

/// Largest order with a canonical form (all `n!` relabellings are tried).
pub const MAX_CANONICAL_ORDER: usize = 8;

/// Orders up to this use per-byte lookup tables.
const TABLE_ORDER: usize = 6;

fn entries(n: usize) -> usize {
    n * n.saturating_sub(1)
}

fn entry_index(n: usize, u: usize, v: usize) -> usize {
    u * (n - 1) + if v < u { v } else { v - 1 }
}

/// Offdiag mask reordered so that the first entry is the most significant bit.
pub fn key_of_mask(n: usize, mask: u64) -> u64 {
    let m = entries(n);
    if m == 0 {
        0
    } else {
        mask.reverse_bits() >> (64 - m)
    }
}

fn mask_of_key(n: usize, key: u64) -> u64 {
    key_of_mask(n, key)
}

/// For every permutation, the key bit that each mask bit lands on.
fn bit_targets(n: usize) -> Vec<Vec<u8>> {
    let m = entries(n);
    (0..n)
        .permutations(n)
        .map(|p| {
            let mut t = vec![0u8; m];
            for u in 0..n {
                for v in (0..n).filter(|&v| v != u) {
                    t[entry_index(n, u, v)] = (m - 1 - entry_index(n, p[u], p[v])) as u8;
                }
            }
            t
        })
        .collect()
}

struct ByteTables {
    chunks: usize,
    /// `[perm][chunk][byte]`, flattened.
    table: Vec<u64>,
}

fn byte_tables(n: usize) -> &'static ByteTables {
    static TABLES: [OnceLock<ByteTables>; TABLE_ORDER + 1] = [const { OnceLock::new() }; TABLE_ORDER + 1];
    TABLES[n].get_or_init(|| {
        let m = entries(n);
        let chunks = m.div_ceil(8).max(1);
        let mut table = Vec::new();
        for t in bit_targets(n) {
            for c in 0..chunks {
                for byte in 0..256usize {
                    let mut out = 0u64;
                    for j in 0..8 {
                        let b = 8 * c + j;
                        if b < m && byte >> j & 1 == 1 {
                            out |= 1 << t[b];
                        }
                    }
                    table.push(out);
                }
            }
        }
        ByteTables { chunks, table }
    })
}

fn direct_targets(n: usize) -> &'static [Vec<u8>] {
    static TARGETS: [OnceLock<Vec<Vec<u8>>>; MAX_CANONICAL_ORDER + 1] =
        [const { OnceLock::new() }; MAX_CANONICAL_ORDER + 1];
    TARGETS[n].get_or_init(|| bit_targets(n))
}

/// Least key over all relabellings, or `None` above [`MAX_CANONICAL_ORDER`].
pub fn canonical_key(d: &Digraph) -> Option<u64> {
    let n = d.order();
    if n > MAX_CANONICAL_ORDER {
        return None;
    }
    let mask = d.offdiag_mask();
    if n <= TABLE_ORDER {
        let t = byte_tables(n);
        let per_perm = t.chunks * 256;
        let bytes: Vec<usize> = (0..t.chunks).map(|c| (mask >> (8 * c) & 0xff) as usize).collect();
        return t
            .table
            .chunks_exact(per_perm)
            .map(|row| bytes.iter().enumerate().fold(0u64, |k, (c, &b)| k | row[c * 256 + b]))
            .min();
    }
    direct_targets(n)
        .iter()
        .map(|t| {
            let mut key = 0u64;
            let mut rest = mask;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                key |= 1 << t[b];
                rest &= rest - 1;
            }
            key
        })
        .min()
}

/// The lexicographically least relabelling of `d`.
pub fn canonical_form(d: &Digraph) -> Option<Digraph> {
    let n = d.order();
    canonical_key(d).map(|key| Digraph::from_offdiag_mask(n, mask_of_key(n, key)))
}

/// Canonical forms of all isomorphism classes of order `n <= 5`, sorted by key.
pub fn isomorphism_class_representatives(n: usize) -> Option<&'static [Digraph]> {
    static REPS: [OnceLock<Vec<Digraph>>; 6] = [const { OnceLock::new() }; 6];
    if n == 0 || n > 5 {
        return None;
    }
    Some(REPS[n].get_or_init(|| {
        let m = entries(n);
        let mut keys: Vec<u64> = (0..1u64 << m)
            .filter_map(|mask| {
                let key = canonical_key(&Digraph::from_offdiag_mask(n, mask))?;
                (key == key_of_mask(n, mask)).then_some(key)
            })
            .collect();
        keys.sort_unstable();
        keys.into_iter().map(|k| Digraph::from_offdiag_mask(n, mask_of_key(n, k))).collect()
    }))
}
