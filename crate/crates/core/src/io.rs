//! Text formats: adjacency matrix, digraph6 and DOT.
//!
//! Adjacency text is a line holding `n` followed by `n` rows of `n`
//! characters `0`/`1`; entry `(i, j)` is `1` iff `i -> j`.
//!
//! digraph6 is `&`, then the graph6 size prefix for `n`, then the `n*n`
//! adjacency bits in row-major order packed six to a byte with offset 63.

use std::fmt::Write as _;

use thiserror::Error;

use crate::digraph::{Digraph, GraphError, VertexCycle};
use crate::vertex_set::MAX_ORDER;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("missing or malformed header: {0}")]
    Header(String),
    #[error("row {row} has {found} entries, expected {expected}")]
    NotSquare { row: usize, found: usize, expected: usize },
    #[error("expected {expected} matrix rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("invalid matrix entry {ch:?} at row {row}, column {col}")]
    BadEntry { row: usize, col: usize, ch: char },
    #[error("diagonal entry at vertex {0} is set (loops are not allowed)")]
    DiagonalSet(usize),
    #[error("digraph6 string must start with '&'")]
    MissingDigraph6Marker,
    #[error("illegal digraph6 character {ch:?} at byte {pos}")]
    IllegalCharacter { pos: usize, ch: char },
    #[error("digraph6 body has {found} bytes, expected {expected}")]
    Digraph6Length { expected: usize, found: usize },
    #[error("digraph6 padding bits are not zero")]
    NonZeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses the adjacency-matrix text format.
pub fn read_adjacency_text(text: &str) -> Result<Digraph, FormatError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| FormatError::Header("empty input".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| FormatError::Header(format!("{header:?} is not a vertex count")))?;
    if n == 0 || n > MAX_ORDER {
        return Err(FormatError::Header(format!("order {n} outside 1..={MAX_ORDER}")));
    }
    let mut rows = vec![0u64; n];
    let mut found = 0;
    for (i, line) in lines.enumerate() {
        if i >= n {
            return Err(FormatError::RowCount { expected: n, found: i + 1 });
        }
        let chars: Vec<char> = line.chars().collect();
        if chars.len() != n {
            return Err(FormatError::NotSquare { row: i, found: chars.len(), expected: n });
        }
        for (j, &ch) in chars.iter().enumerate() {
            match ch {
                '0' => {}
                '1' if i == j => return Err(FormatError::DiagonalSet(i)),
                '1' => rows[i] |= 1 << j,
                _ => return Err(FormatError::BadEntry { row: i, col: j, ch }),
            }
        }
        found = i + 1;
    }
    if found != n {
        return Err(FormatError::RowCount { expected: n, found });
    }
    Ok(Digraph::from_out_rows(n, &rows)?)
}

pub fn write_adjacency_text(d: &Digraph) -> String {
    let n = d.order();
    let mut s = String::with_capacity((n + 1) * (n + 1));
    let _ = writeln!(s, "{n}");
    for u in 0..n {
        for v in 0..n {
            s.push(if d.has_arc(u, v) { '1' } else { '0' });
        }
        s.push('\n');
    }
    s
}

pub fn write_digraph6(d: &Digraph) -> String {
    let n = d.order();
    let mut s = String::from("&");
    if n <= 62 {
        s.push((n as u8 + 63) as char);
    } else {
        s.push('~');
        for shift in [12, 6, 0] {
            s.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let total = n * n;
    let mut acc = 0u8;
    let mut filled = 0;
    for k in 0..total {
        let (u, v) = (k / n, k % n);
        acc = (acc << 1) | d.has_arc(u, v) as u8;
        filled += 1;
        if filled == 6 {
            s.push((acc + 63) as char);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        s.push(((acc << (6 - filled)) + 63) as char);
    }
    s
}

pub fn read_digraph6(text: &str) -> Result<Digraph, FormatError> {
    let bytes = text.trim().as_bytes();
    if bytes.first() != Some(&b'&') {
        return Err(FormatError::MissingDigraph6Marker);
    }
    let sextet = |pos: usize| -> Result<u8, FormatError> {
        match bytes.get(pos) {
            Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
            Some(&b) => Err(FormatError::IllegalCharacter { pos, ch: b as char }),
            None => Err(FormatError::Header("truncated size prefix".into())),
        }
    };
    let (n, body_start) = if bytes.get(1) == Some(&b'~') {
        if bytes.get(2) == Some(&b'~') {
            return Err(FormatError::Header(format!("order exceeds {MAX_ORDER}")));
        }
        let n = (0..3).try_fold(0usize, |acc, i| Ok::<_, FormatError>((acc << 6) | sextet(2 + i)? as usize))?;
        (n, 5)
    } else {
        (sextet(1)? as usize, 2)
    };
    if n == 0 || n > MAX_ORDER {
        return Err(FormatError::Header(format!("order {n} outside 1..={MAX_ORDER}")));
    }
    let body = &bytes[body_start..];
    let expected = (n * n).div_ceil(6);
    if body.len() != expected {
        return Err(FormatError::Digraph6Length { expected, found: body.len() });
    }
    let mut rows = vec![0u64; n];
    for (i, _) in body.iter().enumerate() {
        let val = sextet(body_start + i)?;
        for b in 0..6 {
            let k = i * 6 + b;
            let bit = (val >> (5 - b)) & 1;
            if k >= n * n {
                if bit != 0 {
                    return Err(FormatError::NonZeroPadding);
                }
                continue;
            }
            if bit == 1 {
                let (u, v) = (k / n, k % n);
                if u == v {
                    return Err(FormatError::DiagonalSet(u));
                }
                rows[u] |= 1 << v;
            }
        }
    }
    Ok(Digraph::from_out_rows(n, &rows)?)
}

/// Reads every digraph in `text`: one digraph6 string per non-empty line,
/// or a single adjacency matrix.
pub fn read_digraphs(text: &str) -> Result<Vec<Digraph>, FormatError> {
    let first = text.trim_start();
    if first.starts_with('&') {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(read_digraph6)
            .collect()
    } else {
        Ok(vec![read_adjacency_text(text)?])
    }
}

/// DOT export; arcs of `highlight` (if any) are drawn bold red.
pub fn write_dot(d: &Digraph, highlight: Option<&VertexCycle>) -> String {
    let mut on_cycle = std::collections::HashSet::new();
    if let Some(c) = highlight {
        for i in 0..c.length() {
            on_cycle.insert((c.at(i), c.at(i + 1)));
        }
    }
    let mut s = String::from("digraph {\n");
    for v in 0..d.order() {
        let _ = writeln!(s, "  v{v};");
    }
    for (u, v) in d.arcs() {
        if on_cycle.contains(&(u, v)) {
            let _ = writeln!(s, "  v{u} -> v{v} [color=red, penwidth=2];");
        } else {
            let _ = writeln!(s, "  v{u} -> v{v};");
        }
    }
    s.push_str("}\n");
    s
}
