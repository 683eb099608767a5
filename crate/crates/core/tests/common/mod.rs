#![allow(dead_code)]

use cyclab::harness::{isomorphism_class_representatives, IsoCover};
use cyclab::cycles::{cycles_of_length, insert_path, Host};
use cyclab::{Digraph, VertexCycle, VertexPath, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

/// Every labelled digraph on `n` vertices.
pub fn labelled(n: usize) -> impl Iterator<Item = Digraph> {
    let bits = n * n.saturating_sub(1);
    (0..1u64 << bits).map(move |mask| Digraph::from_offdiag_mask(n, mask))
}

/// At least one digraph from each isomorphism class on `n <= 6` vertices.
pub fn up_to_isomorphism(n: usize) -> Box<dyn Iterator<Item = Digraph>> {
    if n <= 5 {
        Box::new(isomorphism_class_representatives(n).unwrap().iter().cloned())
    } else {
        let cover = IsoCover::new(n).unwrap();
        Box::new((0..cover.len()).map(move |i| cover.get(i)))
    }
}

/// Strongness by plain breadth-first search from every vertex.
pub fn strong_by_search(d: &Digraph) -> bool {
    let n = d.order();
    (0..n).all(|s| {
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::from([s]);
        seen[s] = true;
        while let Some(u) = queue.pop_front() {
            for (v, mark) in seen.iter_mut().enumerate() {
                if d.has_arc(u, v) && !*mark {
                    *mark = true;
                    queue.push_back(v);
                }
            }
        }
        seen.iter().all(|&b| b)
    })
}

/// Whether `d` has a cycle of length `k`, by trying every vertex sequence.
pub fn cycle_by_sequences(d: &Digraph, k: usize) -> bool {
    fn grow(d: &Digraph, k: usize, seq: &mut Vec<usize>) -> bool {
        let first = seq[0];
        let last = *seq.last().unwrap();
        if seq.len() == k {
            return d.has_arc(last, first);
        }
        for v in first + 1..d.order() {
            if !seq.contains(&v) && d.has_arc(last, v) {
                seq.push(v);
                if grow(d, k, seq) {
                    return true;
                }
                seq.pop();
            }
        }
        false
    }
    k >= 2 && (0..d.order()).any(|s| grow(d, k, &mut vec![s]))
}


/// A digraph with a host `q` and a path `p` built so that a known split of
/// `p` into consecutive pieces fits seams of `q`, plus random extra arcs.
pub fn multi_insertion_trial<R: Rng>(rng: &mut R) -> (Digraph, Vec<usize>, Host) {
    let n = rng.gen_range(3..=12);
    let q_len = rng.gen_range(2..n);
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let (q, p) = labels.split_at(q_len);
    let cycle = rng.gen_bool(0.5);
    let seams = if cycle { q_len } else { q_len - 1 };
    let mut arcs = Vec::new();
    let host_arcs = if cycle { q_len } else { q_len - 1 };
    arcs.extend((0..host_arcs).map(|i| (q[i], q[(i + 1) % q_len])));
    arcs.extend(p.windows(2).map(|w| (w[0], w[1])));
    let mut start = 0;
    while start < p.len() {
        let end = rng.gen_range(start + 1..=p.len());
        let s = rng.gen_range(0..seams);
        arcs.push((q[s], p[start]));
        arcs.push((p[end - 1], q[(s + 1) % q_len]));
        start = end;
    }
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(0.15) {
                arcs.push((u, v));
            }
        }
    }
    let d = Digraph::new(n, arcs).unwrap();
    let host = if cycle { Host::Cycle(VertexCycle::new(q.to_vec())) } else { Host::Path(VertexPath::new(q.to_vec())) };
    (d, p.to_vec(), host)
}

/// Every path of `d` with at least `min_len` vertices.
pub fn all_paths(d: &Digraph, min_len: usize) -> Vec<Vec<usize>> {
    fn grow(d: &Digraph, min_len: usize, seq: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if seq.len() >= min_len {
            out.push(seq.clone());
        }
        let last = *seq.last().unwrap();
        for v in 0..d.order() {
            if !seq.contains(&v) && d.has_arc(last, v) {
                seq.push(v);
                grow(d, min_len, seq, out);
                seq.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..d.order() {
        grow(d, min_len, &mut vec![s], &mut out);
    }
    out
}

/// Vertices whose degree into a path or cycle they cannot be inserted into
/// exceeds the bound for single-vertex insertion.
pub fn insertion_bound_violations(d: &Digraph) -> Vec<String> {
    let mut bad = Vec::new();
    for p in all_paths(d, 2) {
        let on: VertexSet = p.iter().copied().collect();
        let host = Host::Path(VertexPath::new(p.clone()));
        for v in d.vertices().difference(on) {
            if insert_path(d, &[v], &host).unwrap().is_some() {
                continue;
            }
            let deg = d.degree_into(v, on);
            let open_end = !d.has_arc(v, p[0]) || !d.has_arc(p[p.len() - 1], v);
            if deg > p.len() + 1 || (open_end && deg > p.len()) {
                bad.push(format!("{d:?}: vertex {v}, path {p:?}, degree {deg}"));
            }
        }
    }
    for k in 3..=d.order() {
        for c in cycles_of_length(d, k) {
            let on = c.vertex_set();
            let host = Host::Cycle(c.clone());
            for v in d.vertices().difference(on) {
                if insert_path(d, &[v], &host).unwrap().is_none() && d.degree_into(v, on) > k {
                    bad.push(format!("{d:?}: vertex {v}, cycle {c:?}"));
                }
            }
        }
    }
    bad
}
