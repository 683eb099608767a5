//! Seeded generators for the test corpus and the `gen` subcommands.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::Digraph;
use crate::family::local::is_local_tournament;
use crate::family::round::is_round_labeling;

/// Directed cycle `C_n`, arcs `i -> i+1 (mod n)`. For `n = 1` the single vertex.
pub fn gen_cycle(n: usize) -> Digraph {
    assert!(n >= 1, "order must be positive");
    if n == 1 {
        return Digraph::empty(1).unwrap();
    }
    Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// Complete bipartite digraph with parts `0..m` and `m..2m`, all arcs both ways.
pub fn gen_bicomplete(m: usize) -> Digraph {
    assert!(m >= 1, "part size must be positive");
    let arcs = (0..m).flat_map(|a| (m..2 * m).flat_map(move |b| [(a, b), (b, a)]));
    Digraph::new(2 * m, arcs).unwrap()
}

/// Complete digraph on `n` vertices (all arcs both ways).
pub fn gen_complete(n: usize) -> Digraph {
    let arcs = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)));
    Digraph::new(n, arcs).unwrap()
}

pub fn gen_tournament_random(n: usize, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            arcs.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
        }
    }
    Digraph::new(n, arcs).unwrap()
}

/// Random strong semicomplete digraph (a random tournament plus random
/// reverse arcs, resampled until strong).
pub fn gen_strong_semicomplete_random(n: usize, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n == 1 {
        return Digraph::empty(1).unwrap();
    }
    loop {
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                match rng.gen_range(0..3) {
                    0 => arcs.push((u, v)),
                    1 => arcs.push((v, u)),
                    _ => arcs.extend([(u, v), (v, u)]),
                }
            }
        }
        let d = Digraph::new(n, arcs).unwrap();
        if d.is_strong() {
            return d;
        }
    }
}

/// Random round local tournament, labelled in round order.
///
/// Out-degrees are drawn at random, each out-neighbourhood is the run of
/// consecutive successors, and the draw is rejected unless every
/// in-neighbourhood is consecutive and the result is a local tournament.
pub fn gen_round_local_tournament_random(n: usize, seed: u64) -> Digraph {
    assert!(n >= 1, "order must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n <= 2 {
        return Digraph::new(n, (1..n).map(|v| (0, v))).unwrap();
    }
    let max_out = n / 2;
    loop {
        let degrees: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=max_out.max(1))).collect();
        let arcs = (0..n).flat_map(|i| (1..=degrees[i]).map(move |s| (i, (i + s) % n)));
        let d = Digraph::new(n, arcs).unwrap();
        let order: Vec<usize> = (0..n).collect();
        if is_local_tournament(&d) && is_round_labeling(&d, &order) {
            return d;
        }
    }
}

/// Uniformly shuffled relabelling of `d`.
pub fn shuffle_labels(d: &Digraph, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..d.order()).collect();
    perm.shuffle(&mut rng);
    d.relabel(&perm)
}
