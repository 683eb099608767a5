//! Seeded random digraphs. Sample `i` of a run depends only on the seed and
//! `i`, so any split of the index range reproduces the same digraphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::digraph::Digraph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SampleError {
    #[error("arc probability {0} is not strictly between 0 and 1")]
    Probability(f64),
    #[error("no arc probabilities given")]
    NoProbabilities,
    #[error("order {0} is out of range")]
    Order(usize),
}

fn check_probability(p: f64) -> Result<(), SampleError> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(SampleError::Probability(p))
    }
}

/// Sample `index` for `seed`: every ordered pair is an arc independently
/// with probability `p`, drawn in row-major order.
pub fn sample_digraph(n: usize, seed: u64, index: u64, p: f64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut rows = vec![0u64; n];
    for (u, row) in rows.iter_mut().enumerate() {
        for v in (0..n).filter(|&v| v != u) {
            if rng.gen_bool(p) {
                *row |= 1 << v;
            }
        }
    }
    Digraph::from_out_rows(n, &rows).expect("no loops are drawn")
}

pub fn sample_digraphs(
    n: usize,
    count: u64,
    seed: u64,
    arc_probability: f64,
) -> Result<impl Iterator<Item = Digraph>, SampleError> {
    SampleSpec::new(n, count, seed, vec![arc_probability]).map(|s| (0..count).map(move |i| s.get(i)))
}

/// `count` samples; sample `i` uses `probabilities[i % len]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSpec {
    n: usize,
    count: u64,
    seed: u64,
    probabilities: Vec<f64>,
}

impl SampleSpec {
    pub fn new(n: usize, count: u64, seed: u64, probabilities: Vec<f64>) -> Result<Self, SampleError> {
        if n == 0 || n > crate::MAX_ORDER {
            return Err(SampleError::Order(n));
        }
        if probabilities.is_empty() {
            return Err(SampleError::NoProbabilities);
        }
        for &p in &probabilities {
            check_probability(p)?;
        }
        Ok(SampleSpec { n, count, seed, probabilities })
    }

    pub fn len(&self) -> u64 {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn get(&self, i: u64) -> Digraph {
        let p = self.probabilities[(i % self.probabilities.len() as u64) as usize];
        sample_digraph(self.n, self.seed, i, p)
    }
}
