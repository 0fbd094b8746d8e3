//! Seeded random graph sets.
//!
//! # Reproducibility
//!
//! All randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`). Graph `k`
//! of a set draws from the stream `ChaCha8Rng::seed_from_u64(seed)` with
//! stream id `k`, so every graph depends only on `(seed, k)` and sets can be
//! generated in parallel without changing a single byte. Within a graph the
//! draws are, in order:
//!
//! 1. `n` uniform on `n1..=n2`,
//! 2. the requested arc count uniform on `m1..=m2`, then clamped to
//!    `n * (n - 1)`,
//! 3. for each arc: an ordered-pair index by one step of a partial
//!    Fisher-Yates shuffle over the `n * (n - 1)` loop-free pairs, followed by
//!    its weight uniform on `1..=weight_max`.
//!
//! Uniform integers use `rand` 0.9's `random_range`; the exact crate versions
//! are pinned by `Cargo.lock`.

use std::collections::HashMap;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{max_arcs, Arc, Graph};

pub const DEFAULT_WEIGHT_MAX: u64 = 100;

/// Generation parameters: node and arc count bounds, set size, seed and the
/// largest arc weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenSpec {
    pub n1: usize,
    pub n2: usize,
    pub m1: usize,
    pub m2: usize,
    pub count: usize,
    pub seed: u64,
    pub weight_max: u64,
}

impl GenSpec {
    /// Fixed `n` and `m` for every graph.
    pub fn fixed(n: usize, m: usize, count: usize, seed: u64) -> Self {
        GenSpec::interval((n, n), (m, m), count, seed)
    }

    pub fn interval(n: (usize, usize), m: (usize, usize), count: usize, seed: u64) -> Self {
        GenSpec {
            n1: n.0,
            n2: n.1,
            m1: m.0,
            m2: m.1,
            count,
            seed,
            weight_max: DEFAULT_WEIGHT_MAX,
        }
    }

    pub fn with_weight_max(mut self, weight_max: u64) -> Self {
        self.weight_max = weight_max;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidParameter(msg));
        if self.n1 < 2 || self.n1 > self.n2 {
            return fail(format!(
                "node bounds need 2 <= n1 <= n2, got {}..{}",
                self.n1, self.n2
            ));
        }
        if self.m1 < 1 || self.m1 > self.m2 {
            return fail(format!(
                "arc bounds need 1 <= m1 <= m2, got {}..{}",
                self.m1, self.m2
            ));
        }
        if self.count < 1 {
            return fail("graph count must be at least 1".into());
        }
        if !(1..=crate::weight::MAX_ARC_WEIGHT).contains(&self.weight_max) {
            return fail(format!(
                "weight_max must be in 1..={}",
                crate::weight::MAX_ARC_WEIGHT
            ));
        }
        max_arcs(self.n2)?;
        Ok(())
    }
}

/// Deterministic random stream (ChaCha8).
#[derive(Debug, Clone)]
pub struct RngStream(ChaCha8Rng);

impl RngStream {
    pub fn new(seed: u64) -> Self {
        RngStream(ChaCha8Rng::seed_from_u64(seed))
    }

    /// The stream used for graph `index` of a set generated with `seed`.
    pub fn for_graph(seed: u64, index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        RngStream(rng)
    }

    /// Uniform integer in `lo..=hi`.
    pub fn uniform(&mut self, lo: u64, hi: u64) -> u64 {
        self.0.random_range(lo..=hi)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }
}

/// Draws `(n, m_requested)` for one graph, `n` first.
pub fn draw_spec_instance(spec: &GenSpec, rng: &mut RngStream) -> (usize, usize) {
    let n = rng.uniform(spec.n1 as u64, spec.n2 as u64) as usize;
    let m = rng.uniform(spec.m1 as u64, spec.m2 as u64) as usize;
    (n, m)
}

/// A graph on `n` nodes with `min(m_requested, n(n-1))` distinct arcs chosen
/// uniformly without replacement and weights uniform on `1..=weight_max`.
pub fn draw_graph(n: usize, m_requested: usize, weight_max: u64, rng: &mut RngStream) -> Graph {
    let pairs = max_arcs(n).expect("draw_graph needs n >= 2");
    let m = m_requested.min(pairs);

    // Partial Fisher-Yates over the virtual array 0..pairs; only displaced
    // slots are stored.
    let mut displaced: HashMap<usize, usize> = HashMap::with_capacity(m);
    let mut arcs = Vec::with_capacity(m);
    for k in 0..m {
        let r = rng.uniform(k as u64, (pairs - 1) as u64) as usize;
        let picked = *displaced.get(&r).unwrap_or(&r);
        let at_k = *displaced.get(&k).unwrap_or(&k);
        displaced.insert(r, at_k);

        let (from, to) = pair_from_index(n, picked);
        let weight = rng.uniform(1, weight_max);
        arcs.push(Arc::new(from, to, weight));
    }
    Graph::from_parts_unchecked(n, arcs)
}

// Index p in 0..n(n-1) -> 1-based ordered pair (i, j), i != j, row-major.
fn pair_from_index(n: usize, p: usize) -> (usize, usize) {
    let i = p / (n - 1);
    let r = p % (n - 1);
    let j = if r < i { r } else { r + 1 };
    (i + 1, j + 1)
}

/// Per-set generation tallies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GenSummary {
    pub graphs: usize,
    /// Graphs whose requested arc count exceeded `n(n-1)`.
    pub clamped: usize,
}

pub fn generate_set(spec: &GenSpec) -> Result<Vec<Graph>> {
    generate_set_with_summary(spec).map(|(graphs, _)| graphs)
}

pub fn generate_set_with_summary(spec: &GenSpec) -> Result<(Vec<Graph>, GenSummary)> {
    spec.validate()?;
    let drawn: Vec<(Graph, bool)> = (0..spec.count)
        .into_par_iter()
        .map(|k| {
            let mut rng = RngStream::for_graph(spec.seed, k as u64);
            let (n, m) = draw_spec_instance(spec, &mut rng);
            let g = draw_graph(n, m, spec.weight_max, &mut rng);
            let clamped = g.arc_count() < m;
            (g, clamped)
        })
        .collect();
    let summary = GenSummary {
        graphs: drawn.len(),
        clamped: drawn.iter().filter(|(_, c)| *c).count(),
    };
    Ok((drawn.into_iter().map(|(g, _)| g).collect(), summary))
}

/// Derives an independent 64-bit seed from `(seed, index)` with the
/// SplitMix64 finalizer.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
