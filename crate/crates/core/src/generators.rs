//! Seeded instance generators and hand-built fixtures.
//!
//! All randomness comes from SplitMix64 (state initialised to the seed,
//! outputs as in the reference `splitmix64.c`), published here under the name
//! [`RNG_NAME`]. Draws are mapped to ranges with the multiply-shift method:
//! `lo + (x * span) >> 64`. Unit floats are `(x >> 11) / 2^53`.

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::ordering::DualOrdering;

/// Name and version of the random stream behind every generator.
pub const RNG_NAME: &str = "splitmix64-v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenKind {
    Staircase,
    Chain,
    RandomBipartite,
    Fig1,
}

/// Everything needed to reproduce one generated instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n_a: usize,
    pub n_b: usize,
    /// Edge probability, used by `random_bipartite` only.
    pub density: f64,
    pub seed: u64,
}

impl GenSpec {
    /// The graph and, for the structured kinds, its certifying ordering.
    pub fn generate(&self) -> Result<(BipartiteGraph, Option<DualOrdering>)> {
        match self.kind {
            GenKind::Staircase => {
                let (g, d) = gen_staircase(self.n_a, self.n_b, self.seed)?;
                Ok((g, Some(d)))
            }
            GenKind::Chain => {
                let (g, d) = gen_chain(self.n_a, self.n_b, self.seed)?;
                Ok((g, Some(d)))
            }
            GenKind::RandomBipartite => Ok((
                gen_random_bipartite(self.n_a, self.n_b, self.density, self.seed)?,
                None,
            )),
            GenKind::Fig1 => Ok((fig1_graph(), None)),
        }
    }
}

/// Thin wrapper that turns the raw stream into the draws generators need.
pub struct Stream(SplitMix64);

impl Stream {
    pub fn new(seed: u64) -> Self {
        Stream(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        assert!(lo <= hi, "empty range {lo}..={hi}");
        let span = (hi - lo) as u128 + 1;
        lo + ((self.next_u64() as u128 * span) >> 64) as usize
    }

    /// Uniform in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

fn check_counts(n_a: usize, n_b: usize) -> Result<()> {
    if n_a == 0 || n_b == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(())
}

/// A graph given by one interval `[l, r]` of B per A-vertex.
pub fn from_intervals(n_b: usize, intervals: &[(usize, usize)]) -> Result<BipartiteGraph> {
    let edges: Vec<(usize, usize)> = intervals
        .iter()
        .enumerate()
        .flat_map(|(i, &(l, r))| (l..=r).map(move |b| (i + 1, b)))
        .collect();
    BipartiteGraph::new(intervals.len(), n_b, &edges)
}

fn certified(g: BipartiteGraph) -> Result<(BipartiteGraph, DualOrdering)> {
    let d = DualOrdering::natural(g.n_a(), g.n_b()).verify(&g)?;
    Ok((g, d))
}

/// Intervals `[l_i, r_i]` with both ends non-decreasing, each meeting the
/// next, starting at `b_1` and ending at `b_{n_b}`.
pub fn gen_staircase(n_a: usize, n_b: usize, seed: u64) -> Result<(BipartiteGraph, DualOrdering)> {
    check_counts(n_a, n_b)?;
    let mut rng = Stream::new(seed);
    let mut rights: Vec<usize> = (0..n_a).map(|_| rng.range(1, n_b)).collect();
    rights.sort_unstable();
    rights[n_a - 1] = n_b;
    let mut intervals = Vec::with_capacity(n_a);
    let mut l = 1;
    for (i, &r) in rights.iter().enumerate() {
        if i > 0 {
            l = rng.range(l, rights[i - 1]);
        }
        intervals.push((l, r));
    }
    certified(from_intervals(n_b, &intervals)?)
}

/// Nested prefixes `N(a_i) = {b_1, ..., b_{d_i}}` with `d` non-decreasing and
/// `d_{n_a} = n_b`.
pub fn gen_chain(n_a: usize, n_b: usize, seed: u64) -> Result<(BipartiteGraph, DualOrdering)> {
    check_counts(n_a, n_b)?;
    let mut rng = Stream::new(seed);
    let mut ends: Vec<usize> = (0..n_a).map(|_| rng.range(1, n_b)).collect();
    ends.sort_unstable();
    ends[n_a - 1] = n_b;
    let intervals: Vec<_> = ends.into_iter().map(|r| (1, r)).collect();
    certified(from_intervals(n_b, &intervals)?)
}

/// Each of the `n_a * n_b` possible edges, in `(a, b)` lexicographic order,
/// is kept when a unit draw falls below `density`.
pub fn gen_random_bipartite(n_a: usize, n_b: usize, density: f64, seed: u64) -> Result<BipartiteGraph> {
    check_counts(n_a, n_b)?;
    if !(density > 0.0 && density <= 1.0) {
        return Err(Error::InvalidDensity(density));
    }
    let mut rng = Stream::new(seed);
    let mut edges = Vec::new();
    for a in 1..=n_a {
        for b in 1..=n_b {
            if rng.unit() < density {
                edges.push((a, b));
            }
        }
    }
    BipartiteGraph::new(n_a, n_b, &edges)
}

/// The seven-vertex tree `a_1` joined to `b_1, b_2, b_3`, each `b_j` carrying
/// one more leaf `a_{j+1}`: convex, but with no spanning caterpillar.
pub fn fig1_graph() -> BipartiteGraph {
    BipartiteGraph::new(4, 3, &[(1, 1), (1, 2), (1, 3), (2, 1), (3, 2), (4, 3)])
        .expect("fixed instance")
}

/// The path `v_1 ... v_m` with `v_{2i-1} = a_i` and `v_{2i} = b_i`.
pub fn path_graph(m: usize) -> Result<BipartiteGraph> {
    if m == 0 {
        return Err(Error::EmptyGraph);
    }
    let edges: Vec<(usize, usize)> = (1..m)
        .map(|i| {
            if i % 2 == 1 {
                (i.div_ceil(2), i.div_ceil(2))
            } else {
                (i / 2 + 1, i / 2)
            }
        })
        .collect();
    BipartiteGraph::new(m.div_ceil(2), m / 2, &edges)
}

/// Hand-built instances that reach the replacement branches of the
/// construction, each with a natural straight ordering.
pub mod fixtures {
    use super::*;

    /// a1:{b1,b2}, a2:{b2,b3,b4}, a3:{b3,b4,b5}, a4:{b3}.
    pub fn nine_vertex() -> (BipartiteGraph, DualOrdering) {
        build(5, &[(1, 2), (2, 4), (3, 5), (3, 3)])
    }

    /// a1:{b1,b2,b3}, a2:{b3,b4,b5}, a3:{b4}: `a_3` is stranded on the right.
    pub fn replacement_right() -> (BipartiteGraph, DualOrdering) {
        build(5, &[(1, 3), (3, 5), (4, 4)])
    }

    /// Mirror image of [`replacement_right`].
    pub fn replacement_left() -> (BipartiteGraph, DualOrdering) {
        build(5, &[(2, 2), (1, 3), (3, 5)])
    }

    /// Stranded A-vertices at both ends.
    pub fn replacement_both() -> (BipartiteGraph, DualOrdering) {
        build(7, &[(2, 2), (1, 3), (3, 5), (5, 7), (6, 6)])
    }

    /// Only the B-ends share a neighbor, so the construction swaps parts.
    pub fn swapped_common_one() -> (BipartiteGraph, DualOrdering) {
        build(3, &[(1, 1), (1, 3), (2, 2), (2, 2)])
    }

    type Fixture = fn() -> (BipartiteGraph, DualOrdering);

    /// Every fixture with a short name.
    pub fn all() -> Vec<(&'static str, BipartiteGraph, DualOrdering)> {
        let named: [(&str, Fixture); 5] = [
            ("nine_vertex", nine_vertex),
            ("replacement_right", replacement_right),
            ("replacement_left", replacement_left),
            ("replacement_both", replacement_both),
            ("swapped_common_one", swapped_common_one),
        ];
        named
            .into_iter()
            .map(|(name, f)| {
                let (g, d) = f();
                (name, g, d)
            })
            .collect()
    }

    fn build(n_b: usize, intervals: &[(usize, usize)]) -> (BipartiteGraph, DualOrdering) {
        certified(from_intervals(n_b, intervals).expect("fixed instance")).expect("fixture is straight")
    }
}

/// Seeded corpora shared by the test suites, examples and the `check` verb.
pub mod corpus {
    use super::*;

    /// Staircase for even seeds, chain for odd ones; both counts in `1..=max`.
    pub fn structured(seed: u64, max: usize) -> (GenKind, BipartiteGraph, DualOrdering) {
        let mut rng = Stream::new(seed ^ 0x5eed_c0de);
        let n_a = rng.range(1, max);
        let n_b = rng.range(1, max);
        if seed % 2 == 0 {
            let (g, d) = gen_staircase(n_a, n_b, seed).expect("positive counts");
            (GenKind::Staircase, g, d)
        } else {
            let (g, d) = gen_chain(n_a, n_b, seed).expect("positive counts");
            (GenKind::Chain, g, d)
        }
    }

    /// Structured instance with at most `max_order` vertices in total.
    pub fn structured_small(seed: u64, max_order: usize) -> (GenKind, BipartiteGraph, DualOrdering) {
        let mut rng = Stream::new(seed ^ 0x0005_a11e);
        let n_a = rng.range(1, max_order - 1);
        let n_b = rng.range(1, max_order - n_a);
        if seed % 2 == 0 {
            let (g, d) = gen_staircase(n_a, n_b, seed).expect("positive counts");
            (GenKind::Staircase, g, d)
        } else {
            let (g, d) = gen_chain(n_a, n_b, seed).expect("positive counts");
            (GenKind::Chain, g, d)
        }
    }

    /// Random bipartite graph with both counts in `1..=max` and density in
    /// `[0.3, 0.9)`.
    pub fn random(seed: u64, max: usize) -> BipartiteGraph {
        let mut rng = Stream::new(seed ^ 0x0ab1_7a55);
        let n_a = rng.range(1, max);
        let n_b = rng.range(1, max);
        let density = 0.3 + 0.6 * rng.unit();
        gen_random_bipartite(n_a, n_b, density, seed).expect("valid parameters")
    }
}
