//! Graph burning: schedules, an exact solver, and schedules read off a
//! spanning caterpillar.
//!
//! A schedule `x_1 ... x_k` burns the graph when the balls of radius `k - i`
//! around `x_i` cover every vertex. Sources may repeat; this gives the same
//! minimum as the process that only ignites unburned vertices, because a
//! wasted round can always be spent on any unburned vertex instead.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::caterpillar::{
    build_spanning_caterpillar, verify_spanning_caterpillar, Caterpillar, Verdict,
};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, VertexId};
use crate::ordering::DualOrdering;

/// Largest order for which [`check_conjecture`] also runs the exact solver.
pub const EXACT_LIMIT: usize = 20;

/// Search nodes the exact fallback of [`schedule_from_caterpillar`] may visit.
pub const FALLBACK_BUDGET: u64 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BurnSchedule {
    pub sources: Vec<VertexId>,
}

impl BurnSchedule {
    pub fn new(sources: Vec<VertexId>) -> Self {
        BurnSchedule { sources }
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }
}

/// `⌈√n⌉`.
pub fn ceil_sqrt(n: usize) -> usize {
    let mut k = n.isqrt();
    if k * k < n {
        k += 1;
    }
    k
}

fn ball_bits(dist: &[Option<usize>], r: usize) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(dist.len());
    for (i, d) in dist.iter().enumerate() {
        if d.is_some_and(|d| d <= r) {
            bits.insert(i);
        }
    }
    bits
}

/// All vertices within distance `r` of `v`, in vertex order.
pub fn ball(g: &BipartiteGraph, v: VertexId, r: usize) -> Vec<VertexId> {
    ball_bits(&g.distances_from(v), r)
        .ones()
        .map(|i| g.vertex_at(i))
        .collect()
}

/// Ball-coverage test: source `i` (1-based) covers radius `k - i`.
pub fn is_burning_schedule(g: &BipartiteGraph, s: &BurnSchedule) -> bool {
    let k = s.len();
    if k == 0 || s.sources.iter().any(|&v| !g.contains(v)) {
        return false;
    }
    let mut covered = FixedBitSet::with_capacity(g.order());
    for (i, &x) in s.sources.iter().enumerate() {
        covered.union_with(&ball_bits(&g.distances_from(x), k - 1 - i));
    }
    covered.is_full()
}

/// Round-by-round fire spread: in round `i` the fire first spreads one hop,
/// then `x_i` is ignited. True when everything burns by round `k`.
pub fn simulate_fire_spread(g: &BipartiteGraph, sources: &[VertexId]) -> bool {
    if sources.is_empty() || sources.iter().any(|&v| !g.contains(v)) {
        return false;
    }
    let mut burned = vec![false; g.order()];
    for &x in sources {
        let before = burned.clone();
        for v in g.vertices() {
            if before[g.dense(v)] {
                for w in g.neighbors(v) {
                    burned[g.dense(w)] = true;
                }
            }
        }
        burned[g.dense(x)] = true;
    }
    burned.into_iter().all(|b| b)
}

/// Branch-and-bound over ball placements for a fixed schedule length.
struct CoverSearch {
    n: usize,
    /// `balls[r][c]`: vertices within distance `r` of dense vertex `c`.
    balls: Vec<Vec<FixedBitSet>>,
    nodes: u64,
    budget: Option<u64>,
    dead: HashSet<(FixedBitSet, u64)>,
}

enum Outcome {
    Found(Vec<usize>),
    None,
    OutOfBudget,
}

impl CoverSearch {
    fn new(g: &BipartiteGraph, k: usize, budget: Option<u64>) -> Self {
        let dist = g.all_distances();
        let balls = (0..k)
            .map(|r| dist.iter().map(|row| ball_bits(row, r)).collect())
            .collect();
        CoverSearch {
            n: g.order(),
            balls,
            nodes: 0,
            budget,
            dead: HashSet::new(),
        }
    }

    /// Centers indexed by radius, or why there are none.
    fn solve(&mut self) -> Outcome {
        let k = self.balls.len();
        let mut centers = vec![usize::MAX; k];
        let covered = FixedBitSet::with_capacity(self.n);
        let all: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        match self.extend(&covered, all, &mut centers) {
            Some(true) => Outcome::Found(centers),
            Some(false) => Outcome::None,
            None => Outcome::OutOfBudget,
        }
    }

    /// `None` when the budget ran out.
    fn extend(&mut self, covered: &FixedBitSet, free: u64, centers: &mut [usize]) -> Option<bool> {
        if covered.is_full() {
            return Some(true);
        }
        if free == 0 {
            return Some(false);
        }
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            return None;
        }
        if self.dead.contains(&(covered.clone(), free)) {
            return Some(false);
        }
        let radii: Vec<usize> = (0..self.balls.len()).rev().filter(|r| free >> r & 1 == 1).collect();
        let uncovered: Vec<usize> = (0..self.n).filter(|&v| !covered.contains(v)).collect();

        // Capacity bound: the best ball of each free radius together.
        let capacity: usize = radii
            .iter()
            .map(|&r| {
                self.balls[r]
                    .iter()
                    .map(|b| b.difference_count(covered))
                    .max()
                    .unwrap_or(0)
            })
            .sum();
        if capacity < uncovered.len() {
            self.dead.insert((covered.clone(), free));
            return Some(false);
        }

        // Some free ball must cover the uncovered vertex with fewest options.
        let options = |u: usize| -> usize { radii.iter().map(|&r| self.balls[r][u].count_ones(..)).sum() };
        let u = uncovered.iter().copied().min_by_key(|&u| options(u)).expect("not full");
        for &r in &radii {
            let mut seen = HashSet::new();
            for c in self.balls[r][u].ones().collect::<Vec<_>>() {
                let mut next = covered.clone();
                next.union_with(&self.balls[r][c]);
                if !seen.insert(next.clone()) {
                    continue;
                }
                centers[r] = c;
                match self.extend(&next, free & !(1 << r), centers) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
            }
            centers[r] = usize::MAX;
        }
        self.dead.insert((covered.clone(), free));
        Some(false)
    }
}

/// Turns centers indexed by radius into a schedule; radii left unused get
/// the first vertex not yet a source.
fn schedule_from_centers(g: &BipartiteGraph, centers: &[usize]) -> BurnSchedule {
    let k = centers.len();
    let mut used: Vec<usize> = centers.iter().copied().filter(|&c| c != usize::MAX).collect();
    let mut sources = Vec::with_capacity(k);
    for r in (0..k).rev() {
        let c = if centers[r] != usize::MAX {
            centers[r]
        } else {
            let filler = (0..g.order()).find(|v| !used.contains(v)).unwrap_or(0);
            used.push(filler);
            filler
        };
        sources.push(g.vertex_at(c));
    }
    BurnSchedule::new(sources)
}

fn exact_at(g: &BipartiteGraph, k: usize, budget: Option<u64>) -> Result<Option<BurnSchedule>> {
    match CoverSearch::new(g, k, budget).solve() {
        Outcome::Found(centers) => Ok(Some(schedule_from_centers(g, &centers))),
        Outcome::None => Ok(None),
        Outcome::OutOfBudget => Err(Error::FallbackExhausted {
            greedy_len: 0,
            bound: k,
        }),
    }
}

/// Whether some schedule of length exactly `k` burns `g` (exhaustive).
pub fn has_burning_schedule(g: &BipartiteGraph, k: usize) -> Option<BurnSchedule> {
    if k == 0 {
        return None;
    }
    exact_at(g, k, None).expect("unbudgeted search always decides")
}

/// The burning number `b(g)` with a witness schedule, searching lengths
/// `1..=k_max` in order.
pub fn exact_burning_number(g: &BipartiteGraph, k_max: usize) -> Result<(usize, BurnSchedule)> {
    for k in 1..=k_max {
        if let Some(s) = has_burning_schedule(g, k) {
            return Ok((k, s));
        }
    }
    Err(Error::ExceedsKMax { k_max })
}

/// Greedy cover along the spine with radii `k-1, ..., 0`: each source is
/// centered `r - 1` positions past the leftmost spine position that still
/// carries an unburned vertex, so its ball reaches back to that position.
fn greedy(g: &BipartiteGraph, c: &Caterpillar, k: usize) -> Option<BurnSchedule> {
    let spine: Vec<usize> = c.spine.iter().map(|&v| g.dense(v)).collect();
    let mut groups: Vec<Vec<usize>> = spine.iter().map(|&v| vec![v]).collect();
    for (&leg, &at) in &c.legs {
        let i = c.spine.iter().position(|&s| s == at)?;
        groups[i].push(g.dense(leg));
    }
    let mut covered = FixedBitSet::with_capacity(g.order());
    let mut centers = vec![usize::MAX; k];
    for r in (0..k).rev() {
        let Some(p) = groups.iter().position(|grp| grp.iter().any(|&v| !covered.contains(v))) else {
            break;
        };
        let center = if r == 0 {
            *groups[p].iter().find(|&&v| !covered.contains(v)).expect("uncovered")
        } else {
            spine[(p + r - 1).min(spine.len() - 1)]
        };
        centers[r] = center;
        covered.union_with(&ball_bits(&g.distances_from(g.vertex_at(center)), r));
    }
    covered.is_full().then(|| schedule_from_centers(g, &centers))
}

/// A burning schedule of length at most `⌈√n⌉` derived from a spanning
/// caterpillar: the shortest greedy spine cover if one fits, otherwise a
/// budgeted exact search at length `⌈√n⌉`.
pub fn schedule_from_caterpillar(g: &BipartiteGraph, c: &Caterpillar) -> Result<BurnSchedule> {
    if let Verdict::Invalid(reason) = verify_spanning_caterpillar(g, c) {
        return Err(Error::NotATree(reason));
    }
    let bound = ceil_sqrt(g.order());
    for k in 1..=bound {
        if let Some(s) = greedy(g, c, k) {
            return Ok(s);
        }
    }
    match exact_at(g, bound, Some(FALLBACK_BUDGET)) {
        Ok(Some(s)) => Ok(s),
        _ => {
            let greedy_len = (bound + 1..=g.order())
                .find(|&k| greedy(g, c, k).is_some())
                .unwrap_or(g.order());
            Err(Error::FallbackExhausted { greedy_len, bound })
        }
    }
}

/// Outcome of checking `b(g) <= ⌈√n⌉` on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub bound: usize,
    pub schedule: BurnSchedule,
    pub len: usize,
    pub exact_b: Option<usize>,
    pub pass: bool,
}

/// Builds a spanning caterpillar, derives a schedule from it and, for small
/// graphs, computes the exact burning number too.
pub fn check_conjecture(g: &BipartiteGraph, d: &DualOrdering) -> Result<ConjectureReport> {
    let (c, _) = build_spanning_caterpillar(g, d)?;
    let schedule = schedule_from_caterpillar(g, &c)?;
    let n = g.order();
    let bound = ceil_sqrt(n);
    let exact_b = if n <= EXACT_LIMIT {
        Some(exact_burning_number(g, bound + 2)?.0)
    } else {
        None
    };
    let len = schedule.len();
    let pass = is_burning_schedule(g, &schedule) && len <= bound && exact_b.is_none_or(|b| b <= bound);
    Ok(ConjectureReport {
        n,
        bound,
        schedule,
        len,
        exact_b,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId as V;

    fn path(m: usize) -> BipartiteGraph {
        // v_1 = a1, v_2 = b1, v_3 = a2, ...
        let edges: Vec<_> = (1..m)
            .map(|i| if i % 2 == 1 { (i.div_ceil(2), i.div_ceil(2)) } else { (i / 2 + 1, i / 2) })
            .collect();
        BipartiteGraph::new(m.div_ceil(2), m / 2, &edges).unwrap()
    }

    fn fig1() -> BipartiteGraph {
        BipartiteGraph::new(4, 3, &[(1, 1), (1, 2), (1, 3), (2, 1), (3, 2), (4, 3)]).unwrap()
    }

    #[test]
    fn balls() {
        assert_eq!(ball(&fig1(), V::a(1), 2).len(), 7);
        assert_eq!(ball(&fig1(), V::a(2), 0), vec![V::a(2)]);
        let k22 = BipartiteGraph::new(2, 2, &[(1, 1), (1, 2), (2, 1), (2, 2)]).unwrap();
        assert_eq!(ball(&k22, V::a(1), 1), vec![V::a(1), V::b(1), V::b(2)]);
    }

    #[test]
    fn schedules() {
        let k2 = path(2);
        assert!(is_burning_schedule(&k2, &BurnSchedule::new(vec![V::a(1), V::b(1)])));
        assert!(!is_burning_schedule(&k2, &BurnSchedule::new(vec![V::a(1)])));
        // v3 = a2, v7 = a4, v9 = a5.
        let p9 = path(9);
        let s = BurnSchedule::new(vec![V::a(2), V::a(4), V::a(5)]);
        assert!(is_burning_schedule(&p9, &s));
        assert!(simulate_fire_spread(&p9, &s.sources));
        let g = fig1();
        for x in g.vertices() {
            let s = BurnSchedule::new(vec![V::a(1), x, V::b(3)]);
            assert!(is_burning_schedule(&g, &s));
        }
    }

    #[test]
    fn exact_values() {
        assert_eq!(exact_burning_number(&path(2), 5).unwrap().0, 2);
        assert_eq!(exact_burning_number(&path(9), 5).unwrap().0, 3);
        assert_eq!(exact_burning_number(&path(10), 5).unwrap().0, 4);
        assert_eq!(exact_burning_number(&fig1(), 5).unwrap().0, 3);
        assert_eq!(exact_burning_number(&path(1), 1).unwrap().0, 1);
        assert_eq!(exact_burning_number(&path(9), 2), Err(Error::ExceedsKMax { k_max: 2 }));
        let (k, s) = exact_burning_number(&path(16), 6).unwrap();
        assert_eq!(k, 4);
        assert!(is_burning_schedule(&path(16), &s));
    }

    #[test]
    fn caterpillar_schedules() {
        let star = BipartiteGraph::new(1, 6, &(1..=6).map(|b| (1, b)).collect::<Vec<_>>()).unwrap();
        let c = Caterpillar {
            spine: vec![V::a(1)],
            legs: (1..=6).map(|b| (V::b(b), V::a(1))).collect(),
        };
        let s = schedule_from_caterpillar(&star, &c).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.sources[0], V::a(1));
        assert!(is_burning_schedule(&star, &s));

        let single = path(1);
        let c = Caterpillar {
            spine: vec![V::a(1)],
            legs: Default::default(),
        };
        assert_eq!(schedule_from_caterpillar(&single, &c).unwrap().len(), 1);
    }

    #[test]
    fn conjecture_reports() {
        let k22 = BipartiteGraph::new(2, 2, &[(1, 1), (1, 2), (2, 1), (2, 2)]).unwrap();
        let r = check_conjecture(&k22, &DualOrdering::natural(2, 2)).unwrap();
        assert_eq!((r.n, r.bound, r.exact_b, r.pass), (4, 2, Some(2), true));

        let star = BipartiteGraph::new(1, 6, &(1..=6).map(|b| (1, b)).collect::<Vec<_>>()).unwrap();
        let r = check_conjecture(&star, &DualOrdering::natural(1, 6)).unwrap();
        assert_eq!((r.n, r.bound, r.len, r.pass), (7, 3, 2, true));
    }
}
