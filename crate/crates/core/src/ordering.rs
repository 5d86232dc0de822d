//! Convex, biconvex and straight orderings.
//!
//! A [`DualOrdering`] is a pair of permutations `<_A`, `<_B`. It is biconvex when
//! every neighborhood occupies consecutive positions on the opposite side, and
//! straight when every pair of crossing edges `a_i b_s`, `a_j b_r`
//! (`a_i <_A a_j`, `b_r <_B b_s`) is rectified by `a_i b_r` or `a_j b_s`.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Part, VertexId};

/// Orderings of both parts, stored as index lists (`order_a[p]` is the
/// A-index at position `p + 1`) plus the inverse position maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualOrdering {
    order_a: Vec<usize>,
    order_b: Vec<usize>,
    pos_a: Vec<usize>,
    pos_b: Vec<usize>,
    verified_biconvex: bool,
    verified_straight: bool,
}

fn inverse(order: &[usize], what: &str) -> Result<Vec<usize>> {
    let mut pos = vec![0usize; order.len()];
    for (p, &v) in order.iter().enumerate() {
        if v == 0 || v > order.len() {
            return Err(Error::InvalidPermutation(format!(
                "{what}: index {v} outside 1..={}",
                order.len()
            )));
        }
        if pos[v - 1] != 0 {
            return Err(Error::InvalidPermutation(format!("{what}: index {v} repeated")));
        }
        pos[v - 1] = p + 1;
    }
    Ok(pos)
}

impl DualOrdering {
    pub fn new(order_a: Vec<usize>, order_b: Vec<usize>) -> Result<Self> {
        let pos_a = inverse(&order_a, "order_a")?;
        let pos_b = inverse(&order_b, "order_b")?;
        Ok(DualOrdering {
            order_a,
            order_b,
            pos_a,
            pos_b,
            verified_biconvex: false,
            verified_straight: false,
        })
    }

    /// The identity orderings `a1 < a2 < ...`, `b1 < b2 < ...`.
    pub fn natural(n_a: usize, n_b: usize) -> Self {
        DualOrdering::new((1..=n_a).collect(), (1..=n_b).collect()).expect("identity")
    }

    pub fn order(&self, part: Part) -> &[usize] {
        match part {
            Part::A => &self.order_a,
            Part::B => &self.order_b,
        }
    }

    pub fn order_a(&self) -> &[usize] {
        &self.order_a
    }

    pub fn order_b(&self) -> &[usize] {
        &self.order_b
    }

    /// 1-based position of `v` within its part.
    pub fn pos(&self, v: VertexId) -> usize {
        match v.part {
            Part::A => self.pos_a[v.index - 1],
            Part::B => self.pos_b[v.index - 1],
        }
    }

    /// The vertex of `part` at 1-based `position`.
    pub fn at(&self, part: Part, position: usize) -> VertexId {
        VertexId {
            part,
            index: self.order(part)[position - 1],
        }
    }

    pub fn precedes(&self, u: VertexId, v: VertexId) -> bool {
        debug_assert_eq!(u.part, v.part);
        self.pos(u) < self.pos(v)
    }

    pub fn verified_biconvex(&self) -> bool {
        self.verified_biconvex
    }

    pub fn verified_straight(&self) -> bool {
        self.verified_straight
    }

    /// Both permutations reversed. Biconvexity and straightness are preserved,
    /// so the flags carry over.
    pub fn reversed(&self) -> DualOrdering {
        let mut d = DualOrdering::new(
            self.order_a.iter().rev().copied().collect(),
            self.order_b.iter().rev().copied().collect(),
        )
        .expect("reversal of a permutation");
        d.verified_biconvex = self.verified_biconvex;
        d.verified_straight = self.verified_straight;
        d
    }

    /// The ordering seen from the transposed graph (parts swapped).
    pub fn transposed(&self) -> DualOrdering {
        let mut d = DualOrdering::new(self.order_b.clone(), self.order_a.clone()).expect("swap");
        d.verified_biconvex = self.verified_biconvex;
        d.verified_straight = self.verified_straight;
        d
    }

    /// Recomputes both flags against `g`.
    pub fn verify(mut self, g: &BipartiteGraph) -> Result<Self> {
        self.check_sizes(g)?;
        self.verified_biconvex = is_biconvex(g, &self)?;
        self.verified_straight = self.verified_biconvex && is_s_ordering(g, &self);
        Ok(self)
    }

    /// Marks the ordering as a biconvex straight ordering without checking.
    /// Only for orderings derived from an already verified one by relabeling.
    pub(crate) fn assume_straight(mut self) -> Self {
        self.verified_biconvex = true;
        self.verified_straight = true;
        self
    }

    pub fn check_sizes(&self, g: &BipartiteGraph) -> Result<()> {
        if self.order_a.len() != g.n_a() || self.order_b.len() != g.n_b() {
            return Err(Error::InvalidPermutation(format!(
                "ordering sizes ({}, {}) do not match graph ({}, {})",
                self.order_a.len(),
                self.order_b.len(),
                g.n_a(),
                g.n_b()
            )));
        }
        Ok(())
    }
}

/// Two crossing edges, `edge1.a` preceding `edge2.a` under `<_A` while
/// `edge1.b` follows `edge2.b` under `<_B`. Edges are `(a, b)` index pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrossPair {
    pub edge1: (usize, usize),
    pub edge2: (usize, usize),
}

fn consecutive(positions: impl Iterator<Item = usize>) -> bool {
    let mut count = 0usize;
    let mut lo = usize::MAX;
    let mut hi = 0usize;
    for p in positions {
        count += 1;
        lo = lo.min(p);
        hi = hi.max(p);
    }
    count <= 1 || hi - lo + 1 == count
}

/// Whether every neighborhood of a `side` vertex is consecutive under `order`,
/// which permutes the opposite part.
pub fn is_convex_side(g: &BipartiteGraph, order: &[usize], side: Part) -> Result<bool> {
    let other = side.other();
    if order.len() != g.part_size(other) {
        return Err(Error::InvalidPermutation(format!(
            "expected a permutation of {} {other:?}-vertices, got {} entries",
            g.part_size(other),
            order.len()
        )));
    }
    let pos = inverse(order, "order")?;
    Ok(g
        .part_vertices(side)
        .all(|v| consecutive(g.neighbor_indices(v).iter().map(|&w| pos[w - 1]))))
}

pub fn is_biconvex(g: &BipartiteGraph, d: &DualOrdering) -> Result<bool> {
    d.check_sizes(g)?;
    Ok(is_convex_side(g, &d.order_b, Part::A)? && is_convex_side(g, &d.order_a, Part::B)?)
}

/// All unordered pairs of crossing edges.
pub fn find_cross_pairs(g: &BipartiteGraph, d: &DualOrdering) -> Vec<CrossPair> {
    let edges: Vec<(usize, usize, usize, usize)> = g
        .edges()
        .iter()
        .map(|&(a, b)| (a, b, d.pos_a[a - 1], d.pos_b[b - 1]))
        .collect();
    let mut pairs = Vec::new();
    for (i, &(a1, b1, pa1, pb1)) in edges.iter().enumerate() {
        for &(a2, b2, pa2, pb2) in &edges[i + 1..] {
            if pa1 < pa2 && pb1 > pb2 {
                pairs.push(CrossPair {
                    edge1: (a1, b1),
                    edge2: (a2, b2),
                });
            } else if pa2 < pa1 && pb2 > pb1 {
                pairs.push(CrossPair {
                    edge1: (a2, b2),
                    edge2: (a1, b1),
                });
            }
        }
    }
    pairs
}

/// Whether a cross pair has at least one of its two rectifying edges.
pub fn is_rectified(g: &BipartiteGraph, pair: &CrossPair) -> bool {
    let (ai, bs) = pair.edge1;
    let (aj, br) = pair.edge2;
    g.has_edge(ai, br) || g.has_edge(aj, bs)
}

pub fn is_s_ordering(g: &BipartiteGraph, d: &DualOrdering) -> bool {
    find_cross_pairs(g, d).iter().all(|p| is_rectified(g, p))
}

/// Permutation budget used when the caller has no better figure.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Searches for a biconvex ordering of a connected graph.
///
/// Permutations of the smaller part are enumerated in lexicographic order; each
/// one that makes the other part's neighborhoods consecutive is completed by
/// an exact backtracking search over orders of the other part. `budget` caps
/// the number of permutations visited. [`Error::ProvablyNone`] is returned only
/// after the enumeration ran to completion.
pub fn find_biconvex_ordering(g: &BipartiteGraph, budget: u64) -> Result<DualOrdering> {
    search(g, budget, false)
}

/// Like [`find_biconvex_ordering`], additionally requiring straightness.
pub fn find_biconvex_s_ordering(g: &BipartiteGraph, budget: u64) -> Result<DualOrdering> {
    search(g, budget, true)
}

fn search(g: &BipartiteGraph, budget: u64, straight: bool) -> Result<DualOrdering> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let swap = g.n_b() < g.n_a();
    let h = if swap { g.transposed() } else { g.clone() };
    for (explored, perm) in (1..=h.n_a()).permutations(h.n_a()).enumerate() {
        if explored as u64 >= budget {
            return Err(Error::BudgetExceeded { budget });
        }
        let pos_a = inverse(&perm, "order_a").expect("permutation");
        let fits = h
            .part_vertices(Part::B)
            .all(|b| consecutive(h.neighbor_indices(b).iter().map(|&a| pos_a[a - 1])));
        if !fits {
            continue;
        }
        let mut completion = Completion::new(&h, &pos_a, straight);
        if completion.extend() {
            let (order_a, order_b) = if swap {
                (completion.placed, perm)
            } else {
                (perm, completion.placed)
            };
            return DualOrdering::new(order_a, order_b)?.verify(g);
        }
    }
    Err(Error::ProvablyNone)
}

/// Backtracking over orders of `B` given a fixed order of `A`, visiting
/// candidates in increasing index order so the first hit is lexicographically
/// smallest.
struct Completion<'g> {
    g: &'g BipartiteGraph,
    pos_a: &'g [usize],
    straight: bool,
    placed: Vec<usize>,
    used: Vec<bool>,
    /// Placed neighbors of each A-vertex.
    count: Vec<usize>,
}

impl<'g> Completion<'g> {
    fn new(g: &'g BipartiteGraph, pos_a: &'g [usize], straight: bool) -> Self {
        Completion {
            g,
            pos_a,
            straight,
            placed: Vec::with_capacity(g.n_b()),
            used: vec![false; g.n_b()],
            count: vec![0; g.n_a()],
        }
    }

    /// A started but unfinished neighborhood has to continue with `b`.
    fn keeps_open_sets_contiguous(&self, b: usize) -> bool {
        (1..=self.g.n_a()).all(|a| {
            let c = self.count[a - 1];
            c == 0 || c == self.g.degree(VertexId::a(a)) || self.g.has_edge(a, b)
        })
    }

    /// `b` goes after everything placed; every new cross pair must be rectified.
    fn keeps_straight(&self, b: usize) -> bool {
        let g = self.g;
        self.placed.iter().all(|&earlier| {
            g.neighbor_indices(VertexId::b(b)).iter().all(|&ai| {
                g.neighbor_indices(VertexId::b(earlier)).iter().all(|&aj| {
                    self.pos_a[ai - 1] >= self.pos_a[aj - 1]
                        || g.has_edge(ai, earlier)
                        || g.has_edge(aj, b)
                })
            })
        })
    }

    fn extend(&mut self) -> bool {
        if self.placed.len() == self.g.n_b() {
            return true;
        }
        for b in 1..=self.g.n_b() {
            if self.used[b - 1] || !self.keeps_open_sets_contiguous(b) {
                continue;
            }
            if self.straight && !self.keeps_straight(b) {
                continue;
            }
            self.used[b - 1] = true;
            self.placed.push(b);
            for &a in self.g.neighbor_indices(VertexId::b(b)) {
                self.count[a - 1] += 1;
            }
            if self.extend() {
                return true;
            }
            for &a in self.g.neighbor_indices(VertexId::b(b)) {
                self.count[a - 1] -= 1;
            }
            self.placed.pop();
            self.used[b - 1] = false;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k22() -> BipartiteGraph {
        BipartiteGraph::new(2, 2, &[(1, 1), (1, 2), (2, 1), (2, 2)]).unwrap()
    }

    fn staircase() -> BipartiteGraph {
        BipartiteGraph::new(3, 4, &[(1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 4)]).unwrap()
    }

    fn fig1() -> BipartiteGraph {
        BipartiteGraph::new(4, 3, &[(1, 1), (1, 2), (1, 3), (2, 1), (3, 2), (4, 3)]).unwrap()
    }

    fn c6() -> BipartiteGraph {
        BipartiteGraph::new(3, 3, &[(1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn convex_side_examples() {
        assert!(is_convex_side(&fig1(), &[1, 2, 3], Part::A).unwrap());
        let matching = BipartiteGraph::new(3, 3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        for order in (1..=3).permutations(3) {
            assert!(is_convex_side(&matching, &order, Part::A).unwrap());
            assert!(!is_convex_side(&c6(), &order, Part::A).unwrap());
        }
        assert!(matches!(
            is_convex_side(&fig1(), &[1, 2], Part::A),
            Err(Error::InvalidPermutation(_))
        ));
        assert!(matches!(
            is_convex_side(&fig1(), &[1, 1, 2], Part::A),
            Err(Error::InvalidPermutation(_))
        ));
    }

    #[test]
    fn biconvex_examples() {
        assert!(is_biconvex(&k22(), &DualOrdering::natural(2, 2)).unwrap());
        assert!(is_biconvex(&staircase(), &DualOrdering::natural(3, 4)).unwrap());
        let g = fig1();
        let mut pairs = 0;
        for oa in (1..=4).permutations(4) {
            for ob in (1..=3).permutations(3) {
                pairs += 1;
                let d = DualOrdering::new(oa.clone(), ob).unwrap();
                assert!(!is_biconvex(&g, &d).unwrap());
            }
        }
        assert_eq!(pairs, 144);
    }

    #[test]
    fn cross_pair_examples() {
        let pairs = find_cross_pairs(&k22(), &DualOrdering::natural(2, 2));
        assert_eq!(
            pairs,
            vec![CrossPair {
                edge1: (1, 2),
                edge2: (2, 1)
            }]
        );
        let stars = BipartiteGraph::new(2, 4, &[(1, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
        assert!(find_cross_pairs(&stars, &DualOrdering::natural(2, 4)).is_empty());
        assert!(find_cross_pairs(&staircase(), &DualOrdering::natural(3, 4)).is_empty());
    }

    #[test]
    fn s_ordering_examples() {
        assert!(is_s_ordering(&k22(), &DualOrdering::natural(2, 2)));
        assert!(is_s_ordering(&staircase(), &DualOrdering::natural(3, 4)));
        let chain = BipartiteGraph::new(2, 2, &[(1, 1), (1, 2), (2, 2)]).unwrap();
        assert!(is_s_ordering(&chain, &DualOrdering::natural(2, 2)));
        // a1:{b2}, a2:{b1}: one unrectified crossing.
        let bad = BipartiteGraph::new(2, 2, &[(1, 2), (2, 1)]).unwrap();
        assert!(!is_s_ordering(&bad, &DualOrdering::natural(2, 2)));
    }

    #[test]
    fn verify_sets_flags() {
        let d = DualOrdering::natural(3, 4).verify(&staircase()).unwrap();
        assert!(d.verified_biconvex() && d.verified_straight());
        let d = DualOrdering::new(vec![2, 1, 3], vec![1, 2, 3, 4])
            .unwrap()
            .verify(&staircase())
            .unwrap();
        assert!(!d.verified_biconvex() && !d.verified_straight());
        assert!(DualOrdering::natural(2, 2).verify(&staircase()).is_err());
    }

    #[test]
    fn search_examples() {
        assert_eq!(find_biconvex_ordering(&fig1(), u64::MAX), Err(Error::ProvablyNone));
        assert_eq!(find_biconvex_s_ordering(&fig1(), u64::MAX), Err(Error::ProvablyNone));

        let d = find_biconvex_ordering(&staircase(), u64::MAX).unwrap();
        assert!(is_biconvex(&staircase(), &d).unwrap());
        assert!(d.verified_biconvex());

        let k2 = BipartiteGraph::new(1, 1, &[(1, 1)]).unwrap();
        let d = find_biconvex_ordering(&k2, 10).unwrap();
        assert_eq!((d.order_a(), d.order_b()), (&[1][..], &[1][..]));

        let d = find_biconvex_s_ordering(&k22(), u64::MAX).unwrap();
        assert_eq!(d, DualOrdering::natural(2, 2).verify(&k22()).unwrap());
        assert!(d.verified_straight());

        let split = BipartiteGraph::new(2, 2, &[(1, 1), (2, 2)]).unwrap();
        assert_eq!(find_biconvex_ordering(&split, 10), Err(Error::NotConnected));
        assert_eq!(
            find_biconvex_ordering(&fig1(), 3),
            Err(Error::BudgetExceeded { budget: 3 })
        );
    }

    #[test]
    fn search_on_wider_a_side_transposes() {
        // 4 A-vertices, 2 B-vertices: the search enumerates orders of B.
        let g = BipartiteGraph::new(4, 2, &[(1, 1), (2, 1), (2, 2), (3, 2), (4, 2)]).unwrap();
        let d = find_biconvex_s_ordering(&g, u64::MAX).unwrap();
        assert!(is_biconvex(&g, &d).unwrap());
        assert!(is_s_ordering(&g, &d));
    }

    #[test]
    fn reversal_and_transpose_preserve_properties() {
        let g = staircase();
        let d = DualOrdering::natural(3, 4);
        let r = d.reversed();
        assert!(is_biconvex(&g, &r).unwrap());
        assert!(is_s_ordering(&g, &r));
        let t = d.transposed();
        assert!(is_biconvex(&g.transposed(), &t).unwrap());
        assert!(is_s_ordering(&g.transposed(), &t));
    }
}
