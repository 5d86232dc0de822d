//! Immutable bipartite graphs with 1-based vertex indices.
//!
//! A vertex is named by its part and its position inside that part, `a1..a{n_a}`
//! and `b1..b{n_b}`. Orderings never relabel a graph; they permute indices on top
//! of it (see [`crate::ordering`]).

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    A,
    B,
}

impl Part {
    pub fn other(self) -> Part {
        match self {
            Part::A => Part::B,
            Part::B => Part::A,
        }
    }
}

/// A vertex, identified by part and 1-based index within the part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub part: Part,
    pub index: usize,
}

impl VertexId {
    pub const fn a(index: usize) -> Self {
        VertexId { part: Part::A, index }
    }

    pub const fn b(index: usize) -> Self {
        VertexId { part: Part::B, index }
    }

    /// The same index in the opposite part; used when a graph is transposed.
    pub fn flipped(self) -> Self {
        VertexId {
            part: self.part.other(),
            index: self.index,
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.part {
            Part::A => write!(f, "a{}", self.index),
            Part::B => write!(f, "b{}", self.index),
        }
    }
}

impl FromStr for VertexId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected a vertex like `a3` or `b5`, got `{s}`"));
        let mut chars = s.chars();
        let part = match chars.next() {
            Some('a') => Part::A,
            Some('b') => Part::B,
            _ => return Err(bad()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let index: usize = digits.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(VertexId { part, index })
    }
}

impl Serialize for VertexId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A bipartite graph `G = (A, B, E)`.
///
/// Internally every vertex also has a dense index in `0..n`: `a_i` maps to
/// `i - 1` and `b_j` to `n_a + j - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    n_a: usize,
    n_b: usize,
    /// Sorted `(a, b)` pairs, 1-based.
    edges: Vec<(usize, usize)>,
    /// `adj_a[i - 1]` lists the B-neighbors of `a_i` in increasing index order.
    adj_a: Vec<Vec<usize>>,
    adj_b: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl BipartiteGraph {
    /// Builds and validates a graph. Edges are `(a, b)` index pairs, 1-based.
    ///
    /// Either part may be empty as long as the graph has at least one vertex;
    /// that is how a single isolated vertex (the one-vertex path) is expressed.
    pub fn new(n_a: usize, n_b: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n_a + n_b == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut matrix = vec![false; n_a * n_b];
        let mut adj_a = vec![Vec::new(); n_a];
        let mut adj_b = vec![Vec::new(); n_b];
        for &(a, b) in edges {
            if a == 0 || a > n_a {
                return Err(Error::IndexOutOfRange {
                    vertex: format!("a{a}"),
                    n_a,
                    n_b,
                });
            }
            if b == 0 || b > n_b {
                return Err(Error::IndexOutOfRange {
                    vertex: format!("b{b}"),
                    n_a,
                    n_b,
                });
            }
            let cell = &mut matrix[(a - 1) * n_b + (b - 1)];
            if *cell {
                return Err(Error::DuplicateEdge(a, b));
            }
            *cell = true;
            adj_a[a - 1].push(b);
            adj_b[b - 1].push(a);
        }
        adj_a.iter_mut().for_each(|l| l.sort_unstable());
        adj_b.iter_mut().for_each(|l| l.sort_unstable());
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        Ok(BipartiteGraph {
            n_a,
            n_b,
            edges,
            adj_a,
            adj_b,
            matrix,
        })
    }

    pub fn n_a(&self) -> usize {
        self.n_a
    }

    pub fn n_b(&self) -> usize {
        self.n_b
    }

    pub fn part_size(&self, part: Part) -> usize {
        match part {
            Part::A => self.n_a,
            Part::B => self.n_b,
        }
    }

    /// Total number of vertices.
    pub fn order(&self) -> usize {
        self.n_a + self.n_b
    }

    /// Edges as sorted `(a, b)` pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.index >= 1 && v.index <= self.part_size(v.part)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a >= 1 && b >= 1 && a <= self.n_a && b <= self.n_b && self.matrix[(a - 1) * self.n_b + (b - 1)]
    }

    /// Adjacency between two vertices given in either order.
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        match (u.part, v.part) {
            (Part::A, Part::B) => self.has_edge(u.index, v.index),
            (Part::B, Part::A) => self.has_edge(v.index, u.index),
            _ => false,
        }
    }

    /// Indices (in the opposite part) of the neighbors of `v`, increasing.
    pub fn neighbor_indices(&self, v: VertexId) -> &[usize] {
        match v.part {
            Part::A => &self.adj_a[v.index - 1],
            Part::B => &self.adj_b[v.index - 1],
        }
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let other = v.part.other();
        self.neighbor_indices(v)
            .iter()
            .map(move |&index| VertexId { part: other, index })
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbor_indices(v).len()
    }

    /// All vertices, A-part first, each part in index order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (1..=self.n_a)
            .map(VertexId::a)
            .chain((1..=self.n_b).map(VertexId::b))
    }

    pub fn part_vertices(&self, part: Part) -> impl Iterator<Item = VertexId> {
        (1..=self.part_size(part)).map(move |index| VertexId { part, index })
    }

    /// Dense index in `0..order()`.
    pub fn dense(&self, v: VertexId) -> usize {
        match v.part {
            Part::A => v.index - 1,
            Part::B => self.n_a + v.index - 1,
        }
    }

    pub fn vertex_at(&self, dense: usize) -> VertexId {
        if dense < self.n_a {
            VertexId::a(dense + 1)
        } else {
            VertexId::b(dense - self.n_a + 1)
        }
    }

    /// Breadth-first distances from `source` in dense indexing; `None` marks
    /// unreachable vertices.
    pub fn distances_from(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[self.dense(source)] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[self.dense(u)].unwrap_or(0);
            for w in self.neighbors(u) {
                let slot = &mut dist[self.dense(w)];
                if slot.is_none() {
                    *slot = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Length of a shortest `u`-`v` path, `None` if they are disconnected.
    pub fn bfs_distance(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.distances_from(u)[self.dense(v)]
    }

    /// Distance matrix in dense indexing.
    pub fn all_distances(&self) -> Vec<Vec<Option<usize>>> {
        self.vertices().map(|v| self.distances_from(v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(self.vertex_at(0)).iter().all(Option::is_some)
    }

    /// Swaps the roles of `A` and `B`: `a_i` becomes `b_i` and vice versa.
    pub fn transposed(&self) -> BipartiteGraph {
        let edges: Vec<_> = self.edges.iter().map(|&(a, b)| (b, a)).collect();
        BipartiteGraph::new(self.n_b, self.n_a, &edges).expect("transpose of a valid graph")
    }

    /// Relabels both parts: new `a_i` is old `a_{map_a[i-1]}`, likewise for `B`.
    /// The maps must be permutations; this is the caller's responsibility.
    pub(crate) fn relabeled(&self, pos_a: &[usize], pos_b: &[usize]) -> BipartiteGraph {
        // pos_x[old - 1] is the new index of old vertex `old`.
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| (pos_a[a - 1], pos_b[b - 1]))
            .collect();
        BipartiteGraph::new(self.n_a, self.n_b, &edges).expect("relabeling of a valid graph")
    }

    /// The subgraph induced by the listed vertices, renumbered `1..` in list
    /// order. The returned maps translate new indices back to this graph.
    pub fn induced_subgraph(&self, keep_a: &[usize], keep_b: &[usize]) -> Result<InducedSubgraph> {
        let mut new_a = vec![0usize; self.n_a + 1];
        let mut new_b = vec![0usize; self.n_b + 1];
        for (i, &a) in keep_a.iter().enumerate() {
            if a == 0 || a > self.n_a || new_a[a] != 0 {
                return Err(Error::InvalidPermutation(format!("bad or repeated A-index {a}")));
            }
            new_a[a] = i + 1;
        }
        for (j, &b) in keep_b.iter().enumerate() {
            if b == 0 || b > self.n_b || new_b[b] != 0 {
                return Err(Error::InvalidPermutation(format!("bad or repeated B-index {b}")));
            }
            new_b[b] = j + 1;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(a, b)| new_a[a] != 0 && new_b[b] != 0)
            .map(|&(a, b)| (new_a[a], new_b[b]))
            .collect();
        Ok(InducedSubgraph {
            graph: BipartiteGraph::new(keep_a.len(), keep_b.len(), &edges)?,
            parent_a: keep_a.to_vec(),
            parent_b: keep_b.to_vec(),
        })
    }
}

/// A vertex-induced subgraph together with the mapping back to its parent.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: BipartiteGraph,
    parent_a: Vec<usize>,
    parent_b: Vec<usize>,
}

impl InducedSubgraph {
    pub fn to_parent(&self, v: VertexId) -> VertexId {
        match v.part {
            Part::A => VertexId::a(self.parent_a[v.index - 1]),
            Part::B => VertexId::b(self.parent_b[v.index - 1]),
        }
    }

    pub fn from_parent(&self, v: VertexId) -> Option<VertexId> {
        let list = match v.part {
            Part::A => &self.parent_a,
            Part::B => &self.parent_b,
        };
        list.iter().position(|&p| p == v.index).map(|i| VertexId {
            part: v.part,
            index: i + 1,
        })
    }
}
