//! Straight paths: paths none of whose edges cross under a dual ordering.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Part, VertexId};
use crate::ordering::DualOrdering;

/// A path certified cross-free under `ordering`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StraightPath {
    pub vertices: Vec<VertexId>,
    pub ordering: DualOrdering,
}

impl StraightPath {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() <= 1
    }

    /// Space-separated part-tagged indices, e.g. `b1 a1 b2 a2 b4 a3 b5`.
    pub fn to_text(&self) -> String {
        path_text(&self.vertices)
    }
}

pub fn path_text(p: &[VertexId]) -> String {
    p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Checks that `p` is a simple path of `g`: known vertices, consecutive
/// adjacency, no repeats.
pub fn check_path(g: &BipartiteGraph, p: &[VertexId]) -> Result<()> {
    if p.is_empty() {
        return Err(Error::NotAPath("empty vertex sequence".into()));
    }
    let mut seen = vec![false; g.order()];
    for (i, &v) in p.iter().enumerate() {
        if !g.contains(v) {
            return Err(Error::NotAPath(format!("{v} is not a vertex of the graph")));
        }
        let slot = &mut seen[g.dense(v)];
        if *slot {
            return Err(Error::NotAPath(format!("{v} repeats")));
        }
        *slot = true;
        if i > 0 && !g.adjacent(p[i - 1], v) {
            return Err(Error::NotAPath(format!("{} and {v} are not adjacent", p[i - 1])));
        }
    }
    Ok(())
}

/// Path edges as `(a, b)` pairs.
fn path_edges(p: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    p.windows(2)
        .map(|w| match w[0].part {
            Part::A => (w[0], w[1]),
            Part::B => (w[1], w[0]),
        })
        .collect()
}

fn crosses(d: &DualOrdering, e: (VertexId, VertexId), f: (VertexId, VertexId)) -> bool {
    let (ea, eb) = (d.pos(e.0), d.pos(e.1));
    let (fa, fb) = (d.pos(f.0), d.pos(f.1));
    (ea < fa && eb > fb) || (fa < ea && fb > eb)
}

/// True iff no two edges of the path `p` cross under `d`.
pub fn is_s_path(g: &BipartiteGraph, d: &DualOrdering, p: &[VertexId]) -> Result<bool> {
    d.check_sizes(g)?;
    check_path(g, p)?;
    let edges = path_edges(p);
    Ok(edges
        .iter()
        .enumerate()
        .all(|(i, &e)| edges[i + 1..].iter().all(|&f| !crosses(d, e, f))))
}

/// Whether both part-subsequences of `p` are strictly monotone in the same
/// direction under `d`. Such a path never contains a crossing.
pub fn is_monotone(d: &DualOrdering, p: &[VertexId]) -> bool {
    let runs = |part: Part| -> Vec<usize> {
        p.iter().filter(|v| v.part == part).map(|&v| d.pos(v)).collect()
    };
    let (pa, pb) = (runs(Part::A), runs(Part::B));
    let up = |s: &[usize]| s.windows(2).all(|w| w[0] < w[1]);
    let down = |s: &[usize]| s.windows(2).all(|w| w[0] > w[1]);
    (up(&pa) && up(&pb)) || (down(&pa) && down(&pb))
}

/// Ordering key for tie-breaking: B-index sequence first, then A-indices.
fn tie_key(p: &[VertexId]) -> (Vec<usize>, Vec<usize>) {
    let pick = |part: Part| p.iter().filter(|v| v.part == part).map(|v| v.index).collect();
    (pick(Part::B), pick(Part::A))
}

fn ensure_straight(g: &BipartiteGraph, d: &DualOrdering) -> Result<()> {
    if d.verified_straight() {
        return d.check_sizes(g);
    }
    let checked = d.clone().verify(g)?;
    if !checked.verified_biconvex() {
        return Err(Error::OrderingNotBiconvex);
    }
    if !checked.verified_straight() {
        return Err(Error::OrderingNotStraight);
    }
    Ok(())
}

/// A shortest `u`-`v` path that is straight under `d`.
///
/// Monotone paths are searched first by dynamic programming over the BFS
/// layers, once per direction, keeping the lexicographically smallest B-index
/// sequence per `(previous, current)` state. If no monotone shortest path
/// exists, every shortest path is enumerated with pairwise crossing checks.
pub fn shortest_s_path(
    g: &BipartiteGraph,
    d: &DualOrdering,
    u: VertexId,
    v: VertexId,
) -> Result<StraightPath> {
    for w in [u, v] {
        if !g.contains(w) {
            return Err(Error::IndexOutOfRange {
                vertex: w.to_string(),
                n_a: g.n_a(),
                n_b: g.n_b(),
            });
        }
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    ensure_straight(g, d)?;
    let wrap = |vertices| StraightPath {
        vertices,
        ordering: d.clone(),
    };
    if u == v {
        return Ok(wrap(vec![u]));
    }
    let layers = Layers::new(g, u, v);
    let best = [1i64, -1]
        .into_iter()
        .filter_map(|dir| layers.monotone(g, d, dir))
        .min_by_key(|p| tie_key(p));
    if let Some(p) = best {
        return Ok(wrap(p));
    }
    layers
        .any_straight(g, d)
        .map(wrap)
        .ok_or(Error::NoStraightShortestPath { from: u, to: v })
}

/// The shortest-path level structure between two vertices.
struct Layers {
    from: VertexId,
    to: VertexId,
    length: usize,
    dist_from: Vec<Option<usize>>,
    dist_to: Vec<Option<usize>>,
}

impl Layers {
    fn new(g: &BipartiteGraph, from: VertexId, to: VertexId) -> Self {
        let dist_from = g.distances_from(from);
        let dist_to = g.distances_from(to);
        let length = dist_from[g.dense(to)].expect("connected");
        Layers {
            from,
            to,
            length,
            dist_from,
            dist_to,
        }
    }

    /// Successors of `w` on some shortest path.
    fn next<'g>(&'g self, g: &'g BipartiteGraph, w: VertexId) -> impl Iterator<Item = VertexId> + 'g {
        let level = self.dist_from[g.dense(w)].expect("reachable");
        g.neighbors(w).filter(move |&x| {
            let i = g.dense(x);
            self.dist_from[i] == Some(level + 1)
                && self.dist_to[i].is_some_and(|t| level + 1 + t == self.length)
        })
    }

    fn monotone(&self, g: &BipartiteGraph, d: &DualOrdering, dir: i64) -> Option<Vec<VertexId>> {
        type State = (Option<VertexId>, VertexId);
        let mut layer: HashMap<State, Vec<VertexId>> = HashMap::new();
        layer.insert((None, self.from), vec![self.from]);
        for _ in 0..self.length {
            let mut next: HashMap<State, Vec<VertexId>> = HashMap::new();
            for ((prev, cur), path) in &layer {
                for x in self.next(g, *cur) {
                    if let Some(p) = prev {
                        let step = d.pos(x) as i64 - d.pos(*p) as i64;
                        if step * dir <= 0 {
                            continue;
                        }
                    }
                    let mut candidate = path.clone();
                    candidate.push(x);
                    let slot = next.entry((Some(*cur), x)).or_default();
                    if slot.is_empty() || tie_key(&candidate) < tie_key(slot) {
                        *slot = candidate;
                    }
                }
            }
            layer = next;
        }
        layer.into_values().min_by_key(|p| tie_key(p))
    }

    fn any_straight(&self, g: &BipartiteGraph, d: &DualOrdering) -> Option<Vec<VertexId>> {
        let mut path = vec![self.from];
        let mut edges = Vec::new();
        self.dfs(g, d, &mut path, &mut edges).then_some(path)
    }

    fn dfs(
        &self,
        g: &BipartiteGraph,
        d: &DualOrdering,
        path: &mut Vec<VertexId>,
        edges: &mut Vec<(VertexId, VertexId)>,
    ) -> bool {
        let cur = *path.last().expect("nonempty");
        if cur == self.to {
            return true;
        }
        let mut succ: Vec<_> = self.next(g, cur).collect();
        succ.sort();
        for x in succ {
            let e = match cur.part {
                Part::A => (cur, x),
                Part::B => (x, cur),
            };
            if edges.iter().any(|&f| crosses(d, e, f)) {
                continue;
            }
            edges.push(e);
            path.push(x);
            if self.dfs(g, d, path, edges) {
                return true;
            }
            path.pop();
            edges.pop();
        }
        false
    }
}
