//! Brute-force ground truth at tiny scale.
//!
//! Nothing here calls the code it checks: the caterpillar test, the
//! consecutive-neighbors test and the cross-pair test are written out again,
//! and only graph primitives (adjacency, BFS distances) are shared.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Part, VertexId};
use crate::ordering::DualOrdering;

/// Limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_trees: u64,
    pub time_cap: Duration,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 12,
            max_trees: 50_000_000,
            time_cap: Duration::from_secs(60),
        }
    }
}

impl OracleBudget {
    fn check_size(&self, n: usize) -> Result<()> {
        if n > self.max_vertices {
            return Err(Error::BudgetExceeded {
                budget: self.max_vertices as u64,
            });
        }
        Ok(())
    }
}

/// Outcome of the spanning-tree scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeScan {
    /// The first spanning caterpillar found, as edges.
    pub caterpillar: Option<Vec<(VertexId, VertexId)>>,
    pub trees_examined: u64,
}

/// Leaf-peeling test on an edge list over `0..n`: strip every degree-one
/// vertex once, then walk what is left and check it is a single path.
fn peels_to_path(n: usize, edges: &[(usize, usize)]) -> bool {
    if n <= 2 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let kept: Vec<usize> = (0..n).filter(|&v| adj[v].len() > 1).collect();
    if kept.is_empty() {
        return true;
    }
    let inner = |v: usize| adj[v].iter().filter(|w| adj[**w].len() > 1).count();
    let ends = kept.iter().filter(|&&v| inner(v) <= 1).count();
    let middles = kept.iter().filter(|&&v| inner(v) == 2).count();
    // In a tree the residue is connected; it is a path exactly when it has
    // two ends and everything else sits in the middle (or it is one vertex).
    (kept.len() == 1 && ends == 1) || (ends == 2 && ends + middles == kept.len())
}

/// Every spanning tree of `g`, by include/exclude backtracking over the edge
/// list, until one is a caterpillar.
pub fn scan_spanning_trees(g: &BipartiteGraph, budget: &OracleBudget) -> Result<TreeScan> {
    budget.check_size(g.order())?;
    let n = g.order();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(a, b)| (g.dense(VertexId::a(a)), g.dense(VertexId::b(b))))
        .collect();
    let mut scan = Scan {
        n,
        edges: &edges,
        budget,
        started: Instant::now(),
        trees: 0,
        chosen: Vec::new(),
    };
    let mut comp: Vec<usize> = (0..n).collect();
    let found = scan.go(0, &mut comp)?;
    Ok(TreeScan {
        caterpillar: found.then(|| {
            scan.chosen
                .iter()
                .map(|&i| (g.vertex_at(edges[i].0), g.vertex_at(edges[i].1)))
                .collect()
        }),
        trees_examined: scan.trees,
    })
}

struct Scan<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    budget: &'a OracleBudget,
    started: Instant,
    trees: u64,
    chosen: Vec<usize>,
}

impl Scan<'_> {
    fn go(&mut self, next: usize, comp: &mut Vec<usize>) -> Result<bool> {
        let need = self.n - 1 - self.chosen.len();
        if need == 0 {
            self.trees += 1;
            if self.trees > self.budget.max_trees {
                return Err(Error::BudgetExceeded {
                    budget: self.budget.max_trees,
                });
            }
            if self.trees % 4096 == 0 && self.started.elapsed() > self.budget.time_cap {
                return Err(Error::BudgetExceeded {
                    budget: self.budget.time_cap.as_secs(),
                });
            }
            let tree: Vec<(usize, usize)> = self.chosen.iter().map(|&i| self.edges[i]).collect();
            return Ok(peels_to_path(self.n, &tree));
        }
        if self.edges.len() - next < need {
            return Ok(false);
        }
        let (u, v) = self.edges[next];
        let (cu, cv) = (comp[u], comp[v]);
        if cu != cv {
            // Component labels are small, so relabeling by copy is cheap.
            let saved = comp.clone();
            for c in comp.iter_mut() {
                if *c == cv {
                    *c = cu;
                }
            }
            self.chosen.push(next);
            if self.go(next + 1, comp)? {
                return Ok(true);
            }
            self.chosen.pop();
            *comp = saved;
        }
        self.go(next + 1, comp)
    }
}

/// Whether `g` has a spanning tree that is a caterpillar.
pub fn oracle_has_spanning_caterpillar(g: &BipartiteGraph, budget: &OracleBudget) -> Result<bool> {
    Ok(scan_spanning_trees(g, budget)?.caterpillar.is_some())
}

/// Outcome of the ordering scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingScan {
    pub ordering: Option<DualOrdering>,
    pub pairs_examined: u64,
}

fn consecutive_under(g: &BipartiteGraph, side: Part, other_pos: &[usize]) -> bool {
    g.part_vertices(side).all(|v| {
        let ps: Vec<usize> = g.neighbor_indices(v).iter().map(|&w| other_pos[w - 1]).collect();
        match (ps.iter().min(), ps.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo + 1 == ps.len(),
            _ => true,
        }
    })
}

/// Positions (1-based) of a permutation given as a list of labels.
fn positions(perm: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; perm.len()];
    for (i, &x) in perm.iter().enumerate() {
        pos[x - 1] = i + 1;
    }
    pos
}

/// Straightness by definition: for every two edges `a_i b_s`, `a_j b_r` with
/// `a_i` before `a_j` and `b_r` before `b_s`, one of `a_i b_r`, `a_j b_s`
/// is an edge.
fn straight_under(g: &BipartiteGraph, pos_a: &[usize], pos_b: &[usize]) -> bool {
    let e = g.edges();
    e.iter().all(|&(ai, bs)| {
        e.iter().all(|&(aj, br)| {
            let crosses = pos_a[ai - 1] < pos_a[aj - 1] && pos_b[br - 1] < pos_b[bs - 1];
            !crosses || g.has_edge(ai, br) || g.has_edge(aj, bs)
        })
    })
}

/// Scans all `n_a! * n_b!` ordering pairs in lexicographic order.
pub fn scan_orderings(g: &BipartiteGraph, straight: bool, budget: &OracleBudget) -> Result<OrderingScan> {
    if g.n_a() > 6 || g.n_b() > 6 {
        return Err(Error::BudgetExceeded { budget: 6 });
    }
    budget.check_size(g.order())?;
    let per_a: u64 = (1..=g.n_b() as u64).product();
    let mut pairs = 0;
    for pa in (1..=g.n_a()).permutations(g.n_a()) {
        let pos_a = positions(&pa);
        // B-side convexity depends on the A-order alone; when it fails, every
        // pairing with this A-order fails and is counted as examined.
        if !consecutive_under(g, Part::B, &pos_a) {
            pairs += per_a;
            continue;
        }
        for pb in (1..=g.n_b()).permutations(g.n_b()) {
            pairs += 1;
            let pos_b = positions(&pb);
            if consecutive_under(g, Part::A, &pos_b) && (!straight || straight_under(g, &pos_a, &pos_b)) {
                return Ok(OrderingScan {
                    ordering: Some(DualOrdering::new(pa, pb)?),
                    pairs_examined: pairs,
                });
            }
        }
    }
    Ok(OrderingScan {
        ordering: None,
        pairs_examined: pairs,
    })
}

/// A biconvex ordering found by full scan, or [`Error::ProvablyNone`].
pub fn oracle_is_biconvex(g: &BipartiteGraph, budget: &OracleBudget) -> Result<DualOrdering> {
    scan_orderings(g, false, budget)?.ordering.ok_or(Error::ProvablyNone)
}

/// A biconvex straight ordering found by full scan, or [`Error::ProvablyNone`].
pub fn oracle_is_biconvex_straight(g: &BipartiteGraph, budget: &OracleBudget) -> Result<DualOrdering> {
    scan_orderings(g, true, budget)?.ordering.ok_or(Error::ProvablyNone)
}

/// Every shortest `u`-`v` path, by walking down BFS layers.
pub fn all_shortest_paths(g: &BipartiteGraph, u: VertexId, v: VertexId) -> Vec<Vec<VertexId>> {
    let to_v = g.distances_from(v);
    let Some(_) = to_v[g.dense(u)] else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut path = vec![u];
    extend_down(g, &to_v, v, &mut path, &mut out);
    out
}

fn extend_down(
    g: &BipartiteGraph,
    to_v: &[Option<usize>],
    v: VertexId,
    path: &mut Vec<VertexId>,
    out: &mut Vec<Vec<VertexId>>,
) {
    let cur = *path.last().expect("non-empty");
    if cur == v {
        out.push(path.clone());
        return;
    }
    let d = to_v[g.dense(cur)].expect("reachable");
    for w in g.neighbors(cur) {
        if to_v[g.dense(w)] == Some(d - 1) {
            path.push(w);
            extend_down(g, to_v, v, path, out);
            path.pop();
        }
    }
}

/// No two edges of `p` cross under `d`, checked on every edge pair.
pub fn path_is_cross_free(d: &DualOrdering, p: &[VertexId]) -> bool {
    let edges: Vec<(usize, usize)> = p
        .windows(2)
        .map(|w| {
            let (a, b) = if w[0].part == Part::A { (w[0], w[1]) } else { (w[1], w[0]) };
            (d.pos(a), d.pos(b))
        })
        .collect();
    edges.iter().all(|&(pa, pb)| {
        edges
            .iter()
            .all(|&(qa, qb)| !((pa < qa && pb > qb) || (pa > qa && pb < qb)))
    })
}

/// Whether some shortest `u`-`v` path is cross-free under `d`.
pub fn oracle_straight_shortest_path_exists(
    g: &BipartiteGraph,
    d: &DualOrdering,
    u: VertexId,
    v: VertexId,
) -> bool {
    all_shortest_paths(g, u, v)
        .iter()
        .any(|p| path_is_cross_free(d, p))
}

/// All labeled trees on `0..n`, decoded from every Prüfer sequence.
pub fn enumerate_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    assert!(n <= 8, "tree enumeration is limited to eight vertices");
    match n {
        0 => Vec::new(),
        1 => vec![Vec::new()],
        2 => vec![vec![(0, 1)]],
        _ => (0..n - 2)
            .map(|_| 0..n)
            .multi_cartesian_product()
            .map(|seq| prufer_decode(n, &seq))
            .collect(),
    }
}

fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// One representative per isomorphism class, by canonical rooted encodings
/// taken at the tree's center(s).
pub fn enumerate_unlabeled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut seen = BTreeSet::new();
    enumerate_trees(n)
        .into_iter()
        .filter(|t| seen.insert(canonical_form(n, t)))
        .collect()
}

fn canonical_form(n: usize, edges: &[(usize, usize)]) -> String {
    if n <= 1 {
        return "()".into();
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    // Centers: peel leaves layer by layer.
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in &adj[leaf] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| encode(&adj, c, usize::MAX))
        .min()
        .expect("a tree has a center")
}

fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(adj, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}
