use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, VertexId};
use crate::spath::check_path;

/// A spanning caterpillar: the residual path (`spine`) and, for every other
/// vertex, the spine vertex it hangs from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Caterpillar {
    pub spine: Vec<VertexId>,
    pub legs: BTreeMap<VertexId, VertexId>,
}

impl Caterpillar {
    /// Spine edges followed by leg edges.
    pub fn tree_edges(&self) -> Vec<(VertexId, VertexId)> {
        self.spine
            .windows(2)
            .map(|w| (w[0], w[1]))
            .chain(self.legs.iter().map(|(&leg, &at)| (leg, at)))
            .collect()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    /// False if `x` and `y` were already joined.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.0[rx] = ry;
        true
    }
}

fn check_tree(n: usize, edges: &[(usize, usize)]) -> Result<Vec<usize>> {
    if n == 0 {
        return Err(Error::NotATree("no vertices".into()));
    }
    if edges.len() + 1 != n {
        return Err(Error::NotATree(format!("{} edges on {n} vertices", edges.len())));
    }
    let mut uf = UnionFind::new(n);
    let mut degree = vec![0usize; n];
    for &(u, v) in edges {
        if u >= n || v >= n || u == v {
            return Err(Error::NotATree(format!("bad edge ({u}, {v})")));
        }
        if !uf.union(u, v) {
            return Err(Error::NotATree(format!("edge ({u}, {v}) closes a cycle")));
        }
        degree[u] += 1;
        degree[v] += 1;
    }
    Ok(degree)
}

/// Whether a tree on vertices `0..n` is a caterpillar, i.e. deleting its
/// leaves leaves a path. Empty and one-vertex remainders count as paths.
pub fn is_caterpillar(n: usize, edges: &[(usize, usize)]) -> Result<bool> {
    let degree = check_tree(n, edges)?;
    let mut inner_degree = vec![0usize; n];
    for &(u, v) in edges {
        if degree[u] > 1 && degree[v] > 1 {
            inner_degree[u] += 1;
            inner_degree[v] += 1;
        }
    }
    // What remains is a subtree, so it is a path iff no vertex has three
    // remaining neighbors.
    Ok(inner_degree.iter().all(|&d| d <= 2))
}

/// The residual path of a caterpillar tree, starting at its smallest
/// endpoint; `None` when no vertex survives leaf deletion.
pub(crate) fn residual_path(n: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let inner: Vec<bool> = adj.iter().map(|l| l.len() > 1).collect();
    let inner_adj = |v: usize| adj[v].iter().copied().filter(|&w| inner[w]).collect::<Vec<_>>();
    let start = (0..n).find(|&v| inner[v] && inner_adj(v).len() <= 1)?;
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = inner_adj(cur).into_iter().find(|&w| w != prev) {
        path.push(next);
        prev = cur;
        cur = next;
    }
    Some(path)
}

/// Result of [`verify_spanning_caterpillar`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(String),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Valid => f.write_str("valid"),
            Verdict::Invalid(reason) => write!(f, "invalid: {reason}"),
        }
    }
}

/// Checks that `c` is a spanning caterpillar of `g`, reporting the first
/// failed condition.
pub fn verify_spanning_caterpillar(g: &BipartiteGraph, c: &Caterpillar) -> Verdict {
    match check_caterpillar(g, c) {
        Ok(()) => Verdict::Valid,
        Err(reason) => Verdict::Invalid(reason),
    }
}

fn check_caterpillar(g: &BipartiteGraph, c: &Caterpillar) -> std::result::Result<(), String> {
    if c.spine.is_empty() {
        return Err("empty spine".into());
    }
    check_path(g, &c.spine).map_err(|e| format!("spine: {e}"))?;
    let on_spine: BTreeSet<VertexId> = c.spine.iter().copied().collect();
    for (&leg, &at) in &c.legs {
        if !g.contains(leg) {
            return Err(format!("leg {leg} is not a vertex of the graph"));
        }
        if on_spine.contains(&leg) {
            return Err(format!("{leg} is both on the spine and a leg"));
        }
        if !on_spine.contains(&at) {
            return Err(format!("leg {leg} hangs from {at}, which is not on the spine"));
        }
        if !g.adjacent(leg, at) {
            return Err(format!("leg edge {leg}-{at} is not in the graph"));
        }
    }
    if let Some(missing) = g
        .vertices()
        .find(|v| !on_spine.contains(v) && !c.legs.contains_key(v))
    {
        return Err(format!("{missing} is neither on the spine nor a leg"));
    }
    let edges: Vec<(usize, usize)> = c
        .tree_edges()
        .into_iter()
        .map(|(u, v)| (g.dense(u), g.dense(v)))
        .collect();
    match is_caterpillar(g.order(), &edges) {
        Ok(true) => Ok(()),
        Ok(false) => Err("tree is not a caterpillar".into()),
        Err(e) => Err(e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caterpillar_examples() {
        // Figure-1 tree: a1=0, a2..a4=1..3, b1..b3=4..6.
        let fig1 = [(0, 4), (0, 5), (0, 6), (1, 4), (2, 5), (3, 6)];
        assert!(!is_caterpillar(7, &fig1).unwrap());
        let spider = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)];
        assert!(!is_caterpillar(7, &spider).unwrap());
        let path = [(0, 1), (1, 2), (2, 3)];
        assert!(is_caterpillar(4, &path).unwrap());
        assert!(is_caterpillar(1, &[]).unwrap());
        assert!(is_caterpillar(2, &[(0, 1)]).unwrap());
        let star = [(0, 1), (0, 2), (0, 3), (0, 4)];
        assert!(is_caterpillar(5, &star).unwrap());
    }

    #[test]
    fn non_trees_are_rejected() {
        assert!(matches!(is_caterpillar(3, &[(0, 1)]), Err(Error::NotATree(_))));
        assert!(matches!(
            is_caterpillar(4, &[(0, 1), (1, 2), (2, 0)]),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(is_caterpillar(0, &[]), Err(Error::NotATree(_))));
        assert!(matches!(is_caterpillar(2, &[(0, 0)]), Err(Error::NotATree(_))));
    }

    #[test]
    fn residual_paths() {
        assert_eq!(residual_path(2, &[(0, 1)]), None);
        assert_eq!(residual_path(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]), Some(vec![0]));
        // 4 - 0 - 1 - 2 - 3 with a leaf 5 on 1.
        let edges = [(4, 0), (0, 1), (1, 2), (2, 3), (1, 5)];
        assert_eq!(residual_path(6, &edges), Some(vec![0, 1, 2]));
    }

    #[test]
    fn verifier_negatives() {
        let g = BipartiteGraph::new(2, 2, &[(1, 1), (1, 2), (2, 1), (2, 2)]).unwrap();
        let ok = Caterpillar {
            spine: vec![VertexId::a(1), VertexId::b(1), VertexId::a(2)],
            legs: [(VertexId::b(2), VertexId::a(1))].into_iter().collect(),
        };
        assert!(verify_spanning_caterpillar(&g, &ok).is_valid());

        let path3 = BipartiteGraph::new(2, 1, &[(1, 1), (2, 1)]).unwrap();
        let gap = Caterpillar {
            spine: vec![VertexId::a(1), VertexId::a(2)],
            legs: [(VertexId::b(1), VertexId::a(1))].into_iter().collect(),
        };
        assert!(!verify_spanning_caterpillar(&path3, &gap).is_valid());

        let mut missing = ok.clone();
        missing.legs.clear();
        let v = verify_spanning_caterpillar(&g, &missing);
        assert_eq!(v, Verdict::Invalid("b2 is neither on the spine nor a leg".into()));

        let mut dangling = ok.clone();
        dangling.legs.insert(VertexId::b(2), VertexId::b(1));
        assert!(!verify_spanning_caterpillar(&g, &dangling).is_valid());

        assert!(!verify_spanning_caterpillar(
            &g,
            &Caterpillar {
                spine: vec![],
                legs: BTreeMap::new()
            }
        )
        .is_valid());
    }
}
