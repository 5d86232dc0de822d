//! Spanning caterpillars of connected biconvex bipartite graphs.
//!
//! [`build_spanning_caterpillar`] walks the case analysis of the existence
//! argument on a graph relabeled so its straight ordering is natural:
//!
//! * at most six vertices: any spanning tree is a caterpillar;
//! * one part has a single vertex: the graph is a star;
//! * both end pairs `a_1, a_{n_a}` and `b_1, b_{n_b}` have common neighbors
//!   `b_c`, `a_c`: the spine is `a_c b_c`;
//! * exactly one end pair has a common neighbor: the spine is
//!   `b_1 a_f b_c a_l b_{n_b}` (parts swapped if needed);
//! * neither: a shortest straight `b_1`-`b_{n_b}` path, extended by `a_f` / `a_l`
//!   and repaired by vertex replacement at either end when `a_1` or `a_{n_a}`
//!   would otherwise be stranded.
//!
//! Every adjacency the argument relies on is checked as it is used; a failed
//! check surfaces as [`Error::InternalProofViolation`].

mod frame;
mod tree;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Part, VertexId};
use crate::ordering::DualOrdering;
use crate::spath::shortest_s_path;

use frame::Frame;
pub use tree::{is_caterpillar, verify_spanning_caterpillar, Caterpillar, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseLabel {
    SmallN,
    Star,
    StarSwapped,
    CommonBoth,
    CommonOne,
    CommonOneSwapped,
    SpathPlain,
    SpathReplaceLeft,
    SpathReplaceRight,
    SpathReplaceBoth,
}

impl CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::SmallN => "small_n",
            CaseLabel::Star => "star",
            CaseLabel::StarSwapped => "star_swapped",
            CaseLabel::CommonBoth => "common_both",
            CaseLabel::CommonOne => "common_one",
            CaseLabel::CommonOneSwapped => "common_one_swapped",
            CaseLabel::SpathPlain => "spath_plain",
            CaseLabel::SpathReplaceLeft => "spath_replace_left",
            CaseLabel::SpathReplaceRight => "spath_replace_right",
            CaseLabel::SpathReplaceBoth => "spath_replace_both",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Named vertices used by the branch that fired, in the caller's labels.
/// In role-swapped branches the names follow the roles, so `b_c` may be an
/// A-vertex of the input.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_f: Option<VertexId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_l: Option<VertexId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_c: Option<VertexId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_c: Option<VertexId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_tilde: Option<VertexId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x0: Option<VertexId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y0: Option<VertexId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x1: Option<VertexId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y1: Option<VertexId>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub a0: Vec<VertexId>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub a1: Vec<VertexId>,
    /// The shortest straight path the spine grew from.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub q: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseTrace {
    pub case: CaseLabel,
    pub witnesses: Witnesses,
}

fn violation(msg: impl Into<String>) -> Error {
    Error::InternalProofViolation(msg.into())
}

/// The `<`-minimal and `<`-maximal neighbors of `v`.
pub fn extreme_neighbors(
    g: &BipartiteGraph,
    d: &DualOrdering,
    v: VertexId,
) -> Result<(VertexId, VertexId)> {
    let first = g.neighbors(v).min_by_key(|&w| d.pos(w));
    let last = g.neighbors(v).max_by_key(|&w| d.pos(w));
    first.zip(last).ok_or(Error::IsolatedVertex(v))
}

/// Consecutive-neighbors check: `z` is adjacent to `x` and `y`, so under a
/// biconvex ordering it must be adjacent to every `w` strictly between them.
///
/// Returns `Ok(true)` when the attachment edge `z w` is present, or when `w`
/// does not lie strictly between `x` and `y` (nothing to check).
pub fn interval_attachment(
    g: &BipartiteGraph,
    d: &DualOrdering,
    x: VertexId,
    y: VertexId,
    z: VertexId,
    w: VertexId,
) -> Result<bool> {
    if x.part != y.part || x.part != w.part || z.part == x.part {
        return Err(violation(format!(
            "interval attachment needs x, y, w in one part and z in the other (got {x}, {y}, {z}, {w})"
        )));
    }
    if !g.adjacent(z, x) || !g.adjacent(z, y) {
        return Err(violation(format!("{z} is not a common neighbor of {x} and {y}")));
    }
    let (lo, hi) = if d.pos(x) < d.pos(y) {
        (d.pos(x), d.pos(y))
    } else {
        (d.pos(y), d.pos(x))
    };
    let p = d.pos(w);
    if p <= lo || p >= hi || g.adjacent(z, w) {
        return Ok(true);
    }
    Err(Error::ObservationViolated { x, y, z, w })
}

/// Replaces the path vertex `x` by `y`, keeping the position.
pub fn vertex_replacement(
    g: &BipartiteGraph,
    p: &[VertexId],
    x: VertexId,
    y: VertexId,
) -> Result<Vec<VertexId>> {
    let at = p
        .iter()
        .position(|&v| v == x)
        .ok_or_else(|| Error::ReplacementBreaksPath(format!("{x} is not on the path")))?;
    if p.contains(&y) {
        return Err(Error::ReplacementBreaksPath(format!("{y} is already on the path")));
    }
    for neighbor in [at.checked_sub(1), Some(at + 1)]
        .into_iter()
        .flatten()
        .filter_map(|i| p.get(i))
    {
        if !g.adjacent(*neighbor, y) {
            return Err(Error::ReplacementBreaksPath(format!(
                "{y} is not adjacent to {neighbor}"
            )));
        }
    }
    let mut out = p.to_vec();
    out[at] = y;
    Ok(out)
}

/// Builds a spanning caterpillar of a connected graph from a biconvex
/// straight ordering, and reports which branch of the case analysis fired.
pub fn build_spanning_caterpillar(
    g: &BipartiteGraph,
    d: &DualOrdering,
) -> Result<(Caterpillar, CaseTrace)> {
    d.check_sizes(g)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let d = if d.verified_straight() {
        d.clone()
    } else {
        d.clone().verify(g)?
    };
    if !d.verified_biconvex() {
        return Err(Error::OrderingNotBiconvex);
    }
    if !d.verified_straight() {
        return Err(Error::OrderingNotStraight);
    }
    let (caterpillar, trace) = if g.order() <= 6 {
        small(g)?
    } else {
        construct(&Frame::new(g, &d))?
    };
    match verify_spanning_caterpillar(g, &caterpillar) {
        Verdict::Valid => Ok((caterpillar, trace)),
        Verdict::Invalid(reason) => Err(violation(format!("constructed tree rejected: {reason}"))),
    }
}

/// Frame-local spine and legs, mapped back on output.
struct Draft {
    spine: Vec<VertexId>,
    legs: BTreeMap<VertexId, VertexId>,
}

impl Draft {
    fn new(spine: Vec<VertexId>) -> Self {
        Draft {
            spine,
            legs: BTreeMap::new(),
        }
    }

    fn into_caterpillar(self, f: &Frame) -> Caterpillar {
        Caterpillar {
            spine: f.back_all(&self.spine),
            legs: self.legs.into_iter().map(|(l, a)| (f.back(l), f.back(a))).collect(),
        }
    }
}

fn ensure_edge(g: &BipartiteGraph, u: VertexId, v: VertexId, why: &str) -> Result<()> {
    if g.adjacent(u, v) {
        Ok(())
    } else {
        Err(violation(format!("{why}: {u} and {v} are not adjacent")))
    }
}

fn small(g: &BipartiteGraph) -> Result<(Caterpillar, CaseTrace)> {
    let root = g.vertex_at(0);
    let dist = g.distances_from(root);
    let mut edges = Vec::new();
    for v in g.vertices().skip(1) {
        let dv = dist[g.dense(v)].expect("connected");
        let parent = g
            .neighbors(v)
            .find(|&w| dist[g.dense(w)] == Some(dv - 1))
            .expect("BFS parent");
        edges.push((g.dense(parent), g.dense(v)));
    }
    if !is_caterpillar(g.order(), &edges)? {
        return Err(violation("spanning tree on at most six vertices is not a caterpillar"));
    }
    let spine: Vec<VertexId> = match tree::residual_path(g.order(), &edges) {
        Some(path) => path.into_iter().map(|i| g.vertex_at(i)).collect(),
        None => vec![root],
    };
    let on_spine: BTreeSet<_> = spine.iter().copied().collect();
    let mut legs = BTreeMap::new();
    for &(u, v) in &edges {
        let (u, v) = (g.vertex_at(u), g.vertex_at(v));
        match (on_spine.contains(&u), on_spine.contains(&v)) {
            (true, false) => legs.insert(v, u),
            (false, true) => legs.insert(u, v),
            _ => None,
        };
    }
    Ok((
        Caterpillar { spine, legs },
        CaseTrace {
            case: CaseLabel::SmallN,
            witnesses: Witnesses::default(),
        },
    ))
}

fn common_neighbors(g: &BipartiteGraph, u: VertexId, v: VertexId) -> Vec<usize> {
    g.neighbor_indices(u)
        .iter()
        .copied()
        .filter(|&w| g.neighbor_indices(v).binary_search(&w).is_ok())
        .collect()
}

fn construct(f: &Frame) -> Result<(Caterpillar, CaseTrace)> {
    let g = &f.g;
    let (n_a, n_b) = (g.n_a(), g.n_b());
    if n_a == 1 || n_b == 1 {
        return star(f);
    }
    let (a_first, a_last) = (VertexId::a(1), VertexId::a(n_a));
    let (b_first, b_last) = (VertexId::b(1), VertexId::b(n_b));
    let common_a = common_neighbors(g, a_first, a_last);
    let common_b = common_neighbors(g, b_first, b_last);
    match (common_a.is_empty(), common_b.is_empty()) {
        (false, false) => common_both(f, VertexId::b(common_a[0]), VertexId::a(common_b[0])),
        (false, true) => common_one(f, CaseLabel::CommonOne),
        (true, false) => common_one(&f.transposed(), CaseLabel::CommonOneSwapped),
        (true, true) => straight_spine(f),
    }
}

fn star(f: &Frame) -> Result<(Caterpillar, CaseTrace)> {
    let g = &f.g;
    let (center, case) = if g.n_a() == 1 {
        (VertexId::a(1), CaseLabel::Star)
    } else {
        (VertexId::b(1), CaseLabel::StarSwapped)
    };
    let mut draft = Draft::new(vec![center]);
    for leaf in g.part_vertices(center.part.other()) {
        ensure_edge(g, center, leaf, "star")?;
        draft.legs.insert(leaf, center);
    }
    Ok((
        draft.into_caterpillar(f),
        CaseTrace {
            case,
            witnesses: Witnesses::default(),
        },
    ))
}

fn common_both(f: &Frame, b_c: VertexId, a_c: VertexId) -> Result<(Caterpillar, CaseTrace)> {
    let g = &f.g;
    let d = f.natural();
    let (n_a, n_b) = (g.n_a(), g.n_b());
    let mut draft = Draft::new(vec![a_c, b_c]);
    for a in g.part_vertices(Part::A).filter(|&a| a != a_c) {
        interval_attachment(g, &d, VertexId::a(1), VertexId::a(n_a), b_c, a)?;
        ensure_edge(g, b_c, a, "common neighbor of a_1 and a_n")?;
        draft.legs.insert(a, b_c);
    }
    for b in g.part_vertices(Part::B).filter(|&b| b != b_c) {
        interval_attachment(g, &d, VertexId::b(1), VertexId::b(n_b), a_c, b)?;
        ensure_edge(g, a_c, b, "common neighbor of b_1 and b_n")?;
        draft.legs.insert(b, a_c);
    }
    let witnesses = Witnesses {
        a_c: Some(f.back(a_c)),
        b_c: Some(f.back(b_c)),
        ..Witnesses::default()
    };
    Ok((
        draft.into_caterpillar(f),
        CaseTrace {
            case: CaseLabel::CommonBoth,
            witnesses,
        },
    ))
}

/// `a_1` and `a_{n_a}` share a neighbor, `b_1` and `b_{n_b}` do not.
fn common_one(f: &Frame, case: CaseLabel) -> Result<(Caterpillar, CaseTrace)> {
    let g = &f.g;
    let d = f.natural();
    let (n_a, n_b) = (g.n_a(), g.n_b());
    let (a_first, a_last) = (VertexId::a(1), VertexId::a(n_a));
    let (b_first, b_last) = (VertexId::b(1), VertexId::b(n_b));
    let b_c = VertexId::b(
        *common_neighbors(g, a_first, a_last)
            .first()
            .ok_or_else(|| violation("a_1 and a_n have no common neighbor"))?,
    );
    let (a_f, _) = extreme_neighbors(g, &d, b_first)?;
    let (_, a_l) = extreme_neighbors(g, &d, b_last)?;
    if b_c == b_first || b_c == b_last || a_f == a_l {
        return Err(violation(format!(
            "expected distinct b_1, b_c = {b_c}, b_n and a_f = {a_f} != a_l = {a_l}"
        )));
    }
    let spine = vec![b_first, a_f, b_c, a_l, b_last];
    crate::spath::check_path(g, &spine).map_err(|e| violation(format!("spine: {e}")))?;
    let mut draft = Draft::new(spine.clone());
    for a in g.part_vertices(Part::A).filter(|a| !spine.contains(a)) {
        interval_attachment(g, &d, a_first, a_last, b_c, a)?;
        ensure_edge(g, b_c, a, "b_c sees all of A")?;
        draft.legs.insert(a, b_c);
    }
    for b in g.part_vertices(Part::B).filter(|b| !spine.contains(b)) {
        let (lo, hi, at) = if b < b_c {
            (b_first, b_c, a_f)
        } else {
            (b_c, b_last, a_l)
        };
        interval_attachment(g, &d, lo, hi, at, b)?;
        ensure_edge(g, at, b, "B-vertex beside b_c")?;
        draft.legs.insert(b, at);
    }
    let witnesses = Witnesses {
        a_f: Some(f.back(a_f)),
        a_l: Some(f.back(a_l)),
        b_c: Some(f.back(b_c)),
        ..Witnesses::default()
    };
    Ok((draft.into_caterpillar(f), CaseTrace { case, witnesses }))
}

/// How the spine absorbs the A-vertices beyond `a_l` (or before `a_f`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Overhang {
    /// The extreme A-vertex already sees the spine at this B-vertex, which
    /// then sees the whole overhang.
    Attach { at: VertexId },
    /// Spine vertex `x` is swapped for the off-spine `y`; `x` itself hangs
    /// from `inward`, its neighbor toward the middle of the spine.
    Replace {
        x: VertexId,
        y: VertexId,
        inward: VertexId,
    },
}

/// Handles a non-empty overhang after `a_l` in a frame whose last A-vertex
/// is the one that may be stranded. `p` is the extended path in frame labels.
fn resolve_right(f: &Frame, p: &[VertexId]) -> Result<Overhang> {
    let g = &f.g;
    let d = f.natural();
    let last = VertexId::a(g.n_a());
    if p.contains(&last) {
        return Err(violation(format!("{last} unexpectedly on the path")));
    }
    if let Some(at) = p
        .iter()
        .copied()
        .filter(|&v| v.part == Part::B && g.adjacent(v, last))
        .min()
    {
        return Ok(Overhang::Attach { at });
    }
    let (_, y) = extreme_neighbors(g, &d, last)?;
    for i in (0..p.len().saturating_sub(2)).filter(|&i| p[i].part == Part::B) {
        let (left, mid, right) = (p[i], p[i + 1], p[i + 2]);
        if left < y && y < right {
            interval_attachment(g, &d, left, right, mid, y)?;
            ensure_edge(g, mid, y, "b~ sandwiched on the path")?;
            return Ok(Overhang::Replace {
                x: right,
                y,
                inward: mid,
            });
        }
    }
    Err(violation(format!("last neighbor {y} of {last} is not sandwiched by the path")))
}

fn map_overhang(o: Overhang, f: &Frame) -> Overhang {
    match o {
        Overhang::Attach { at } => Overhang::Attach { at: f.back(at) },
        Overhang::Replace { x, y, inward } => Overhang::Replace {
            x: f.back(x),
            y: f.back(y),
            inward: f.back(inward),
        },
    }
}

/// Neither end pair has a common neighbor.
fn straight_spine(f: &Frame) -> Result<(Caterpillar, CaseTrace)> {
    let g = &f.g;
    let d = f.natural();
    let (n_a, n_b) = (g.n_a(), g.n_b());
    let (b_first, b_last) = (VertexId::b(1), VertexId::b(n_b));

    let q = shortest_s_path(g, &d, b_first, b_last)?.vertices;
    let increasing = |part: Part| {
        let idx: Vec<usize> = q.iter().filter(|v| v.part == part).map(|v| v.index).collect();
        idx.windows(2).all(|w| w[0] < w[1])
    };
    if q.len() < 5 || !increasing(Part::A) || !increasing(Part::B) {
        return Err(violation(format!(
            "straight path {} is not increasing with at least two A-vertices",
            crate::spath::path_text(&q)
        )));
    }
    let (a_f, _) = extreme_neighbors(g, &d, b_first)?;
    let (_, a_l) = extreme_neighbors(g, &d, b_last)?;
    let (q_first_a, q_last_a) = (q[1], q[q.len() - 2]);
    if a_f > q_first_a || a_l < q_last_a {
        return Err(violation("a_f / a_l outside the straight path's A-range"));
    }
    let mut p = q.clone();
    if a_f < q_first_a {
        p.insert(0, a_f);
    }
    if q_last_a < a_l {
        p.push(a_l);
    }
    let before: Vec<usize> = (1..a_f.index).collect();
    let after: Vec<usize> = (a_l.index + 1..=n_a).collect();
    let all_b: Vec<usize> = (1..=n_b).collect();

    // G - A_0 keeps a_{n_a} as its last A-vertex.
    let right = if after.is_empty() {
        None
    } else {
        let keep: Vec<usize> = (a_f.index..=n_a).collect();
        let sub = f.local().induced(&keep, &all_b)?;
        let local: Vec<VertexId> = p.iter().map(|&v| sub.fwd(v).expect("on path")).collect();
        Some(map_overhang(resolve_right(&sub, &local)?, &sub))
    };
    // G - A_1, reversed, makes a_1 the last A-vertex.
    let left = if before.is_empty() {
        None
    } else {
        let keep: Vec<usize> = (1..=a_l.index).collect();
        let sub = f.local().induced(&keep, &all_b)?.reversed();
        let local: Vec<VertexId> = p.iter().rev().map(|&v| sub.fwd(v).expect("on path")).collect();
        Some(map_overhang(resolve_right(&sub, &local)?, &sub))
    };

    let mut witnesses = Witnesses {
        a_f: Some(f.back(a_f)),
        a_l: Some(f.back(a_l)),
        a0: before.iter().map(|&i| f.back(VertexId::a(i))).collect(),
        a1: after.iter().map(|&i| f.back(VertexId::a(i))).collect(),
        q: f.back_all(&q),
        ..Witnesses::default()
    };

    let mut spine = p.clone();
    // Replaced spine vertex -> (replacement, inward neighbor).
    let mut replaced: BTreeMap<VertexId, (VertexId, VertexId)> = BTreeMap::new();
    if let Some(Overhang::Replace { x, y, inward }) = right {
        spine = vertex_replacement(g, &spine, x, y)?;
        replaced.insert(x, (y, inward));
        witnesses.x1 = Some(f.back(x));
        witnesses.y1 = Some(f.back(y));
        witnesses.b_tilde = Some(f.back(y));
    }
    if let Some(Overhang::Replace { x, y, inward }) = left {
        if let Some(Overhang::Replace { y: y1, .. }) = right {
            check_claim(g, y, y1)?;
        }
        if replaced.contains_key(&x) {
            return Err(violation(format!("both overhangs replace {x}")));
        }
        spine = vertex_replacement(g, &spine, x, y)?;
        replaced.insert(x, (y, inward));
        witnesses.x0 = Some(f.back(x));
        witnesses.y0 = Some(f.back(y));
        witnesses.b_tilde = Some(f.back(y));
    }
    if replaced.len() == 2 {
        witnesses.b_tilde = None;
    }
    for side in [left, right].into_iter().flatten() {
        if let Overhang::Attach { at } = side {
            if !spine.contains(&at) {
                return Err(violation(format!("attachment vertex {at} was replaced")));
            }
        }
    }
    let case = match (left, right) {
        (Some(Overhang::Replace { .. }), Some(Overhang::Replace { .. })) => CaseLabel::SpathReplaceBoth,
        (Some(Overhang::Replace { .. }), _) => CaseLabel::SpathReplaceLeft,
        (_, Some(Overhang::Replace { .. })) => CaseLabel::SpathReplaceRight,
        _ => CaseLabel::SpathPlain,
    };

    let mut draft = Draft::new(spine.clone());
    let on_spine: BTreeSet<VertexId> = spine.iter().copied().collect();
    // Consecutive same-part vertices of P with the vertex between them.
    let sandwich = |w: VertexId| {
        (0..p.len().saturating_sub(2))
            .filter(|&i| p[i].part == w.part)
            .map(|i| (p[i], p[i + 1], p[i + 2]))
            .find(|&(lo, _, hi)| lo < w && w < hi)
    };
    for w in g.vertices().filter(|w| !on_spine.contains(w)) {
        let at = if let Some(&(_, inward)) = replaced.get(&w) {
            inward
        } else if w.part == Part::A && w < a_f {
            overhang_target(left.expect("A_0 is non-empty"))
        } else if w.part == Part::A && w > a_l {
            overhang_target(right.expect("A_1 is non-empty"))
        } else {
            let (lo, mid, hi) = sandwich(w)
                .ok_or_else(|| violation(format!("{w} is not sandwiched by the path")))?;
            interval_attachment(g, &d, lo, hi, mid, w)?;
            replaced.get(&mid).map_or(mid, |&(y, _)| y)
        };
        ensure_edge(g, at, w, "leg attachment")?;
        draft.legs.insert(w, at);
    }
    Ok((draft.into_caterpillar(f), CaseTrace { case, witnesses }))
}

fn overhang_target(o: Overhang) -> VertexId {
    match o {
        Overhang::Attach { at } => at,
        Overhang::Replace { y, .. } => y,
    }
}

/// With both overhangs replaced, the first neighbor `y0` of `a_1` precedes
/// the last neighbor `y1` of `a_{n_a}`. Otherwise `a_1 y0`, `a_{n_a} y1` cross,
/// and straightness would hand `a_1` and `a_{n_a}` a common neighbor.
fn check_claim(g: &BipartiteGraph, y0: VertexId, y1: VertexId) -> Result<()> {
    let n_a = g.n_a();
    let rectified = g.has_edge(1, y1.index) || g.has_edge(n_a, y0.index);
    if rectified {
        return Err(violation(format!(
            "a_1 and a_n share a neighbor through {y0} / {y1}"
        )));
    }
    if y0 >= y1 {
        return Err(violation(format!(
            "replacement targets out of order: y0 = {y0}, y1 = {y1}"
        )));
    }
    Ok(())
}
