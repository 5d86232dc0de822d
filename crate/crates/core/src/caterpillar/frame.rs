use std::collections::HashMap;

use crate::error::Result;
use crate::graph::{BipartiteGraph, Part, VertexId};
use crate::ordering::DualOrdering;

/// A relabeled copy of a graph in which a verified straight ordering has
/// become the natural one, plus translations to and from the caller's labels.
///
/// Transposition, reversal and induced subgraphs compose, so every
/// "without loss of generality" branch of the construction runs on the same
/// code path and maps its result back in one step.
#[derive(Debug, Clone)]
pub(crate) struct Frame {
    pub g: BipartiteGraph,
    back_a: Vec<VertexId>,
    back_b: Vec<VertexId>,
    fwd: HashMap<VertexId, VertexId>,
}

impl Frame {
    pub fn new(g: &BipartiteGraph, d: &DualOrdering) -> Frame {
        let pos_a: Vec<usize> = (1..=g.n_a()).map(|i| d.pos(VertexId::a(i))).collect();
        let pos_b: Vec<usize> = (1..=g.n_b()).map(|i| d.pos(VertexId::b(i))).collect();
        let back_a = d.order_a().iter().map(|&i| VertexId::a(i)).collect();
        let back_b = d.order_b().iter().map(|&i| VertexId::b(i)).collect();
        Frame::assemble(g.relabeled(&pos_a, &pos_b), back_a, back_b)
    }

    fn assemble(g: BipartiteGraph, back_a: Vec<VertexId>, back_b: Vec<VertexId>) -> Frame {
        let fwd = back_a
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, VertexId::a(i + 1)))
            .chain(back_b.iter().enumerate().map(|(j, &v)| (v, VertexId::b(j + 1))))
            .collect();
        Frame {
            g,
            back_a,
            back_b,
            fwd,
        }
    }

    /// The natural ordering of the frame graph, straight by construction.
    pub fn natural(&self) -> DualOrdering {
        DualOrdering::natural(self.g.n_a(), self.g.n_b()).assume_straight()
    }

    pub fn back(&self, v: VertexId) -> VertexId {
        match v.part {
            Part::A => self.back_a[v.index - 1],
            Part::B => self.back_b[v.index - 1],
        }
    }

    pub fn back_all(&self, vs: &[VertexId]) -> Vec<VertexId> {
        vs.iter().map(|&v| self.back(v)).collect()
    }

    /// Frame label of a caller vertex, if it survives in this frame.
    pub fn fwd(&self, v: VertexId) -> Option<VertexId> {
        self.fwd.get(&v).copied()
    }

    pub fn transposed(&self) -> Frame {
        Frame::assemble(self.g.transposed(), self.back_b.clone(), self.back_a.clone())
    }

    /// Both orders reversed: `a_i` becomes `a_{n_a + 1 - i}`, likewise for `B`.
    pub fn reversed(&self) -> Frame {
        let (n_a, n_b) = (self.g.n_a(), self.g.n_b());
        let pos_a: Vec<usize> = (1..=n_a).map(|i| n_a + 1 - i).collect();
        let pos_b: Vec<usize> = (1..=n_b).map(|j| n_b + 1 - j).collect();
        Frame::assemble(
            self.g.relabeled(&pos_a, &pos_b),
            self.back_a.iter().rev().copied().collect(),
            self.back_b.iter().rev().copied().collect(),
        )
    }

    /// The induced subgraph on the listed frame indices, kept in increasing
    /// order so the natural ordering restricts to the natural ordering.
    pub fn induced(&self, keep_a: &[usize], keep_b: &[usize]) -> Result<Frame> {
        let sub = self.g.induced_subgraph(keep_a, keep_b)?;
        let back_a = (1..=keep_a.len())
            .map(|i| self.back(sub.to_parent(VertexId::a(i))))
            .collect();
        let back_b = (1..=keep_b.len())
            .map(|j| self.back(sub.to_parent(VertexId::b(j))))
            .collect();
        Ok(Frame::assemble(sub.graph, back_a, back_b))
    }

    /// A frame over this frame's own labels; composing with it keeps results
    /// in this frame's coordinates.
    pub fn local(&self) -> Frame {
        Frame::assemble(
            self.g.clone(),
            self.g.part_vertices(Part::A).collect(),
            self.g.part_vertices(Part::B).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeling_makes_order_natural() {
        // Path a1 b1 a2 b2 a3 under scrambled orders.
        let g = BipartiteGraph::new(3, 2, &[(1, 1), (2, 1), (2, 2), (3, 2)]).unwrap();
        let d = DualOrdering::new(vec![3, 2, 1], vec![2, 1]).unwrap();
        let f = Frame::new(&g, &d);
        assert_eq!(f.back(VertexId::a(1)), VertexId::a(3));
        assert_eq!(f.fwd(VertexId::b(1)), Some(VertexId::b(2)));
        for &(a, b) in g.edges() {
            let fa = f.fwd(VertexId::a(a)).unwrap();
            let fb = f.fwd(VertexId::b(b)).unwrap();
            assert!(f.g.adjacent(fa, fb));
        }
        let r = f.reversed();
        assert_eq!(r.back(VertexId::a(1)), VertexId::a(1));
        let t = f.transposed();
        assert_eq!(t.back(VertexId::a(2)), VertexId::b(1));
        assert_eq!(t.g.n_a(), 2);
        let sub = f.induced(&[2, 3], &[1, 2]).unwrap();
        assert_eq!(sub.back(VertexId::a(1)), VertexId::a(2));
        assert_eq!(sub.fwd(VertexId::a(3)), None);
    }
}
