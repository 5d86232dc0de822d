//! Spanning caterpillars of biconvex bipartite graphs.
//!
//! A bipartite graph `G = (A, B, E)` is biconvex when both parts can be
//! ordered so that every neighborhood is a run of consecutive vertices. This
//! crate
//!
//! * recognizes biconvex graphs and finds straight orderings ([`ordering`]),
//! * computes shortest straight paths under such an ordering ([`spath`]),
//! * builds a spanning caterpillar of any connected biconvex graph, reporting
//!   which branch of the construction fired ([`caterpillar`]),
//! * burns graphs: exact burning numbers and schedules of length `⌈√n⌉`
//!   derived from a spanning caterpillar ([`burning`]),
//! * generates seeded instances ([`generators`]) and checks everything above
//!   against brute force on tiny graphs ([`oracle`]).
//!
//! Vertices are 1-based and part-tagged: `a1 ... a{n_a}`, `b1 ... b{n_b}`.
//!
//! ```
//! use biconvex::caterpillar::{build_spanning_caterpillar, verify_spanning_caterpillar};
//! use biconvex::generators::gen_staircase;
//!
//! let (g, d) = gen_staircase(5, 6, 42).unwrap();
//! let (cat, trace) = build_spanning_caterpillar(&g, &d).unwrap();
//! assert!(verify_spanning_caterpillar(&g, &cat).is_valid());
//! println!("{} via {}", biconvex::spath::path_text(&cat.spine), trace.case);
//! ```

pub mod burning;
pub mod caterpillar;
pub mod cli;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod ordering;
pub mod spath;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Part, VertexId};
pub use ordering::DualOrdering;
