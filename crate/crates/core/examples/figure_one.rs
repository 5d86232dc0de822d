//! The seven-vertex convex graph with no spanning caterpillar: convex under
//! the natural B-order, not biconvex, and its only spanning tree (itself) is
//! a three-legged spider.

use biconvex::burning::exact_burning_number;
use biconvex::generators::fig1_graph;
use biconvex::oracle::{scan_orderings, scan_spanning_trees, OracleBudget};
use biconvex::ordering::{find_biconvex_ordering, is_convex_side};
use biconvex::spath::path_text;
use biconvex::{Error, Part};

pub fn main() {
    let g = fig1_graph();
    println!("edges: {:?}", g.edges());

    let convex = is_convex_side(&g, &[1, 2, 3], Part::A).unwrap();
    println!("A-neighborhoods consecutive under b1 b2 b3: {convex}");
    assert!(convex);

    let scan = scan_orderings(&g, false, &OracleBudget::default()).unwrap();
    println!(
        "full scan: {} ordering pairs examined, biconvex ordering found: {}",
        scan.pairs_examined,
        scan.ordering.is_some()
    );
    assert_eq!(find_biconvex_ordering(&g, 1000), Err(Error::ProvablyNone));

    let trees = scan_spanning_trees(&g, &OracleBudget::default()).unwrap();
    println!(
        "spanning trees examined: {}, caterpillar among them: {}",
        trees.trees_examined,
        trees.caterpillar.is_some()
    );
    assert!(trees.caterpillar.is_none());

    let (b, schedule) = exact_burning_number(&g, 5).unwrap();
    println!("burning number {b}, witness {}", path_text(&schedule.sources));
}
