//! Shortest straight paths on a staircase, and a straight ordering under
//! which some shortest path is forced to use two crossing edges.

use biconvex::generators::{fixtures, from_intervals, gen_staircase};
use biconvex::oracle::all_shortest_paths;
use biconvex::spath::{is_monotone, is_s_path, shortest_s_path};
use biconvex::{DualOrdering, VertexId};

pub fn main() {
    let (g, d) = gen_staircase(5, 7, 2024).unwrap();
    let (from, to) = (VertexId::b(1), VertexId::b(7));
    let p = shortest_s_path(&g, &d, from, to).unwrap();
    println!("staircase {:?}", g.edges());
    println!(
        "{from} -> {to}: {} (length {}, BFS distance {:?}, {} shortest paths in total)",
        p.to_text(),
        p.len(),
        g.bfs_distance(from, to),
        all_shortest_paths(&g, from, to).len()
    );
    assert!(is_monotone(&d, &p.vertices));

    let (g, d) = fixtures::nine_vertex();
    let p = shortest_s_path(&g, &d, VertexId::b(1), VertexId::b(5)).unwrap();
    println!("nine-vertex fixture b1 -> b5: {}", p.to_text());

    // a1:{b2}, a2:{b1,b2}: every cross pair is rectified, but the only
    // a1-b1 path uses both edges of one.
    let g = from_intervals(2, &[(2, 2), (1, 2)]).unwrap();
    let natural = DualOrdering::natural(2, 2).verify(&g).unwrap();
    let only = [VertexId::a(1), VertexId::b(2), VertexId::a(2), VertexId::b(1)];
    println!(
        "natural order straight: {}, a1 b2 a2 b1 straight under it: {}",
        natural.verified_straight(),
        is_s_path(&g, &natural, &only).unwrap()
    );
    println!(
        "search: {}",
        shortest_s_path(&g, &natural, VertexId::a(1), VertexId::b(1)).unwrap_err()
    );
    let flipped = DualOrdering::new(vec![1, 2], vec![2, 1]).unwrap().verify(&g).unwrap();
    println!(
        "with b2 before b1: {}",
        shortest_s_path(&g, &flipped, VertexId::a(1), VertexId::b(1)).unwrap().to_text()
    );
}
