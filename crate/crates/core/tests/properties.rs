use proptest::prelude::*;

use biconvex::burning::{
    exact_burning_number, has_burning_schedule, is_burning_schedule, simulate_fire_spread,
    BurnSchedule,
};
use biconvex::caterpillar::{build_spanning_caterpillar, is_caterpillar, verify_spanning_caterpillar};
use biconvex::format::{from_edgelist, from_json, to_edgelist, to_json};
use biconvex::generators::{gen_chain, gen_staircase};
use biconvex::oracle::enumerate_trees;
use biconvex::ordering::{find_cross_pairs, is_biconvex, is_s_ordering};
use biconvex::spath::{is_monotone, is_s_path, shortest_s_path};
use biconvex::{BipartiteGraph, DualOrdering, Part};

fn graph() -> impl Strategy<Value = BipartiteGraph> {
    (1usize..=6, 1usize..=6)
        .prop_flat_map(|(n_a, n_b)| (Just(n_a), Just(n_b), proptest::collection::vec(any::<bool>(), n_a * n_b)))
        .prop_map(|(n_a, n_b, mask)| {
            let edges: Vec<_> = (0..n_a * n_b)
                .filter(|&i| mask[i])
                .map(|i| (i / n_b + 1, i % n_b + 1))
                .collect();
            BipartiteGraph::new(n_a, n_b, &edges).unwrap()
        })
}

fn graph_with_ordering() -> impl Strategy<Value = (BipartiteGraph, DualOrdering)> {
    graph().prop_flat_map(|g| {
        let pa = Just((1..=g.n_a()).collect::<Vec<_>>()).prop_shuffle();
        let pb = Just((1..=g.n_b()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), pa, pb).prop_map(|(g, a, b)| (g, DualOrdering::new(a, b).unwrap()))
    })
}

fn structured() -> impl Strategy<Value = (BipartiteGraph, DualOrdering)> {
    (1usize..=9, 1usize..=9, any::<u64>(), any::<bool>()).prop_map(|(n_a, n_b, seed, stair)| {
        if stair {
            gen_staircase(n_a, n_b, seed).unwrap()
        } else {
            gen_chain(n_a, n_b, seed).unwrap()
        }
    })
}

/// Crossing edge pairs counted straight from the definition.
fn naive_crossings(g: &BipartiteGraph, d: &DualOrdering) -> usize {
    let pos = |part, i| d.pos(biconvex::VertexId { part, index: i });
    let e = g.edges();
    let mut count = 0;
    for (i, &(a1, b1)) in e.iter().enumerate() {
        for &(a2, b2) in &e[..i] {
            let da = pos(Part::A, a1) as i64 - pos(Part::A, a2) as i64;
            let db = pos(Part::B, b1) as i64 - pos(Part::B, b2) as i64;
            if da * db < 0 {
                count += 1;
            }
        }
    }
    count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn distances_are_a_bipartite_metric(g in graph()) {
        let dist = g.all_distances();
        let n = g.order();
        for u in 0..n {
            prop_assert_eq!(dist[u][u], Some(0));
            for v in 0..n {
                prop_assert_eq!(dist[u][v], dist[v][u]);
                if let Some(d) = dist[u][v] {
                    let same_part = g.vertex_at(u).part == g.vertex_at(v).part;
                    prop_assert_eq!(d % 2 == 0, same_part);
                    for row in &dist {
                        if let (Some(x), Some(y)) = (row[u], row[v]) {
                            prop_assert!(d <= x + y);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn formats_round_trip((g, d) in graph_with_ordering()) {
        prop_assert_eq!(from_edgelist(&to_edgelist(&g)).unwrap(), g.clone());
        let (h, e) = from_json(&to_json(&g, Some(&d))).unwrap();
        prop_assert_eq!(&h, &g);
        let e = e.unwrap();
        prop_assert_eq!(e.order_a(), d.order_a());
        prop_assert_eq!(e.order_b(), d.order_b());
    }

    #[test]
    fn cross_pairs_match_the_definition((g, d) in graph_with_ordering()) {
        prop_assert_eq!(find_cross_pairs(&g, &d).len(), naive_crossings(&g, &d));
    }

    #[test]
    fn reversal_and_transposition_preserve_orderings((g, d) in graph_with_ordering()) {
        let biconvex = is_biconvex(&g, &d).unwrap();
        let straight = is_s_ordering(&g, &d);
        prop_assert_eq!(is_biconvex(&g, &d.reversed()).unwrap(), biconvex);
        prop_assert_eq!(is_s_ordering(&g, &d.reversed()), straight);
        prop_assert_eq!(is_biconvex(&g.transposed(), &d.transposed()).unwrap(), biconvex);
        prop_assert_eq!(is_s_ordering(&g.transposed(), &d.transposed()), straight);
    }

    #[test]
    fn generated_instances_are_certified((g, d) in structured()) {
        prop_assert!(g.is_connected());
        prop_assert!(is_biconvex(&g, &d).unwrap());
        prop_assert!(is_s_ordering(&g, &d));
    }

    #[test]
    fn generators_are_deterministic(n_a in 1usize..12, n_b in 1usize..12, seed in any::<u64>()) {
        prop_assert_eq!(gen_staircase(n_a, n_b, seed).unwrap().0, gen_staircase(n_a, n_b, seed).unwrap().0);
        prop_assert_eq!(gen_chain(n_a, n_b, seed).unwrap().0, gen_chain(n_a, n_b, seed).unwrap().0);
    }

    #[test]
    fn shortest_straight_paths_on_generated_instances((g, d) in structured()) {
        for u in g.vertices() {
            for v in g.vertices() {
                let p = shortest_s_path(&g, &d, u, v).unwrap();
                prop_assert_eq!(Some(p.len()), g.bfs_distance(u, v));
                prop_assert!(is_monotone(&d, &p.vertices));
                prop_assert!(is_s_path(&g, &d, &p.vertices).unwrap());
            }
        }
    }

    #[test]
    fn caterpillars_on_generated_instances((g, d) in structured()) {
        let (c, _) = build_spanning_caterpillar(&g, &d).unwrap();
        prop_assert!(verify_spanning_caterpillar(&g, &c).is_valid());
    }

    #[test]
    fn coverage_matches_fire_spread(g in graph(), picks in proptest::collection::vec(any::<prop::sample::Index>(), 1..5)) {
        let vs: Vec<_> = g.vertices().collect();
        let sources: Vec<_> = picks.iter().map(|i| *i.get(&vs)).collect();
        let s = BurnSchedule::new(sources.clone());
        prop_assert_eq!(is_burning_schedule(&g, &s), simulate_fire_spread(&g, &sources));
        if is_burning_schedule(&g, &s) {
            let mut longer = sources.clone();
            longer.push(vs[0]);
            prop_assert!(is_burning_schedule(&g, &BurnSchedule::new(longer)));
        }
    }

    #[test]
    fn exact_burning_is_tight((g, _) in structured()) {
        let (k, s) = exact_burning_number(&g, 8).unwrap();
        prop_assert_eq!(s.len(), k);
        prop_assert!(is_burning_schedule(&g, &s));
        prop_assert!(k == 1 || has_burning_schedule(&g, k - 1).is_none());
    }

    #[test]
    fn caterpillar_test_ignores_labels(idx in 0usize..1296, perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle()) {
        let trees = enumerate_trees(6);
        let t = &trees[idx];
        let relabeled: Vec<_> = t.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        prop_assert_eq!(is_caterpillar(6, t).unwrap(), is_caterpillar(6, &relabeled).unwrap());
    }
}
