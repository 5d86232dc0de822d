//! Exhaustive sweeps over small instances.
//!
//! Relabeling by the ordering makes any straight ordering the natural one, so
//! enumerating graphs whose natural ordering is biconvex and straight covers
//! every (graph, straight ordering) pair of the given part sizes.

use std::collections::BTreeMap;

use biconvex::caterpillar::{build_spanning_caterpillar, verify_spanning_caterpillar, CaseLabel};
use biconvex::generators::{corpus, from_intervals};
use biconvex::oracle::{
    oracle_has_spanning_caterpillar, oracle_is_biconvex_straight,
    oracle_straight_shortest_path_exists, OracleBudget,
};
use biconvex::ordering::{find_biconvex_s_ordering, is_s_ordering};
use biconvex::spath::{is_s_path, shortest_s_path};
use biconvex::{BipartiteGraph, DualOrdering, Error};

/// Every graph on `n_a x n_b` with an interval of B per A-vertex whose
/// natural ordering is biconvex and straight, and which is connected.
fn straight_natural(n_a: usize, n_b: usize) -> Vec<(BipartiteGraph, DualOrdering)> {
    let intervals: Vec<(usize, usize)> = (1..=n_b).flat_map(|l| (l..=n_b).map(move |r| (l, r))).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; n_a];
    loop {
        let picked: Vec<_> = choice.iter().map(|&i| intervals[i]).collect();
        let g = from_intervals(n_b, &picked).unwrap();
        if g.is_connected() {
            if let Ok(d) = DualOrdering::natural(n_a, n_b).verify(&g) {
                if d.verified_straight() {
                    out.push((g, d));
                }
            }
        }
        let mut i = 0;
        while i < n_a && choice[i] + 1 == intervals.len() {
            choice[i] = 0;
            i += 1;
        }
        if i == n_a {
            return out;
        }
        choice[i] += 1;
    }
}

#[test]
fn builder_succeeds_on_every_small_straight_ordering() {
    let mut cases: BTreeMap<CaseLabel, usize> = BTreeMap::new();
    let mut total = 0;
    for (n_a, n_b) in [(2, 5), (3, 4), (4, 3), (3, 5), (5, 3), (4, 4), (4, 5), (5, 4), (3, 6)] {
        for (g, d) in straight_natural(n_a, n_b) {
            let (c, trace) = build_spanning_caterpillar(&g, &d)
                .unwrap_or_else(|e| panic!("{:?}: {e}", g.edges()));
            assert!(verify_spanning_caterpillar(&g, &c).is_valid());
            *cases.entry(trace.case).or_default() += 1;
            total += 1;
        }
    }
    println!("{total} instances: {cases:?}");
    for case in [
        CaseLabel::CommonBoth,
        CaseLabel::CommonOne,
        CaseLabel::CommonOneSwapped,
        CaseLabel::SpathPlain,
        CaseLabel::SpathReplaceLeft,
        CaseLabel::SpathReplaceRight,
        CaseLabel::SpathReplaceBoth,
    ] {
        assert!(cases.contains_key(&case), "{case} never fired");
    }
}

#[test]
fn straight_path_search_matches_full_enumeration() {
    // Wherever some shortest path is cross-free, the search finds one of the
    // right length; where none is, the search says so.
    let mut gaps = 0;
    for (g, d) in straight_natural(3, 4).into_iter().chain(straight_natural(4, 3)) {
        for u in g.vertices() {
            for v in g.vertices() {
                let exists = oracle_straight_shortest_path_exists(&g, &d, u, v);
                match shortest_s_path(&g, &d, u, v) {
                    Ok(p) => {
                        assert!(exists);
                        assert_eq!(Some(p.len()), g.bfs_distance(u, v));
                        assert!(is_s_path(&g, &d, &p.vertices).unwrap());
                    }
                    Err(Error::NoStraightShortestPath { .. }) => {
                        assert!(!exists);
                        gaps += 1;
                    }
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
    assert!(gaps > 0);
}

#[test]
fn straight_ordering_search_agrees_with_full_scan() {
    let budget = OracleBudget::default();
    for seed in 0..300 {
        let g = corpus::random(seed, 5);
        if !g.is_connected() {
            continue;
        }
        let oracle = oracle_is_biconvex_straight(&g, &budget);
        let search = find_biconvex_s_ordering(&g, u64::MAX);
        assert_eq!(oracle.is_ok(), search.is_ok(), "seed {seed}: {:?}", g.edges());
        if let Ok(d) = search {
            assert!(is_s_ordering(&g, &d));
        }
    }
}

#[test]
fn spanning_caterpillars_exist_wherever_the_builder_runs() {
    let budget = OracleBudget::default();
    for (g, d) in straight_natural(3, 4).into_iter().step_by(7) {
        assert!(oracle_has_spanning_caterpillar(&g, &budget).unwrap());
        assert!(build_spanning_caterpillar(&g, &d).is_ok());
    }
}
