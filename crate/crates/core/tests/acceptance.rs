//! Acceptance criteria, one line each. Runs without the test harness so every
//! line is printed; exits non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use biconvex::burning::{ceil_sqrt, exact_burning_number, is_burning_schedule, schedule_from_caterpillar};
use biconvex::caterpillar::{build_spanning_caterpillar, is_caterpillar, verify_spanning_caterpillar};
use biconvex::generators::{corpus, fig1_graph, fixtures, path_graph};
use biconvex::oracle::{
    enumerate_trees, oracle_has_spanning_caterpillar, oracle_is_biconvex, oracle_is_biconvex_straight,
    scan_orderings, OracleBudget,
};
use biconvex::ordering::{find_biconvex_s_ordering, is_convex_side};
use biconvex::spath::{is_s_path, shortest_s_path};
use biconvex::{BipartiteGraph, Part};

type Check = Result<String, String>;
type Criterion = (&'static str, &'static str, Duration, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn figure_one() -> Check {
    let g = fig1_graph();
    let budget = OracleBudget::default();
    ensure(is_convex_side(&g, &[1, 2, 3], Part::A).unwrap(), || "not convex under b1 b2 b3".into())?;
    let scan = scan_orderings(&g, false, &budget).map_err(|e| e.to_string())?;
    ensure(scan.ordering.is_none() && scan.pairs_examined == 144, || {
        format!("scan found {:?} after {} pairs", scan.ordering, scan.pairs_examined)
    })?;
    let has = oracle_has_spanning_caterpillar(&g, &budget).map_err(|e| e.to_string())?;
    ensure(!has, || "a spanning caterpillar was found".into())?;
    Ok("convex, 144/144 ordering pairs fail, no spanning caterpillar".into())
}

fn small_trees() -> Check {
    let mut total = 0;
    for n in 1..=6 {
        for t in enumerate_trees(n) {
            total += 1;
            ensure(is_caterpillar(n, &t).unwrap(), || format!("tree {t:?} on {n} vertices"))?;
        }
    }
    ensure(total == 1 + 1 + 3 + 16 + 125 + 1296, || format!("{total} trees"))?;
    let spider = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)];
    ensure(!is_caterpillar(7, &spider).unwrap(), || "spider accepted".into())?;
    Ok(format!("{total}/{total} labeled trees on <= 6 vertices are caterpillars; the 7-vertex spider is not"))
}

fn soundness_sweep() -> Check {
    let mut count = 0;
    for seed in 0..1000 {
        let (kind, g, d) = corpus::structured(seed, 30);
        let (c, _) = build_spanning_caterpillar(&g, &d).map_err(|e| format!("seed {seed} ({kind:?}): {e}"))?;
        ensure(verify_spanning_caterpillar(&g, &c).is_valid(), || format!("seed {seed} rejected"))?;
        count += 1;
    }
    for (name, g, d) in fixtures::all() {
        let (c, _) = build_spanning_caterpillar(&g, &d).map_err(|e| format!("{name}: {e}"))?;
        ensure(verify_spanning_caterpillar(&g, &c).is_valid(), || format!("{name} rejected"))?;
    }
    Ok(format!("{count}/1000 generated instances and {} fixtures verify", fixtures::all().len()))
}

fn oracle_agreement() -> Check {
    let budget = OracleBudget::default();
    let mut checked = 0;
    for seed in 0..500 {
        let g = corpus::random(seed, 5);
        if !g.is_connected() || oracle_is_biconvex(&g, &budget).is_err() {
            continue;
        }
        checked += 1;
        let d = find_biconvex_s_ordering(&g, u64::MAX).map_err(|e| format!("seed {seed}: {e}"))?;
        let (c, _) = build_spanning_caterpillar(&g, &d).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(verify_spanning_caterpillar(&g, &c).is_valid(), || format!("seed {seed} rejected"))?;
        let has = oracle_has_spanning_caterpillar(&g, &budget).map_err(|e| e.to_string())?;
        ensure(has, || format!("seed {seed}: oracle finds no spanning caterpillar"))?;
    }
    Ok(format!("{checked}/{checked} connected biconvex instances of 500 agree"))
}

fn straight_paths() -> Check {
    let mut pairs = 0;
    for seed in 0..100 {
        let (_, g, d) = corpus::structured(seed, 30);
        for u in g.vertices() {
            for v in g.vertices() {
                let p = shortest_s_path(&g, &d, u, v).map_err(|e| format!("seed {seed}: {e}"))?;
                ensure(Some(p.len()) == g.bfs_distance(u, v), || format!("seed {seed}: {u}-{v} too long"))?;
                ensure(is_s_path(&g, &d, &p.vertices).unwrap(), || format!("seed {seed}: {u}-{v} crosses"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs}/{pairs} vertex pairs over 100 instances"))
}

fn straight_orderings() -> Check {
    let budget = OracleBudget::default();
    let mut checked = 0;
    for seed in 0..300 {
        let g = corpus::random(seed, 6);
        if !g.is_connected() || oracle_is_biconvex(&g, &budget).is_err() {
            continue;
        }
        checked += 1;
        oracle_is_biconvex_straight(&g, &budget).map_err(|e| format!("seed {seed}: {e}"))?;
    }
    Ok(format!("{checked}/{checked} connected biconvex graphs of 300 have a straight ordering"))
}

fn burning_bound() -> Check {
    let mut exact_max = 0;
    for seed in 0..200 {
        let (_, g, d) = corpus::structured_small(seed, 16);
        let bound = ceil_sqrt(g.order());
        let (b, _) = exact_burning_number(&g, bound + 2).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(b <= bound, || format!("seed {seed}: b = {b} > {bound}"))?;
        exact_max = exact_max.max(b);
        let (c, _) = build_spanning_caterpillar(&g, &d).map_err(|e| format!("seed {seed}: {e}"))?;
        let s = schedule_from_caterpillar(&g, &c).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(is_burning_schedule(&g, &s) && s.len() <= bound, || {
            format!("seed {seed}: schedule of length {} against {bound}", s.len())
        })?;
    }
    Ok(format!("200/200 instances with n <= 16 within the bound (largest b = {exact_max})"))
}

fn burning_calibration() -> Check {
    for m in 1..=25 {
        let (b, _) = exact_burning_number(&path_graph(m).unwrap(), 8).map_err(|e| e.to_string())?;
        ensure(b == ceil_sqrt(m), || format!("b(P_{m}) = {b}"))?;
    }
    let k2 = BipartiteGraph::new(1, 1, &[(1, 1)]).unwrap();
    let (b, _) = exact_burning_number(&k2, 4).map_err(|e| e.to_string())?;
    ensure(b == 2, || format!("b(K2) = {b}"))?;
    let (b, _) = exact_burning_number(&fig1_graph(), 4).map_err(|e| e.to_string())?;
    ensure(b == 3, || format!("b(figure-one graph) = {b}"))?;
    Ok("b(P_m) = ⌈√m⌉ for m = 1..25, b(K2) = 2, b(figure-one graph) = 3".into())
}

fn determinism() -> Check {
    let bin = env!("CARGO_BIN_EXE_biconvex");
    let dir = std::env::temp_dir().join(format!("biconvex-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let run = |args: &[&str]| -> Result<Vec<u8>, String> {
        let out = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("{args:?} exited with {:?}", out.status.code()))?;
        Ok(out.stdout)
    };
    let graph = run(&["gen", "--kind", "staircase", "--n-a", "7", "--n-b", "9", "--seed", "5"])?;
    let input = dir.join("g.json");
    std::fs::write(&input, &graph).map_err(|e| e.to_string())?;
    let input = input.to_str().unwrap();
    let invocations: Vec<Vec<&str>> = vec![
        vec!["gen", "--kind", "staircase", "--n-a", "7", "--n-b", "9", "--seed", "5"],
        vec!["gen", "--kind", "chain", "--n-a", "12", "--n-b", "3", "--seed", "8"],
        vec!["gen", "--kind", "random_bipartite", "--n-a", "5", "--n-b", "6", "--density", "0.5", "--seed", "1"],
        vec!["check", "--fuzz", "50", "--seed", "11"],
        vec!["caterpillar", "--input", input],
        vec!["burn", "--input", input],
        vec!["spath", "--from", "b1", "--to", "b9", "--input", input],
    ];
    for args in &invocations {
        let first = run(args)?;
        let second = run(args)?;
        ensure(first == second, || format!("{args:?} differs between runs"))?;
        serde_json::from_slice::<serde_json::Value>(&first).map_err(|e| format!("{args:?}: {e}"))?;
    }
    std::fs::remove_dir_all(&dir).ok();
    Ok(format!("{n}/{n} seeded invocations byte-identical", n = invocations.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1", "figure-one graph", Duration::from_secs(1), figure_one),
        ("AC2", "trees on at most six vertices", Duration::from_secs(5), small_trees),
        ("AC3", "caterpillar soundness sweep", Duration::from_secs(30), soundness_sweep),
        ("AC4", "oracle agreement", Duration::from_secs(120), oracle_agreement),
        ("AC5", "shortest straight paths", Duration::from_secs(60), straight_paths),
        ("AC6", "straight orderings exist", Duration::from_secs(120), straight_orderings),
        ("AC7", "burning bound", Duration::from_secs(300), burning_bound),
        ("AC8", "burning calibration", Duration::from_secs(60), burning_calibration),
        ("AC9", "CLI determinism", Duration::from_secs(60), determinism),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (verdict, detail) = match result {
            Ok(detail) if elapsed <= limit => ("PASS", detail),
            Ok(detail) => ("FAIL", format!("{detail}, but took {elapsed:.2?} (limit {limit:?})")),
            Err(reason) => ("FAIL", reason),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("[{verdict}] {id} {name}: {detail} ({elapsed:.2?})");
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
