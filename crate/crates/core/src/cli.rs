//! The `biconvex` command line.
//!
//! Every verb writes one document to standard output (JSON by default,
//! `--text` for a human-readable summary) and diagnostics to standard error.
//! Exit codes: 0 success, 1 the property checked does not hold, 2 usage or
//! input error, 3 internal proof violation.

use std::io::Read as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::burning::{ceil_sqrt, check_conjecture, exact_burning_number};
use crate::caterpillar::{build_spanning_caterpillar, verify_spanning_caterpillar};
use crate::error::Error;
use crate::format::{self, Format};
use crate::generators::{corpus, fig1_graph, gen_chain, gen_random_bipartite, gen_staircase, Stream};
use crate::graph::{BipartiteGraph, VertexId};
use crate::oracle::{self, OracleBudget};
use crate::ordering::{find_biconvex_ordering, find_biconvex_s_ordering, DualOrdering, DEFAULT_BUDGET};
use crate::spath::{path_text, shortest_s_path};

#[derive(Debug, Parser)]
#[command(name = "biconvex", version, about = "Biconvex bipartite graphs: orderings, straight paths, spanning caterpillars, burning")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Graph file, or `-` for standard input.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Emit a human-readable summary instead of JSON.
    #[arg(long, global = true)]
    pub text: bool,
    /// Permutation budget for ordering searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum KindArg {
    Staircase,
    Chain,
    RandomBipartite,
    Fig1,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Generate an instance.
    Gen {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 1)]
        n_a: usize,
        #[arg(long, default_value_t = 1)]
        n_b: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Search for a biconvex ordering.
    Recognize {
        /// Also run the full ordering scan (both parts of size at most 6).
        #[arg(long)]
        exhaustive: bool,
    },
    /// Search for a biconvex straight ordering.
    Sorder {
        #[arg(long)]
        exhaustive: bool,
    },
    /// Shortest straight path between two vertices.
    Spath {
        #[arg(long)]
        from: VertexId,
        #[arg(long)]
        to: VertexId,
    },
    /// Build and verify a spanning caterpillar.
    Caterpillar,
    /// Burning number or caterpillar-derived burning schedule.
    Burn {
        #[arg(long, conflicts_with = "schedule")]
        exact: bool,
        #[arg(long)]
        schedule: bool,
        /// Largest schedule length the exact search tries; default `⌈√n⌉ + 2`.
        #[arg(long)]
        k_max: Option<usize>,
    },
    /// Check `b(G) <= ⌈√n⌉` on one instance or on a seeded corpus.
    Check {
        #[arg(long)]
        fuzz: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Brute-force checks for tiny graphs.
    #[command(subcommand)]
    Oracle(OracleVerb),
}

#[derive(Debug, Subcommand)]
pub enum OracleVerb {
    /// Scan all spanning trees for a caterpillar.
    Caterpillar,
    /// Scan all ordering pairs for a biconvex one.
    Biconvex {
        #[arg(long)]
        straight: bool,
    },
    /// Enumerate trees and count caterpillars.
    Trees {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        unlabeled: bool,
    },
}

/// What a finished invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A verb's result: exit code, JSON document, text rendering.
struct Report {
    code: i32,
    doc: Value,
    text: String,
    /// Printed verbatim in both modes (generated graphs).
    raw: Option<String>,
}

impl Report {
    fn ok(doc: Value, text: String) -> Self {
        Report {
            code: 0,
            doc,
            text,
            raw: None,
        }
    }

    fn holds(holds: bool, doc: Value, text: String) -> Self {
        Report {
            code: if holds { 0 } else { 1 },
            doc,
            text,
            raw: None,
        }
    }
}

/// Failure of a verb, with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ProvablyNone
            | Error::NotConnected
            | Error::OrderingNotBiconvex
            | Error::OrderingNotStraight
            | Error::NoStraightShortestPath { .. }
            | Error::ExceedsKMax { .. }
            | Error::FallbackExhausted { .. } => 1,
            Error::InternalProofViolation(_) => 3,
            _ => 2,
        };
        let message = match e {
            Error::ProvablyNone | Error::OrderingNotBiconvex => format!("not biconvex: {e}"),
            _ => e.to_string(),
        };
        Failure { code, message }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// Parses `args` (program name first) and runs the chosen verb.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(report) => Outcome {
            code: report.code,
            stdout: match report.raw {
                Some(raw) => raw + "\n",
                None if cli.common.text => report.text + "\n",
                None => report.doc.to_string() + "\n",
            },
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn dispatch(cli: &Cli) -> Result<Report, Failure> {
    let c = &cli.common;
    match &cli.verb {
        Verb::Gen {
            kind,
            n_a,
            n_b,
            density,
            seed,
        } => generate(c, *kind, *n_a, *n_b, *density, *seed),
        Verb::Recognize { exhaustive } => recognize(c, false, *exhaustive),
        Verb::Sorder { exhaustive } => recognize(c, true, *exhaustive),
        Verb::Spath { from, to } => spath(c, *from, *to),
        Verb::Caterpillar => caterpillar(c),
        Verb::Burn { exact, k_max, .. } => burn(c, *exact, *k_max),
        Verb::Check { fuzz, seed } => check(c, *fuzz, *seed),
        Verb::Oracle(o) => run_oracle(c, o),
    }
}

fn load(c: &Common) -> Result<(BipartiteGraph, Option<DualOrdering>), Failure> {
    let path = c.input.as_ref().ok_or_else(|| usage("--input is required"))?;
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("reading standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("reading {}: {e}", path.display())))?
    };
    let fmt = match c.format {
        FormatArg::Json => Format::Json,
        FormatArg::Edgelist => Format::Edgelist,
    };
    Ok(format::parse(&text, fmt)?)
}

/// The ordering stored with the graph if it is straight, else a search.
fn straight_ordering(c: &Common, g: &BipartiteGraph, stored: Option<DualOrdering>) -> Result<DualOrdering, Failure> {
    if let Some(d) = stored {
        let d = d.verify(g)?;
        if d.verified_straight() {
            return Ok(d);
        }
    }
    Ok(find_biconvex_s_ordering(g, c.budget)?)
}

fn names(vs: &[VertexId]) -> Vec<String> {
    vs.iter().map(VertexId::to_string).collect()
}

fn generate(
    c: &Common,
    kind: KindArg,
    n_a: usize,
    n_b: usize,
    density: f64,
    seed: Option<u64>,
) -> Result<Report, Failure> {
    let need_seed = || seed.ok_or_else(|| usage("--seed is required for this kind"));
    let (g, d) = match kind {
        KindArg::Staircase => {
            let (g, d) = gen_staircase(n_a, n_b, need_seed()?)?;
            (g, Some(d))
        }
        KindArg::Chain => {
            let (g, d) = gen_chain(n_a, n_b, need_seed()?)?;
            (g, Some(d))
        }
        KindArg::RandomBipartite => (gen_random_bipartite(n_a, n_b, density, need_seed()?)?, None),
        KindArg::Fig1 => (fig1_graph(), None),
    };
    let raw = match c.format {
        FormatArg::Json => format::to_json(&g, d.as_ref()),
        FormatArg::Edgelist => format::to_edgelist(&g).trim_end().to_string(),
    };
    Ok(Report {
        code: 0,
        doc: Value::Null,
        text: raw.clone(),
        raw: Some(raw),
    })
}

fn recognize(c: &Common, straight: bool, exhaustive: bool) -> Result<Report, Failure> {
    let (g, _) = load(c)?;
    let found = if straight {
        find_biconvex_s_ordering(&g, c.budget)
    } else {
        find_biconvex_ordering(&g, c.budget)
    };
    let key = if straight { "straight" } else { "biconvex" };
    let (holds, mut doc, text) = match found {
        Ok(d) => (
            true,
            json!({ key: true, "order_a": d.order_a(), "order_b": d.order_b() }),
            format!("{key}: yes\norder_a: {:?}\norder_b: {:?}", d.order_a(), d.order_b()),
        ),
        Err(Error::ProvablyNone) => (false, json!({ key: false }), format!("{key}: no")),
        Err(e) => return Err(e.into()),
    };
    if exhaustive {
        let scan = oracle::scan_orderings(&g, straight, &OracleBudget::default())?;
        let agrees = scan.ordering.is_some() == holds;
        doc["oracle_agrees"] = json!(agrees);
        doc["pairs_examined"] = json!(scan.pairs_examined);
        if !agrees {
            return Err(Failure {
                code: 3,
                message: format!("search and full scan disagree ({key}: {holds})"),
            });
        }
    }
    Ok(Report::holds(holds, doc, text))
}

fn spath(c: &Common, from: VertexId, to: VertexId) -> Result<Report, Failure> {
    let (g, stored) = load(c)?;
    let d = straight_ordering(c, &g, stored)?;
    let p = shortest_s_path(&g, &d, from, to)?;
    let doc = json!({ "path": names(&p.vertices), "length": p.len() });
    Ok(Report::ok(doc, p.to_text()))
}

fn caterpillar(c: &Common) -> Result<Report, Failure> {
    let (g, stored) = load(c)?;
    let d = straight_ordering(c, &g, stored)?;
    let (cat, trace) = build_spanning_caterpillar(&g, &d)?;
    let verdict = verify_spanning_caterpillar(&g, &cat);
    let legs: serde_json::Map<String, Value> = cat
        .legs
        .iter()
        .map(|(leg, at)| (leg.to_string(), json!(at.to_string())))
        .collect();
    let doc = json!({
        "spine": names(&cat.spine),
        "legs": legs,
        "case": trace.case,
        "witnesses": trace.witnesses,
        "verified": verdict.is_valid(),
    });
    let mut text = format!("case: {}\nspine: {}\n", trace.case, path_text(&cat.spine));
    for (leg, at) in &cat.legs {
        text.push_str(&format!("leg: {leg} -> {at}\n"));
    }
    text.push_str(&format!("verifier: {verdict}"));
    Ok(Report::ok(doc, text))
}

fn burn(c: &Common, exact: bool, k_max: Option<usize>) -> Result<Report, Failure> {
    let (g, stored) = load(c)?;
    let n = g.order();
    let bound = ceil_sqrt(n);
    if exact {
        let (b, s) = exact_burning_number(&g, k_max.unwrap_or(bound + 2))?;
        let doc = json!({ "n": n, "bound": bound, "exact_b": b, "schedule": s });
        let text = format!("n: {n}\nbound: {bound}\nexact_b: {b}\nschedule: {}", path_text(&s.sources));
        return Ok(Report::ok(doc, text));
    }
    let d = straight_ordering(c, &g, stored)?;
    let r = check_conjecture(&g, &d)?;
    let text = format!(
        "n: {}\nbound: {}\nschedule: {}\nlen: {}\nexact_b: {}\npass: {}",
        r.n,
        r.bound,
        path_text(&r.schedule.sources),
        r.len,
        r.exact_b.map_or("-".to_string(), |b| b.to_string()),
        r.pass
    );
    Ok(Report::holds(r.pass, json!(r), text))
}

fn check(c: &Common, fuzz: Option<usize>, seed: Option<u64>) -> Result<Report, Failure> {
    let Some(count) = fuzz else {
        if seed.is_some() {
            return Err(usage("--seed only applies together with --fuzz"));
        }
        return burn(c, false, None);
    };
    let seed = seed.ok_or_else(|| usage("--fuzz needs an explicit --seed"))?;
    let mut stream = Stream::new(seed);
    let seeds: Vec<u64> = (0..count).map(|_| stream.next_u64()).collect();
    let results = run_parallel(&seeds, fuzz_one);
    let failures: Vec<Value> = seeds
        .iter()
        .zip(&results)
        .filter(|(_, r)| r.is_err())
        .map(|(s, r)| json!({ "seed": s, "reason": r.as_ref().err() }))
        .collect();
    let passed = count - failures.len();
    let doc = json!({
        "instances": count,
        "passed": passed,
        "seed": seed,
        "failures": failures,
    });
    let text = format!("{passed}/{count} pass");
    Ok(Report::holds(failures.is_empty(), doc, text))
}

/// One fuzz instance: a structured graph with both parts up to 12.
fn fuzz_one(&seed: &u64) -> Result<(), String> {
    let (kind, g, d) = corpus::structured(seed, 12);
    let r = check_conjecture(&g, &d).map_err(|e| format!("{kind:?}: {e}"))?;
    if r.pass {
        Ok(())
    } else {
        Err(format!("{kind:?}: schedule length {} / exact {:?} above {}", r.len, r.exact_b, r.bound))
    }
}

/// Maps `f` over `items` on scoped threads, keeping input order.
fn run_parallel<T: Sync, R: Send>(items: &[T], f: fn(&T) -> R) -> Vec<R> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(items.len().max(1));
    let chunk = items.len().div_ceil(workers).max(1);
    std::thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| s.spawn(move || part.iter().map(f).collect::<Vec<R>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

fn run_oracle(c: &Common, verb: &OracleVerb) -> Result<Report, Failure> {
    let budget = OracleBudget::default();
    match verb {
        OracleVerb::Caterpillar => {
            let (g, _) = load(c)?;
            let scan = oracle::scan_spanning_trees(&g, &budget)?;
            let found = scan.caterpillar.is_some();
            let doc = json!({ "has_spanning_caterpillar": found, "trees_examined": scan.trees_examined });
            let text = format!(
                "spanning caterpillar: {}\ntrees examined: {}",
                if found { "yes" } else { "no" },
                scan.trees_examined
            );
            Ok(Report::holds(found, doc, text))
        }
        OracleVerb::Biconvex { straight } => {
            let (g, _) = load(c)?;
            let scan = oracle::scan_orderings(&g, *straight, &budget)?;
            let key = if *straight { "straight" } else { "biconvex" };
            let mut doc = json!({ key: scan.ordering.is_some(), "pairs_examined": scan.pairs_examined });
            if let Some(d) = &scan.ordering {
                doc["order_a"] = json!(d.order_a());
                doc["order_b"] = json!(d.order_b());
            }
            let text = format!(
                "{key}: {}\npairs examined: {}",
                if scan.ordering.is_some() { "yes" } else { "no" },
                scan.pairs_examined
            );
            Ok(Report::holds(scan.ordering.is_some(), doc, text))
        }
        OracleVerb::Trees { n, unlabeled } => {
            if *n == 0 || *n > 8 {
                return Err(usage("--n must lie in 1..=8"));
            }
            let trees = if *unlabeled {
                oracle::enumerate_unlabeled_trees(*n)
            } else {
                oracle::enumerate_trees(*n)
            };
            let caterpillars = trees
                .iter()
                .filter(|t| crate::caterpillar::is_caterpillar(*n, t).unwrap_or(false))
                .count();
            let doc = json!({
                "n": n,
                "trees": trees.len(),
                "caterpillars": caterpillars,
                "non_caterpillars": trees.len() - caterpillars,
            });
            let text = format!("{} trees, {caterpillars} caterpillars", trees.len());
            Ok(Report::ok(doc, text))
        }
    }
}
