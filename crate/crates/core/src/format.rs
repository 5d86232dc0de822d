//! Graph file formats.
//!
//! JSON: `{"n_a": 4, "n_b": 3, "edges": [[1, 1], ...], "order_a": [...], "order_b": [...]}`
//! with both orderings optional (but given together) and unknown keys rejected.
//!
//! Edge list: a header `p bip <n_a> <n_b> <m>` followed by exactly `m` lines
//! `e <a> <b>`. All indices are 1-based. Both writers emit edges sorted.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::ordering::DualOrdering;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Edgelist,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "edgelist" => Ok(Format::Edgelist),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDocument {
    n_a: usize,
    n_b: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    order_a: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    order_b: Option<Vec<usize>>,
}

/// A parsed graph and the ordering stored with it, if any.
pub type Document = (BipartiteGraph, Option<DualOrdering>);

pub fn to_json(g: &BipartiteGraph, d: Option<&DualOrdering>) -> String {
    let doc = GraphDocument {
        n_a: g.n_a(),
        n_b: g.n_b(),
        edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        order_a: d.map(|d| d.order_a().to_vec()),
        order_b: d.map(|d| d.order_b().to_vec()),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn from_json(text: &str) -> Result<Document> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let edges: Vec<(usize, usize)> = doc.edges.iter().map(|&[a, b]| (a, b)).collect();
    let g = BipartiteGraph::new(doc.n_a, doc.n_b, &edges)?;
    let d = match (doc.order_a, doc.order_b) {
        (Some(a), Some(b)) => {
            let d = DualOrdering::new(a, b)?;
            d.check_sizes(&g)?;
            Some(d)
        }
        (None, None) => None,
        _ => return Err(Error::Parse("order_a and order_b must be given together".into())),
    };
    Ok((g, d))
}

pub fn to_edgelist(g: &BipartiteGraph) -> String {
    let mut out = format!("p bip {} {} {}\n", g.n_a(), g.n_b(), g.edge_count());
    for &(a, b) in g.edges() {
        writeln!(out, "e {a} {b}").expect("writing to a string");
    }
    out
}

fn number(token: Option<&str>, line: usize) -> Result<usize> {
    let token = token.ok_or_else(|| Error::Parse(format!("line {line}: missing field")))?;
    token
        .parse()
        .map_err(|_| Error::Parse(format!("line {line}: {token:?} is not a non-negative integer")))
}

pub fn from_edgelist(text: &str) -> Result<BipartiteGraph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let mut fields = header.split_whitespace();
    if fields.next() != Some("p") || fields.next() != Some("bip") {
        return Err(Error::Parse("line 1: expected header `p bip <n_a> <n_b> <m>`".into()));
    }
    let n_a = number(fields.next(), 1)?;
    let n_b = number(fields.next(), 1)?;
    let m = number(fields.next(), 1)?;
    if fields.next().is_some() {
        return Err(Error::Parse("line 1: trailing fields".into()));
    }
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let mut fields = text.split_whitespace();
        if fields.next() != Some("e") {
            return Err(Error::Parse(format!("line {line}: expected `e <a> <b>`")));
        }
        let a = number(fields.next(), line)?;
        let b = number(fields.next(), line)?;
        if fields.next().is_some() {
            return Err(Error::Parse(format!("line {line}: trailing fields")));
        }
        edges.push((a, b));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!("header announces {m} edges, found {}", edges.len())));
    }
    BipartiteGraph::new(n_a, n_b, &edges)
}

/// Reads a graph in either format. Edge lists carry no ordering.
pub fn parse(text: &str, format: Format) -> Result<Document> {
    match format {
        Format::Json => from_json(text),
        Format::Edgelist => Ok((from_edgelist(text)?, None)),
    }
}
