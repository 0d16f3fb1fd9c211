//! Serialization for the three graph flavors.
//!
//! Two formats:
//!  - JSON: one document {"n", "colored", "directed", "edges": [[u,v,c],..]}
//!    with an optional "manifest_hash" field run artifacts can carry.
//!  - text: header line "n colored directed" (flags as 0/1), then one
//!    edge per line, "u v" or "u v c".
//!
//! Both are byte-deterministic: edges are emitted in the graph's
//! canonical order (sorted for simple graphs, input order for the
//! multigraph flavors, which is part of their identity).

use serde::{Deserialize, Serialize};

use crate::colored::ColoredMultiGraph;
use crate::directed::DirectedColoredMultiGraph;
use crate::graph::Graph;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Doc {
    pub n: usize,
    pub colored: bool,
    pub directed: bool,
    pub edges: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub manifest_hash: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Simple(Graph),
    Colored(ColoredMultiGraph),
    Directed(DirectedColoredMultiGraph),
}

impl AnyGraph {
    pub fn n(&self) -> usize {
        match self {
            AnyGraph::Simple(g) => g.n(),
            AnyGraph::Colored(g) => g.n(),
            AnyGraph::Directed(g) => g.n(),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("bad header: {0}")]
    Header(String),
    #[error("edge {index}: {problem}")]
    Edge { index: usize, problem: String },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

fn doc_of(g: &AnyGraph) -> Doc {
    match g {
        AnyGraph::Simple(g) => Doc {
            n: g.n(),
            colored: false,
            directed: false,
            edges: g.edges().iter().map(|&(u, v)| vec![u, v]).collect(),
            manifest_hash: None,
        },
        AnyGraph::Colored(g) => Doc {
            n: g.n(),
            colored: true,
            directed: false,
            edges: g.edges().iter().map(|&(u, v, c)| vec![u, v, c]).collect(),
            manifest_hash: None,
        },
        AnyGraph::Directed(g) => Doc {
            n: g.n(),
            colored: true,
            directed: true,
            edges: g.arcs().iter().map(|&(u, v, c)| vec![u, v, c]).collect(),
            manifest_hash: None,
        },
    }
}

fn graph_of(doc: &Doc) -> Result<AnyGraph, ParseError> {
    let arity = if doc.colored { 3 } else { 2 };
    for (i, e) in doc.edges.iter().enumerate() {
        if e.len() != arity {
            return Err(ParseError::Edge {
                index: i + 1,
                problem: format!("expected {arity} fields, got {}", e.len()),
            });
        }
    }
    let wrap = |i: usize, err: crate::error::GraphError| ParseError::Edge {
        index: i + 1,
        problem: err.to_string(),
    };
    if doc.directed {
        // Directed graphs are colored in this format; arity checked above.
        let mut arcs = Vec::with_capacity(doc.edges.len());
        for (i, e) in doc.edges.iter().enumerate() {
            let one = DirectedColoredMultiGraph::from_arcs(doc.n, [(e[0], e[1], e[2])])
                .map_err(|err| wrap(i, err))?;
            arcs.push(one.arcs()[0]);
        }
        Ok(AnyGraph::Directed(
            DirectedColoredMultiGraph::from_arcs(doc.n, arcs).expect("validated per-arc"),
        ))
    } else if doc.colored {
        let mut edges = Vec::with_capacity(doc.edges.len());
        for (i, e) in doc.edges.iter().enumerate() {
            let one = ColoredMultiGraph::from_edges(doc.n, [(e[0], e[1], e[2])])
                .map_err(|err| wrap(i, err))?;
            edges.push(one.edges()[0]);
        }
        Ok(AnyGraph::Colored(
            ColoredMultiGraph::from_edges(doc.n, edges).expect("validated per-edge"),
        ))
    } else {
        let mut g = Graph::empty(doc.n);
        let mut edges = Vec::with_capacity(doc.edges.len());
        for (i, e) in doc.edges.iter().enumerate() {
            edges.push((e[0], e[1]));
            g = Graph::from_edges(doc.n, edges.clone()).map_err(|err| wrap(i, err))?;
        }
        Ok(AnyGraph::Simple(g))
    }
}

pub fn to_json(g: &AnyGraph) -> String {
    serde_json::to_string(&doc_of(g)).expect("doc serializes")
}

pub fn from_json(s: &str) -> Result<AnyGraph, ParseError> {
    let doc: Doc = serde_json::from_str(s)?;
    graph_of(&doc)
}

pub fn to_text(g: &AnyGraph) -> String {
    let doc = doc_of(g);
    let mut out = format!("{} {} {}\n", doc.n, doc.colored as u8, doc.directed as u8);
    for e in &doc.edges {
        let line: Vec<String> = e.iter().map(|x| x.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn from_text(s: &str) -> Result<AnyGraph, ParseError> {
    let mut lines = s.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| ParseError::Header("empty input".into()))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 3 {
        return Err(ParseError::Header(format!(
            "expected \"n colored directed\", got {header:?}"
        )));
    }
    let n: usize =
        parts[0].parse().map_err(|_| ParseError::Header(format!("bad n {:?}", parts[0])))?;
    let flag = |s: &str| match s {
        "0" => Ok(false),
        "1" => Ok(true),
        other => Err(ParseError::Header(format!("flag must be 0 or 1, got {other:?}"))),
    };
    let colored = flag(parts[1])?;
    let directed = flag(parts[2])?;
    if directed && !colored {
        return Err(ParseError::Header("directed graphs are stored colored".into()));
    }
    let mut edges = Vec::new();
    for (i, line) in lines.enumerate() {
        let fields: Result<Vec<u32>, _> = line.split_whitespace().map(str::parse).collect();
        let fields = fields.map_err(|_| ParseError::Edge {
            index: i + 1,
            problem: format!("non-numeric field in {line:?}"),
        })?;
        edges.push(fields);
    }
    graph_of(&Doc { n, colored, directed, edges, manifest_hash: None })
}
