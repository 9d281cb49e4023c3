//! Graph ingestion: whitespace edge lists and JSON.
//!
//! Both formats use 1-based vertex labels and reject loops and duplicate
//! edges with a diagnostic naming the offending line or entry.
//!
//! Edge-list format: one edge per line as `u v`; an optional leading
//! `n <count>` header declares the vertex count (required to represent
//! isolated vertices); `#` starts a comment line.
//!
//! JSON format: `{"n": <int>, "edges": [[u, v], ..]}`.

use thiserror::Error;

use crate::graph::{Graph, GraphError, GraphJson};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("edge #{index}: {message}")]
    JsonEdge { index: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn edge_error(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::EdgeList {
        line,
        message: message.into(),
    }
}

/// Validates a 1-based label against a known vertex count and converts it to
/// the 0-based API range.
fn check_label(label: usize, n: usize) -> Result<usize, String> {
    if label == 0 {
        Err("vertex labels are 1-based; 0 is not a vertex".to_string())
    } else if label > n {
        Err(format!("vertex {label} exceeds the declared count {n}"))
    } else {
        Ok(label - 1)
    }
}

/// Parses the edge-list text format.
pub fn parse_edge_list(input: &str) -> Result<Graph, ParseError> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
    let mut max_label = 0usize;
    let mut saw_content = false;
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens[0] == "n" {
            if saw_content {
                return Err(edge_error(line, "header `n <count>` must come before any edge"));
            }
            if tokens.len() != 2 {
                return Err(edge_error(line, "header form is `n <count>`"));
            }
            let n: usize = tokens[1]
                .parse()
                .map_err(|_| edge_error(line, format!("bad vertex count {:?}", tokens[1])))?;
            declared_n = Some(n);
            saw_content = true;
            continue;
        }
        saw_content = true;
        if tokens.len() != 2 {
            return Err(edge_error(line, format!("expected `u v`, got {text:?}")));
        }
        let u: usize = tokens[0]
            .parse()
            .map_err(|_| edge_error(line, format!("bad vertex label {:?}", tokens[0])))?;
        let v: usize = tokens[1]
            .parse()
            .map_err(|_| edge_error(line, format!("bad vertex label {:?}", tokens[1])))?;
        if u == 0 || v == 0 {
            return Err(edge_error(line, "vertex labels are 1-based; 0 is not a vertex"));
        }
        if u == v {
            return Err(edge_error(line, format!("loop at vertex {u}")));
        }
        max_label = max_label.max(u).max(v);
        edges.push((u, v, line));
    }
    let n = declared_n.unwrap_or(max_label);
    let mut g = Graph::new(n)?;
    for (u, v, line) in edges {
        let a = check_label(u, n).map_err(|m| edge_error(line, m))?;
        let b = check_label(v, n).map_err(|m| edge_error(line, m))?;
        g.add_edge(a, b).map_err(|e| match e {
            GraphError::DuplicateEdge { .. } => edge_error(line, format!("duplicate edge {u} {v}")),
            other => ParseError::Graph(other),
        })?;
    }
    Ok(g)
}

/// Parses the JSON graph format.
pub fn parse_json_graph(input: &str) -> Result<Graph, ParseError> {
    let raw: GraphJson = serde_json::from_str(input).map_err(|e| ParseError::Json(e.to_string()))?;
    let mut g = Graph::new(raw.n)?;
    for (idx, &[u, v]) in raw.edges.iter().enumerate() {
        let entry = idx + 1;
        let bad = |message: String| ParseError::JsonEdge { index: entry, message };
        let a = check_label(u, raw.n).map_err(bad)?;
        let b = check_label(v, raw.n).map_err(bad)?;
        if a == b {
            return Err(ParseError::JsonEdge {
                index: entry,
                message: format!("loop at vertex {u}"),
            });
        }
        g.add_edge(a, b).map_err(|e| match e {
            GraphError::DuplicateEdge { .. } => ParseError::JsonEdge {
                index: entry,
                message: format!("duplicate edge [{u}, {v}]"),
            },
            other => ParseError::Graph(other),
        })?;
    }
    Ok(g)
}

/// Renders a graph in the JSON ingestion format (1-based labels).
pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph serialization cannot fail")
}
