//! Line-oriented graph files.
//!
//! ```text
//! c optional comment
//! p <v> <e>
//! e <u> <w>
//! ```
//!
//! Vertex ids in the file are `1..=v`. Generators attach their expected
//! optimum as a `c expected-optimum <p>/<q>` comment.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Mode, VertexId};
use crate::packing::Ratio;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: vertex {id} out of range 1..={max}")]
    OutOfRange { line: usize, id: u64, max: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("missing 'p <v> <e>' header")]
    MissingHeader,
    #[error("header declares {expected} edges but {found} were listed")]
    EdgeCount { expected: usize, found: usize },
}

const EXPECTED_OPTIMUM: &str = "expected-optimum";

pub fn parse_graph(text: &str, mode: Mode) -> Result<Graph, ParseError> {
    let mut graph: Option<Graph> = None;
    let mut declared_edges = 0;
    let mut n = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim_end_matches('\r');
        if trimmed.trim().is_empty() || trimmed == "c" || trimmed.starts_with("c ") {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_ascii_whitespace().collect();
        let malformed = |msg: &str| ParseError::Malformed {
            line,
            msg: msg.to_string(),
        };
        match fields[0] {
            "p" => {
                if graph.is_some() {
                    return Err(malformed("duplicate header"));
                }
                if fields.len() != 3 {
                    return Err(malformed("expected 'p <v> <e>'"));
                }
                n = fields[1].parse().map_err(|_| malformed("bad vertex count"))?;
                declared_edges = fields[2].parse().map_err(|_| malformed("bad edge count"))?;
                graph = Some(Graph::with_vertices(mode, n));
            }
            "e" => {
                let g = graph.as_mut().ok_or(ParseError::MissingHeader)?;
                if fields.len() != 3 {
                    return Err(malformed("expected 'e <u> <w>'"));
                }
                let mut ends = [VertexId(0); 2];
                for (slot, field) in ends.iter_mut().zip(&fields[1..]) {
                    let id: u64 = field.parse().map_err(|_| malformed("bad vertex id"))?;
                    if id == 0 || id > n as u64 {
                        return Err(ParseError::OutOfRange { line, id, max: n });
                    }
                    *slot = VertexId(id as u32);
                }
                g.add_edge(ends[0], ends[1])
                    .map_err(|source| ParseError::Graph { line, source })?;
            }
            _ => return Err(malformed("unknown line type")),
        }
    }
    let g = graph.ok_or(ParseError::MissingHeader)?;
    if g.edge_count() != declared_edges {
        return Err(ParseError::EdgeCount {
            expected: declared_edges,
            found: g.edge_count(),
        });
    }
    Ok(g)
}

/// Reads the `c expected-optimum p/q` comment, if present.
pub fn expected_optimum(text: &str) -> Option<Ratio> {
    text.lines().find_map(|l| {
        let rest = l.strip_prefix("c ")?.trim().strip_prefix(EXPECTED_OPTIMUM)?;
        let (p, q) = rest.trim().split_once('/')?;
        Some(Ratio::new(p.parse().ok()?, q.parse().ok()?))
    })
}

pub fn expected_optimum_comment(value: Ratio) -> String {
    format!("{EXPECTED_OPTIMUM} {}/{}", value.num(), value.den())
}

/// Writes `g` in graph-file form. Vertices are renumbered `1..=v` in
/// ascending id order; the returned map sends original ids to file ids.
pub fn write_graph_with_map(g: &Graph, comments: &[String]) -> (String, BTreeMap<VertexId, u32>) {
    let map: BTreeMap<VertexId, u32> = g
        .vertices()
        .enumerate()
        .map(|(i, v)| (v, i as u32 + 1))
        .collect();
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "c {c}");
    }
    let _ = writeln!(out, "p {} {}", g.vertex_count(), g.edge_count());
    for (u, w) in g.edges() {
        let _ = writeln!(out, "e {} {}", map[&u], map[&w]);
    }
    (out, map)
}

pub fn write_graph(g: &Graph, comments: &[String]) -> String {
    write_graph_with_map(g, comments).0
}
