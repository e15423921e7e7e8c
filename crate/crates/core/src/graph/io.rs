//! Edge-list text format and DOT export.
//!
//! ```text
//! <n> <m>
//! v <id> [label]
//! e <id> <a> <b>
//! ```
//!
//! One `v` line per vertex and one `e` line per edge, in any order after the
//! header as long as an edge's endpoints have already been declared. Labels
//! are single whitespace-free tokens.

use std::fmt::Write as _;

use super::{EdgeId, MultiGraph, VertexId};
use crate::error::{Error, Result};

pub fn write_graph(g: &MultiGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for v in g.vertices() {
        match g.label(v) {
            Some(l) => writeln!(out, "v {} {}", v.0, l),
            None => writeln!(out, "v {}", v.0),
        }
        .expect("write to string");
    }
    for (e, a, b) in g.edges() {
        writeln!(out, "e {} {} {}", e.0, a.0, b.0).expect("write to string");
    }
    out
}

fn parse_id(token: Option<&str>, line: usize, what: &str) -> Result<u32> {
    let token = token.ok_or_else(|| Error::Parse {
        line,
        message: format!("missing {what}"),
    })?;
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("bad {what} {token:?}"),
    })
}

pub fn read_graph(text: &str) -> Result<MultiGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header".into(),
    })?;
    let mut tokens = header.split_whitespace();
    let n = parse_id(tokens.next(), hline, "vertex count")? as usize;
    let m = parse_id(tokens.next(), hline, "edge count")? as usize;
    if tokens.next().is_some() {
        return Err(Error::Parse {
            line: hline,
            message: "header must be `n m`".into(),
        });
    }

    let mut g = MultiGraph::new();
    for (line, text) in lines {
        let mut tokens = text.split_whitespace();
        let wrap = |e: Error| match e {
            Error::Parse { .. } => e,
            other => Error::Parse {
                line,
                message: other.to_string(),
            },
        };
        match tokens.next() {
            Some("v") => {
                let id = parse_id(tokens.next(), line, "vertex id")?;
                let label = tokens.next();
                if tokens.next().is_some() {
                    return Err(Error::Parse {
                        line,
                        message: "labels must not contain whitespace".into(),
                    });
                }
                g.insert_vertex(VertexId(id), label).map_err(wrap)?;
            }
            Some("e") => {
                let id = parse_id(tokens.next(), line, "edge id")?;
                let a = parse_id(tokens.next(), line, "endpoint")?;
                let b = parse_id(tokens.next(), line, "endpoint")?;
                if tokens.next().is_some() {
                    return Err(Error::Parse {
                        line,
                        message: "trailing tokens after edge".into(),
                    });
                }
                g.insert_edge(EdgeId(id), VertexId(a), VertexId(b))
                    .map_err(wrap)?;
            }
            Some(other) => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown record {other:?}"),
                })
            }
            None => unreachable!("blank lines are filtered"),
        }
    }
    if g.vertex_count() != n || g.edge_count() != m {
        return Err(Error::Parse {
            line: hline,
            message: format!(
                "header declares {n} vertices and {m} edges, found {} and {}",
                g.vertex_count(),
                g.edge_count()
            ),
        });
    }
    Ok(g)
}

pub fn write_dot(g: &MultiGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let label = g.display_name(v).replace('"', "\\\"");
        writeln!(out, "  {} [label=\"{}\"];", v.0, label).expect("write to string");
    }
    for (e, a, b) in g.edges() {
        writeln!(out, "  {} -- {} [id=\"e{}\"];", a.0, b.0, e.0).expect("write to string");
    }
    out.push_str("}\n");
    out
}
