//! Line-oriented ASCII graph files.
//!
//! ```text
//! BIP <left> <right>        TRI <n1> <n2> <n3>
//! <l> <r>                   <u> <v>
//! ```
//!
//! Lines starting with `#` are comments. The canonical form has no comments,
//! sorted edges, `u < v` for tripartite edges, and a trailing newline.

use std::fmt::Write as _;

use thiserror::Error;

use super::{BipartiteBuilder, BipartiteGraph, GraphError, TripartiteBuilder, TripartiteGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Graph {
    Bipartite(BipartiteGraph),
    Tripartite(TripartiteGraph),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

fn numbers(line_no: usize, fields: &[&str]) -> Result<Vec<usize>, ParseError> {
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>().map_err(|_| {
                ParseError::new(
                    line_no,
                    format!("expected a non-negative integer, got `{f}`"),
                )
            })
        })
        .collect()
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "missing header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    match fields.first().copied() {
        Some("BIP") => {
            if fields.len() != 3 {
                return Err(ParseError::new(hline, "BIP header needs 2 sizes"));
            }
            let s = numbers(hline, &fields[1..])?;
            let mut b = BipartiteBuilder::new(s[0], s[1]);
            for (no, line) in lines {
                let (l, r) = pair(no, line)?;
                b.add_edge(l, r).map_err(|e| graph_err(no, e))?;
            }
            Ok(Graph::Bipartite(b.build()))
        }
        Some("TRI") => {
            if fields.len() != 4 {
                return Err(ParseError::new(hline, "TRI header needs 3 sizes"));
            }
            let s = numbers(hline, &fields[1..])?;
            let mut b = TripartiteBuilder::new([s[0], s[1], s[2]]);
            for (no, line) in lines {
                let (u, v) = pair(no, line)?;
                b.add_edge(u, v).map_err(|e| graph_err(no, e))?;
            }
            Ok(Graph::Tripartite(b.build()))
        }
        _ => Err(ParseError::new(hline, format!("unknown header `{header}`"))),
    }
}

fn pair(no: usize, line: &str) -> Result<(usize, usize), ParseError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(ParseError::new(
            no,
            format!("expected two vertex ids, got `{line}`"),
        ));
    }
    let v = numbers(no, &fields)?;
    Ok((v[0], v[1]))
}

fn graph_err(no: usize, e: GraphError) -> ParseError {
    match e {
        GraphError::SamePart { u, v } => ParseError::new(no, format!("intra-part edge {u} {v}")),
        GraphError::OutOfRange { vertex, order } => {
            ParseError::new(no, format!("vertex {vertex} out of range (< {order})"))
        }
        e => ParseError::new(no, e.to_string()),
    }
}

pub fn serialize_graph(g: &Graph) -> String {
    match g {
        Graph::Bipartite(h) => h.to_text(),
        Graph::Tripartite(t) => t.to_text(),
    }
}

impl BipartiteGraph {
    pub fn to_text(&self) -> String {
        let mut s = format!("BIP {} {}\n", self.left_size(), self.right_size());
        for (l, r) in self.edges() {
            writeln!(s, "{l} {r}").unwrap();
        }
        s
    }
}

impl TripartiteGraph {
    pub fn to_text(&self) -> String {
        let [a, b, c] = self.part_sizes();
        let mut s = format!("TRI {a} {b} {c}\n");
        for (u, v) in self.edges() {
            writeln!(s, "{u} {v}").unwrap();
        }
        s
    }
}

/// Comma-separated ids, as used in witness and certificate records.
pub fn format_ids(ids: impl IntoIterator<Item = usize>) -> String {
    let mut s = String::new();
    for (i, id) in ids.into_iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        write!(s, "{id}").unwrap();
    }
    s
}

/// Inverse of [`format_ids`]; the empty string is the empty list.
pub fn parse_ids(s: &str) -> Result<Vec<usize>, String> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.parse::<usize>().map_err(|_| format!("bad id `{x}`")))
        .collect()
}
