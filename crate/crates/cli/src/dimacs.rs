//! The DIMACS edge format: `c` comments, one `p edge N M` header, then
//! `e u v` lines with 1-based vertex ids.

use std::fmt::{self, Write as _};

use blossom::{Edge, Graph, Vertex};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed header `{0}`, expected `p edge N M`")]
    MalformedHeader(String),
    #[error("second header line")]
    DuplicateHeader,
    #[error("`{0}` line before the `p edge` header")]
    MissingHeader(char),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex id {id} outside 1..={max}")]
    VertexOutOfRange { id: usize, max: usize },
    #[error("malformed line `{0}`")]
    MalformedLine(String),
    #[error("header declares {declared} edges, file has {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("header declares {declared} matched edges, file has {found}")]
    SizeMismatch { declared: usize, found: usize },
}

impl ParseErrorKind {
    pub(crate) fn at(self, line: usize) -> ParseError {
        ParseError { line, kind: self }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub vertex_count: usize,
    pub edge_count: usize,
    /// Edges over 0-based ids.
    pub graph: Graph,
}

impl GraphFile {
    pub fn new(vertex_count: usize, graph: Graph) -> Self {
        GraphFile { vertex_count, edge_count: graph.len(), graph }
    }
}

/// Meaningful lines of `text` with their 1-based line numbers and the
/// whitespace-split fields; blank lines and `c` comments are dropped.
pub(crate) fn fields(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let f: Vec<&str> = line.split_whitespace().collect();
        match f.first() {
            None | Some(&"c") => None,
            Some(_) => Some((i + 1, f)),
        }
    })
}

/// A 1-based id from `field`, checked against `max` when given.
pub(crate) fn vertex_id(field: &str, max: Option<usize>, line: usize, raw: &[&str]) -> Result<Vertex, ParseError> {
    let id: usize = field
        .parse()
        .map_err(|_| ParseErrorKind::MalformedLine(raw.join(" ")).at(line))?;
    let limit = max.unwrap_or(usize::MAX);
    if id == 0 || id > limit {
        return Err(ParseErrorKind::VertexOutOfRange { id, max: limit }.at(line));
    }
    Ok(id - 1)
}

/// An edge from two 1-based id fields.
pub(crate) fn edge_fields(a: &str, b: &str, max: Option<usize>, line: usize, raw: &[&str]) -> Result<Edge, ParseError> {
    let u = vertex_id(a, max, line, raw)?;
    let v = vertex_id(b, max, line, raw)?;
    Edge::new(u, v).map_err(|_| ParseErrorKind::SelfLoop(u + 1).at(line))
}

pub fn parse_graph_file(text: &str) -> Result<GraphFile, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph = Graph::new();
    let mut edge_lines = 0;
    let mut last_line = 0;

    for (line, f) in fields(text) {
        last_line = line;
        match f[0] {
            "p" => {
                if header.is_some() {
                    return Err(ParseErrorKind::DuplicateHeader.at(line));
                }
                let malformed = || ParseErrorKind::MalformedHeader(f.join(" ")).at(line);
                let [_, "edge", n, m] = f.as_slice() else {
                    return Err(malformed());
                };
                header = Some((n.parse().map_err(|_| malformed())?, m.parse().map_err(|_| malformed())?));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(ParseErrorKind::MissingHeader('e').at(line));
                };
                let [_, a, b] = f.as_slice() else {
                    return Err(ParseErrorKind::MalformedLine(f.join(" ")).at(line));
                };
                graph.insert(edge_fields(a, b, Some(n), line, &f)?);
                edge_lines += 1;
            }
            _ => return Err(ParseErrorKind::MalformedLine(f.join(" ")).at(line)),
        }
    }

    let Some((vertex_count, edge_count)) = header else {
        return Err(ParseErrorKind::MissingHeader('p').at(last_line.max(1)));
    };
    if edge_lines != edge_count {
        return Err(ParseErrorKind::EdgeCount { declared: edge_count, found: edge_lines }.at(last_line.max(1)));
    }
    Ok(GraphFile { vertex_count, edge_count, graph })
}

impl fmt::Display for GraphFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p edge {} {}", self.vertex_count, self.graph.len())?;
        for e in &self.graph {
            writeln!(f, "e {} {}", e.lo() + 1, e.hi() + 1)?;
        }
        Ok(())
    }
}

pub fn write_graph_file(g: &GraphFile) -> String {
    let mut out = String::new();
    write!(out, "{g}").expect("writing to a string");
    out
}
