//! Line-oriented text format.
//!
//! ```text
//! # comment
//! graph <n> <m>      |  ecg <n> <m>
//! u v                |  u v c
//! ```
//! Vertices are 0-indexed, `u < v`, and each pair appears at most once.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{ColorId, EdgeColoredGraph, Graph};
use crate::bitset::MAX_VERTICES;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyGraph {
    Plain(Graph),
    Colored(EdgeColoredGraph),
}

impl AnyGraph {
    /// Uncoloured input is read as its rainbow colouring `ℛ(G)`.
    pub fn into_colored(self) -> EdgeColoredGraph {
        match self {
            AnyGraph::Plain(g) => EdgeColoredGraph::rainbow(&g),
            AnyGraph::Colored(g) => g,
        }
    }

    pub fn into_plain(self) -> Graph {
        match self {
            AnyGraph::Plain(g) => g,
            AnyGraph::Colored(g) => g.graph().clone(),
        }
    }
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| err(line, format!("{what} is not a nonnegative integer: {tok:?}")))
}

pub fn parse(text: &str) -> Result<AnyGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hl, header) = lines.next().ok_or_else(|| err(1, "empty input, expected a header"))?;
    let mut toks = header.split_whitespace();
    let colored = match toks.next() {
        Some("graph") => false,
        Some("ecg") => true,
        Some(other) => return Err(err(hl, format!("unknown header {other:?}, expected graph or ecg"))),
        None => unreachable!(),
    };
    let n = number(toks.next(), hl, "vertex count")?;
    let m = number(toks.next(), hl, "edge count")?;
    if toks.next().is_some() {
        return Err(err(hl, "trailing tokens in header"));
    }
    if n > MAX_VERTICES {
        return Err(err(hl, format!("vertex count {n} exceeds {MAX_VERTICES}")));
    }
    if m > n * n.saturating_sub(1) / 2 {
        return Err(err(hl, format!("{m} edges impossible on {n} vertices")));
    }

    let mut g = EdgeColoredGraph::empty(n);
    let mut last_line = hl;
    for i in 0..m {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| err(last_line + 1, format!("expected {m} edge lines, found {i}")))?;
        last_line = ln;
        let mut toks = line.split_whitespace();
        let u = number(toks.next(), ln, "endpoint")?;
        let v = number(toks.next(), ln, "endpoint")?;
        let c = if colored {
            number(toks.next(), ln, "color")?
        } else {
            0
        };
        if toks.next().is_some() {
            return Err(err(ln, "trailing tokens on edge line"));
        }
        if u >= n || v >= n {
            return Err(err(ln, format!("vertex out of range 0..{n}")));
        }
        if u >= v {
            return Err(err(ln, format!("expected u < v, got {u} {v}")));
        }
        if g.has_edge(u, v) {
            return Err(err(ln, format!("duplicate edge {u} {v}")));
        }
        if c >= u32::MAX as usize {
            return Err(err(ln, format!("color {c} too large")));
        }
        g.set_edge(u, v, ColorId(c as u32));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(err(ln, format!("unexpected line after {m} edges")));
    }
    Ok(if colored {
        AnyGraph::Colored(g)
    } else {
        AnyGraph::Plain(g.graph().clone())
    })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    match parse(text)? {
        AnyGraph::Plain(g) => Ok(g),
        AnyGraph::Colored(_) => Err(Error::Input("expected an uncolored graph".into())),
    }
}

pub fn parse_colored(text: &str) -> Result<EdgeColoredGraph> {
    match parse(text)? {
        AnyGraph::Colored(g) => Ok(g),
        AnyGraph::Plain(_) => Err(Error::Input("expected an edge-colored graph".into())),
    }
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("graph {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Emits normalized colours.
pub fn serialize_colored(g: &EdgeColoredGraph) -> String {
    let g = g.normalized();
    let mut out = format!("ecg {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v, c) in g.edges() {
        let _ = writeln!(out, "{u} {v} {c}");
    }
    out
}

pub fn serialize(g: &AnyGraph) -> String {
    match g {
        AnyGraph::Plain(g) => serialize_graph(g),
        AnyGraph::Colored(g) => serialize_colored(g),
    }
}

pub fn read_file(path: &Path) -> Result<AnyGraph> {
    parse(&std::fs::read_to_string(path)?)
}

pub fn write_file(path: &Path, g: &AnyGraph) -> Result<()> {
    std::fs::write(path, serialize(g))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lambda2() {
        let g = parse_colored("ecg 3 3\n0 1 0\n0 2 0\n1 2 1\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.color(0, 1), g.color(0, 2));
        assert_ne!(g.color(0, 1), g.color(1, 2));
    }

    #[test]
    fn round_trip() {
        let t = "ecg 4 3\n0 1 0\n1 2 1\n2 3 0\n";
        assert_eq!(serialize_colored(&parse_colored(t).unwrap()), t);
        let t = "graph 2 1\n0 1\n";
        assert_eq!(parse_graph(t).unwrap(), Graph::complete(2));
        assert_eq!(serialize_graph(&parse_graph(t).unwrap()), t);
    }

    #[test]
    fn comments_and_normalization() {
        let g = parse_colored("# lambda\necg 3 3\n0 1 5 # red\n0 2 5\n\n1 2 9\n").unwrap();
        assert_eq!(serialize_colored(&g), "ecg 3 3\n0 1 0\n0 2 0\n1 2 1\n");
    }

    fn line_of(t: &str) -> usize {
        match parse(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_name_the_line() {
        assert_eq!(line_of("grph 2 1\n0 1\n"), 1);
        assert_eq!(line_of("graph 2 1\n0 2\n"), 2);
        assert_eq!(line_of("graph 3 2\n0 1\n0 1\n"), 3);
        assert_eq!(line_of("ecg 3 2\n0 1 0\n# x\n1 2\n"), 4);
        assert_eq!(line_of("graph 3 2\n0 1\n"), 3);
        assert_eq!(line_of("graph 3 1\n0 1\n1 2\n"), 3);
        assert_eq!(line_of("graph 3 1\n1 0\n"), 2);
        assert_eq!(line_of(""), 1);
    }
}
