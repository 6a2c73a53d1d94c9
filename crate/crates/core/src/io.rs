//! Text formats.
//!
//! Blow-up graph files (`.pbg`) are self-contained:
//!
//! ```text
//! # optional comment lines
//! blowup <vH> <eH> <n>
//! p <i> <j>            (eH pattern edges, 1 <= i < j <= vH)
//! e <i>.<a> <j>.<b>    (any number of graph edges, all 1-based)
//! ```

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::PartiteGraph;
use crate::host::{BlowupHost, Edge, PartiteVertex};
use crate::pattern::{PatternGraph, MAX_PATTERN_VERTICES};

/// Non-blank, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        (!line.is_empty() && !line.starts_with('#')).then_some((i + 1, line))
    })
}

pub(crate) fn parse_count(field: &str, line: usize) -> Result<usize> {
    field
        .parse::<usize>()
        .map_err(|_| Error::parse(line, format!("`{field}` is not a non-negative integer")))
}

fn parse_vertex(field: &str, line: usize, parts: usize, n: usize) -> Result<PartiteVertex> {
    let (p, i) = field
        .split_once('.')
        .ok_or_else(|| Error::parse(line, format!("`{field}` is not of the form <part>.<index>")))?;
    let part = parse_count(p, line)?;
    let index = parse_count(i, line)?;
    if !(1..=parts).contains(&part) || !(1..=n).contains(&index) {
        return Err(Error::parse(
            line,
            format!("vertex {field} out of range (parts 1..={parts}, indices 1..={n})"),
        ));
    }
    Ok(PartiteVertex::new(part - 1, index - 1))
}

pub fn parse_pbg(text: &str) -> Result<PartiteGraph> {
    let mut lines = content_lines(text).peekable();
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `blowup <vH> <eH> <n>` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 || fields[0] != "blowup" {
        return Err(Error::parse(header_line, "expected `blowup <vH> <eH> <n>`"));
    }
    let v = parse_count(fields[1], header_line)?;
    let e = parse_count(fields[2], header_line)?;
    let n = parse_count(fields[3], header_line)?;
    if v == 0 || v > MAX_PATTERN_VERTICES {
        return Err(Error::parse(
            header_line,
            format!("pattern vertex count must be in 1..={MAX_PATTERN_VERTICES}"),
        ));
    }
    if n == 0 {
        return Err(Error::parse(header_line, "part size must be at least 1"));
    }

    let mut pattern_edges = Vec::with_capacity(e);
    let mut seen = HashSet::new();
    while pattern_edges.len() < e {
        let Some((line, content)) = lines.next() else {
            return Err(Error::parse(
                header_line,
                format!(
                    "header declares {e} pattern edges but {} were given",
                    pattern_edges.len()
                ),
            ));
        };
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 3 || fields[0] != "p" {
            return Err(Error::parse(line, "expected pattern edge `p <i> <j>`"));
        }
        let i = parse_count(fields[1], line)?;
        let j = parse_count(fields[2], line)?;
        if !(1 <= i && i < j && j <= v) {
            return Err(Error::parse(
                line,
                format!("pattern edge must satisfy 1 <= i < j <= {v}"),
            ));
        }
        if !seen.insert((i, j)) {
            return Err(Error::parse(line, format!("duplicate pattern edge {i} {j}")));
        }
        pattern_edges.push((i - 1, j - 1));
    }
    let pattern = PatternGraph::new(v, pattern_edges)?;
    let host = BlowupHost::new(pattern, n)?;
    let mut g = PartiteGraph::empty(host);

    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.first() == Some(&"p") {
            return Err(Error::parse(
                line,
                format!("more pattern edges than the {e} declared in the header"),
            ));
        }
        if fields.len() != 3 || fields[0] != "e" {
            return Err(Error::parse(line, "expected graph edge `e <i>.<a> <j>.<b>`"));
        }
        let a = parse_vertex(fields[1], line, v, n)?;
        let b = parse_vertex(fields[2], line, v, n)?;
        if !g.host().allows(a, b) {
            return Err(Error::parse(
                line,
                format!("{} {} is not an edge of the blow-up host", fields[1], fields[2]),
            ));
        }
        if !g.add_edge(a, b).map_err(|err| Error::parse(line, err.to_string()))? {
            return Err(Error::parse(
                line,
                format!("duplicate edge {} {}", fields[1], fields[2]),
            ));
        }
    }
    Ok(g)
}

/// Serialises `g`; `comments` become leading `# ` lines.
pub fn write_pbg(g: &PartiteGraph, comments: &[String]) -> String {
    let pattern = g.pattern();
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!(
        "blowup {} {} {}\n",
        pattern.vertex_count(),
        pattern.edge_count(),
        g.n()
    ));
    for &(i, j) in pattern.edges() {
        out.push_str(&format!("p {} {}\n", i + 1, j + 1));
    }
    for Edge { u, v } in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}
