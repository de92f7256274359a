//! Text formats: a plain edge list (`n m` header, then `u v` per line,
//! 0-based) and DIMACS `.col` (`p edge n m`, `e u v`, 1-based).

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

pub fn parse(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

pub fn write(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => to_edge_list(g),
        Format::Dimacs => to_dimacs(g),
    }
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

fn numbers(line: usize, fields: &[&str]) -> Result<Vec<usize>> {
    fields
        .iter()
        .map(|f| {
            f.parse()
                .map_err(|_| parse_err(line, format!("not a vertex index: `{f}`")))
        })
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_err(hline, "header must be `n m`"));
    }
    let head = numbers(hline, &fields)?;
    let (n, m) = (head[0], head[1]);
    let mut edges = Vec::with_capacity(m);
    for (lineno, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(lineno, "edge line must be `u v`"));
        }
        let uv = numbers(lineno, &fields)?;
        edges.push((uv[0], uv[1]));
    }
    if edges.len() != m {
        return Err(parse_err(
            hline,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges)
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, l) in text.lines().enumerate() {
        let lineno = i + 1;
        let fields: Vec<&str> = l.split_whitespace().collect();
        match fields.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if fields.len() != 4 || !matches!(fields[1], "edge" | "col") {
                    return Err(parse_err(lineno, "problem line must be `p edge n m`"));
                }
                if n.is_some() {
                    return Err(parse_err(lineno, "duplicate problem line"));
                }
                n = Some(numbers(lineno, &fields[2..3])?[0]);
            }
            Some("e") => {
                if n.is_none() {
                    return Err(parse_err(lineno, "edge before problem line"));
                }
                if fields.len() != 3 {
                    return Err(parse_err(lineno, "edge line must be `e u v`"));
                }
                let uv = numbers(lineno, &fields[1..])?;
                if uv.contains(&0) {
                    return Err(parse_err(lineno, "DIMACS vertices are 1-based"));
                }
                edges.push((uv[0] - 1, uv[1] - 1));
            }
            Some(other) => return Err(parse_err(lineno, format!("unknown line type `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| parse_err(1, "missing problem line"))?;
    Graph::new(n, &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn to_dimacs(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p edge {} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
