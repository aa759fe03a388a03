//! Plain-text edge-list graphs.
//!
//! ```text
//! # comment
//! n m
//! u v w      (m lines; 0 <= u, v < n; w a positive decimal)
//! ```
//!
//! Decimal weights are scaled by the smallest power of ten that makes all of
//! them integral. Parallel edges are merged by summing and self-loops are
//! dropped.

use std::fmt::Write as _;

use termcut_core::{Graph, Weight};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("missing \"n m\" header line")]
    MissingHeader,
    #[error("expected {expected} edge lines, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("weights overflow after scaling by 10^{0}")]
    ScaleOverflow(u32),
    #[error(transparent)]
    Graph(#[from] termcut_core::Error),
}

fn line_err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line { line, message: message.into() }
}

/// A parsed graph and the factor its weights were multiplied by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub scale: u64,
}

struct RawWeight {
    line: usize,
    int: u64,
    frac: String,
}

fn parse_weight(token: &str, line: usize) -> Result<RawWeight, ParseError> {
    let bad = || line_err(line, format!("invalid weight {token:?}"));
    if token.starts_with('-') {
        return Err(line_err(line, format!("weight must be positive, got {token}")));
    }
    let (int, frac) = token.split_once('.').unwrap_or((token, ""));
    let digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if (int.is_empty() && frac.is_empty()) || !digits(int) || !digits(frac) {
        return Err(bad());
    }
    let int = if int.is_empty() { 0 } else { int.parse().map_err(|_| line_err(line, "weight too large"))? };
    let frac = frac.trim_end_matches('0').to_string();
    if int == 0 && frac.is_empty() {
        return Err(line_err(line, format!("weight must be positive, got {token}")));
    }
    Ok(RawWeight { line, int, frac })
}

fn parse_index(token: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    token.parse().map_err(|_| line_err(line, format!("invalid {what} {token:?}")))
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = fields[..] else {
        return Err(line_err(header_line, "header must be \"n m\""));
    };
    let n = parse_index(n, header_line, "vertex count")?;
    let m = parse_index(m, header_line, "edge count")?;

    let mut raw = Vec::with_capacity(m);
    for (line, body) in lines {
        let fields: Vec<&str> = body.split_whitespace().collect();
        let [u, v, w] = fields[..] else {
            return Err(line_err(line, "edge line must be \"u v w\""));
        };
        let u = parse_index(u, line, "vertex")?;
        let v = parse_index(v, line, "vertex")?;
        for x in [u, v] {
            if x >= n {
                return Err(line_err(line, format!("vertex {x} out of range (n = {n})")));
            }
        }
        if raw.len() == m {
            return Err(ParseError::EdgeCount { expected: m, found: m + 1 });
        }
        raw.push((u, v, parse_weight(w, line)?));
    }
    if raw.len() != m {
        return Err(ParseError::EdgeCount { expected: m, found: raw.len() });
    }

    let digits = raw.iter().map(|(_, _, w)| w.frac.len()).max().unwrap_or(0) as u32;
    let scale = 10u64.checked_pow(digits).ok_or(ParseError::ScaleOverflow(digits))?;
    let mut edges = Vec::with_capacity(m);
    for (u, v, w) in raw {
        let frac_value = if w.frac.is_empty() {
            0
        } else {
            let f: u64 = w.frac.parse().map_err(|_| ParseError::ScaleOverflow(digits))?;
            f * 10u64.pow(digits - w.frac.len() as u32)
        };
        let scaled = w
            .int
            .checked_mul(scale)
            .and_then(|x| x.checked_add(frac_value))
            .ok_or_else(|| line_err(w.line, format!("weight overflows after scaling by {scale}")))?;
        edges.push((u, v, scaled));
    }
    let graph = Graph::new(n, edges)?;
    Ok(ParsedGraph { graph, scale })
}

/// `value / scale` as a decimal string without trailing zeros.
pub fn format_weight(value: Weight, scale: u64) -> String {
    let (int, frac) = (value.get() / scale, value.get() % scale);
    if frac == 0 {
        return int.to_string();
    }
    let width = scale.ilog10() as usize;
    let frac = format!("{frac:0width$}");
    format!("{int}.{}", frac.trim_end_matches('0'))
}

/// Serializes a graph in the edge-list format, dividing weights by `scale`.
pub fn write_edge_list(g: &Graph, scale: u64) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.u, e.v, format_weight(e.weight, scale)).unwrap();
    }
    out
}
