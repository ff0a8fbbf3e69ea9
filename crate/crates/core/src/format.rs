//! Text formats.
//!
//! Hypergraph files:
//!
//! ```text
//! # optional comments anywhere
//! hg <n> <m>
//! <vertex ids of edge 1>
//! ...
//! <vertex ids of edge m>
//! ```
//!
//! Witness files hold one closed trail per line, written as the alternating
//! sequence `v0 e<i1> v1 ... v(k-1) e<ik>` with 1-based edge numbers. Corpus
//! files may carry an expectation line `# expect family=YES tour=NO`.

use thiserror::Error;

use crate::hypergraph::{EdgeId, Hypergraph, HypergraphError, Vertex};
use crate::trail::{ClosedTrail, EulerFamily};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}: edge {edge} is empty")]
    EmptyEdge { line: usize, edge: usize },
    #[error("line {line}, column {column}: vertex {vertex} outside 1..{n}")]
    VertexOutOfRange { line: usize, column: usize, vertex: u64, n: usize },
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, column, message: message.into() }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn is_comment(line: &str) -> bool {
    line.trim_start().starts_with('#')
}

fn number(lineno: usize, col: usize, tok: &str, what: &str) -> Result<u64, ParseError> {
    tok.parse::<u64>().map_err(|_| syntax(lineno, col, format!("expected {what}, found `{tok}`")))
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !is_comment(l));
    let (hline, header) = loop {
        match lines.next() {
            None => return Err(syntax(1, 1, "missing `hg <n> <m>` header")),
            Some((_, l)) if l.trim().is_empty() => continue,
            Some(x) => break x,
        }
    };
    let toks = tokens(header);
    if toks.first().map(|t| t.1) != Some("hg") {
        let col = toks.first().map_or(1, |t| t.0);
        return Err(syntax(hline, col, "expected `hg`"));
    }
    if toks.len() != 3 {
        let col = toks.get(3).map_or(header.len() + 1, |t| t.0);
        return Err(syntax(hline, col, "header must be `hg <n> <m>`"));
    }
    let n = number(hline, toks[1].0, toks[1].1, "vertex count")? as usize;
    let m = number(hline, toks[2].0, toks[2].1, "edge count")? as usize;
    if n == 0 {
        return Err(syntax(hline, toks[1].0, "vertex count must be positive"));
    }
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for j in 0..m {
        let (lineno, line) =
            lines.next().ok_or_else(|| syntax(last_line + 1, 1, format!("expected {m} edge lines, found {j}")))?;
        last_line = lineno;
        let toks = tokens(line);
        if toks.is_empty() {
            return Err(ParseError::EmptyEdge { line: lineno, edge: j + 1 });
        }
        let mut edge = Vec::with_capacity(toks.len());
        for (col, tok) in toks {
            let v = number(lineno, col, tok, "vertex id")?;
            if v == 0 || v > n as u64 {
                return Err(ParseError::VertexOutOfRange { line: lineno, column: col, vertex: v, n });
            }
            if edge.contains(&(v as Vertex)) {
                return Err(syntax(lineno, col, format!("vertex {v} repeated in edge {}", j + 1)));
            }
            edge.push(v as Vertex);
        }
        edges.push(edge);
    }
    for (lineno, line) in lines {
        if let Some(&(col, _)) = tokens(line).first() {
            return Err(syntax(lineno, col, "unexpected content after the last edge"));
        }
    }
    Ok(Hypergraph::with_order(n, edges)?)
}

/// Expected spanning verdicts recorded in a corpus file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub family: Option<bool>,
    pub tour: Option<bool>,
}

/// Reads the first `# expect ...` line, if any.
pub fn parse_expectation(text: &str) -> Option<Expectation> {
    let line = text
        .lines()
        .find_map(|l| l.trim_start().strip_prefix('#').map(str::trim).and_then(|l| l.strip_prefix("expect")))?;
    let mut exp = Expectation { family: None, tour: None };
    for tok in line.split_whitespace() {
        let (key, val) = tok.split_once('=')?;
        let val = match val {
            "YES" => true,
            "NO" => false,
            _ => return None,
        };
        match key {
            "family" => exp.family = Some(val),
            "tour" => exp.tour = Some(val),
            _ => return None,
        }
    }
    Some(exp)
}

pub fn expectation_line(exp: &Expectation) -> String {
    let word = |b: bool| if b { "YES" } else { "NO" };
    let mut parts = vec!["# expect".to_string()];
    if let Some(f) = exp.family {
        parts.push(format!("family={}", word(f)));
    }
    if let Some(t) = exp.tour {
        parts.push(format!("tour={}", word(t)));
    }
    parts.join(" ")
}

pub fn parse_trail(line: &str, lineno: usize) -> Result<ClosedTrail, ParseError> {
    let toks = tokens(line);
    if !toks.len().is_multiple_of(2) {
        let col = toks.last().map_or(1, |t| t.0);
        return Err(syntax(lineno, col, "a trail alternates vertices and edges and ends with an edge"));
    }
    let mut anchors = Vec::new();
    let mut edges = Vec::new();
    for (i, (col, tok)) in toks.into_iter().enumerate() {
        if i % 2 == 0 {
            let v = number(lineno, col, tok, "vertex id")?;
            let v = Vertex::try_from(v).map_err(|_| syntax(lineno, col, "vertex id too large"))?;
            anchors.push(v);
        } else {
            let num = tok
                .strip_prefix('e')
                .ok_or_else(|| syntax(lineno, col, format!("expected edge `e<i>`, found `{tok}`")))?;
            let num = number(lineno, col, num, "edge number")? as usize;
            let id = EdgeId::from_number(num).ok_or_else(|| syntax(lineno, col, "edge numbers start at 1"))?;
            edges.push(id);
        }
    }
    Ok(ClosedTrail::from_parts(anchors, edges))
}

pub fn parse_witness(text: &str) -> Result<EulerFamily, ParseError> {
    let mut trails = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if is_comment(line) || line.trim().is_empty() {
            continue;
        }
        trails.push(parse_trail(line, i + 1)?);
    }
    Ok(EulerFamily::new(trails))
}

pub fn format_witness(family: &EulerFamily) -> String {
    family.trails.iter().map(|t| format!("{t}\n")).collect()
}
